import pytest

from conftest import T
from specmine.automata import accepts
from specmine.miners.heuristics import (
    CycleEvidence,
    CycleShape,
    LoopEvidence,
    cycle_generalize,
    find_tandem_repeat,
    is_primitive,
    loop_generalize,
    multiloop_admitted,
    multiloop_rep_traces,
)


class TestFindTandemRepeat:
    def test_cycle(self):
        ev = find_tandem_repeat(T("p a b c a b c s"), 1, 2)
        assert ev == CycleEvidence(1, T("a b c"), 2, 0, T("p"), T("s"))

    def test_cycle_with_partial(self):
        ev = find_tandem_repeat(T("p a b c a b c a s"), 1, 2)
        assert ev.unit == T("a b c") and ev.partial_len == 1 and ev.suffix == T("s")
        assert ev.consumed == 7

    def test_loop(self):
        ev = find_tandem_repeat(T("p a a a a s"), 1, 2)
        assert ev == LoopEvidence("a", 4, 0, T("p"), T("s"))

    def test_nothing(self):
        assert find_tandem_repeat(T("p a b s"), 1, 2) is None

    def test_longest_unit(self):
        ev = find_tandem_repeat(T("a b a b a b a b"), 0, 2)
        assert ev.unit == T("a b") and ev.full_repeats == 4

    def test_nonprimitive_unit_skipped(self):
        assert isinstance(find_tandem_repeat(T("a a a a"), 0, 2), LoopEvidence)

    def test_rc_respected(self):
        assert find_tandem_repeat(T("a b a b"), 0, 3) is None
        assert find_tandem_repeat(T("a a"), 0, 3) is None

    def test_nested_outer_unit(self):
        ev = find_tandem_repeat(T("p a m n m n b c a m n m n b c a s"), 1, 2)
        assert ev.unit == T("a m n m n b c") and ev.partial_len == 1

    def test_is_primitive(self):
        assert is_primitive(T("a b c"))
        assert not is_primitive(T("a b a b"))
        assert not is_primitive(T("a a"))


class TestLoopGeneralize:
    ev = LoopEvidence("a", 4, 0, T("p"), T("s"))

    @pytest.mark.parametrize("support,want", [("p s", 0), ("p a s", 1), ("p a a s", 2)])
    def test_cases(self, support, want):
        assert loop_generalize(self.ev, {T(support)}, 2) == want

    def test_first_hit_wins(self):
        assert loop_generalize(self.ev, {T("p s"), T("p a a s")}, 2) == 0

    def test_bound_includes_equality(self):
        # bt - st == rc is still searched
        assert loop_generalize(LoopEvidence("a", 3, 0, (), ()), {T("a")}, 2) == 1

    def test_none(self):
        assert loop_generalize(self.ev, {T("p a a a s")}, 2) is None


class TestMultiloop:
    def test_seven_traces(self):
        got = multiloop_rep_traces(T("p"), {"a", "b"}, T("s"), 2)
        assert got == {T(x) for x in ("p s", "p a s", "p b s", "p a a s", "p a b s", "p b a s", "p b b s")}

    @pytest.mark.parametrize("l,rc", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
    def test_count_formula(self, l, rc):
        ops = "abcd"[:l]
        assert len(multiloop_rep_traces((), ops, (), rc)) == sum(l ** i for i in range(rc + 1))

    def test_needs_two_ops(self):
        with pytest.raises(ValueError):
            multiloop_rep_traces((), {"a"}, (), 2)

    def test_admission(self):
        reps = multiloop_rep_traces(T("p"), {"a", "b"}, T("s"), 2)
        assert multiloop_admitted(T("p"), {"a", "b"}, T("s"), 2, reps)
        assert not multiloop_admitted(T("p"), {"a", "b"}, T("s"), 2, reps - {T("p b a s")})


class TestCycleGeneralize:
    def ev(self, text, idx=1):
        return find_tandem_repeat(T(text), idx, 2)

    def test_exit_at_start(self):
        assert cycle_generalize(self.ev("p a b c a b c s"), {T("p s")}, 2) == CycleShape(T("a b c"), 0)

    @pytest.mark.parametrize("trace,support,d", [
        ("p a b c a b c a s", "p a s", 1),
        ("p a b c a b c a b s", "p a b s", 2),
    ])
    def test_exit_offsets(self, trace, support, d):
        assert cycle_generalize(self.ev(trace), {T(support)}, 2) == CycleShape(T("a b c"), d)

    def test_two_cycle_cases(self):
        ev = self.ev("p a b a b s")
        assert cycle_generalize(ev, {T("p s")}, 2) == CycleShape(T("a b"), 0, 0)
        assert cycle_generalize(ev, {T("p a b s")}, 2) == CycleShape(T("a b"), 0, 1)

    def test_no_support(self):
        assert cycle_generalize(self.ev("p a b c a b c s"), {T("p a b c s")}, 2) is None

    def test_fragment_languages(self):
        ring = CycleShape(T("a b c"), 1).to_fsa()
        assert accepts(ring, T("a")) and accepts(ring, T("a b c a"))
        assert not accepts(ring, ()) and not accepts(ring, T("a b c"))
        once = CycleShape(T("a b"), 0, 1).to_fsa()
        assert not accepts(once, ()) and accepts(once, T("a b")) and accepts(once, T("a b a b a b"))
