from fractions import Fraction

import pytest

from conftest import TRACE1, TRACE2, TRACE3, T
from oracles import flower_word_count
from specmine.automata import Fsa, accepts, enumerate_behaviors, epsilon_union, path_fsa
from specmine.errors import ConfigError, ModelError
from specmine.evalharness import (
    PUBLISHED,
    RECONSTRUCTED,
    EvalReport,
    GroundTruthModel,
    builtin_models,
    flower,
    generate_traces,
    get_model,
    precision_recall,
    render_table,
    reports_to_csv,
)
from specmine.miners import ktail, specminer
from specmine.traces import build_pta


class TestModels:
    def test_catalogue(self):
        models = builtin_models()
        names = [m.name for m in models]
        assert names == ["retailer", "login", "StringTokenizer", "ZipOutputStream", "amazon-ec2", "cvs"]
        assert all(m.model.deterministic for m in models)
        prov = {m.name: m.provenance for m in models}
        assert prov["retailer"] == prov["login"] == PUBLISHED
        assert prov["cvs"] == prov["amazon-ec2"] == RECONSTRUCTED

    def test_alphabets(self):
        assert get_model("StringTokenizer").model.alphabet == {"init", "hasMoreTokens", "nextToken"}
        assert get_model("ZipOutputStream").model.alphabet == {
            "ZipOutputStream", "putNextEntry", "write", "closeEntry", "close"}
        assert get_model("amazon-ec2").model.alphabet == {
            "login", "runInstance", "startInstance", "stopInstance", "rebootInstance",
            "terminateInstance", "logout"}
        assert len(get_model("cvs").model.alphabet) == 16

    def test_retailer(self):
        m = get_model("retailer").model
        assert accepts(m, TRACE3)
        assert not accepts(m, T("regLogin order ship inv pay"))

    def test_login(self):
        m = get_model("login").model
        assert accepts(m, T("fail fail fail fail secQuestion login logout"))
        assert accepts(m, T("fail fail login logout"))
        assert not accepts(m, T("fail fail fail fail login logout"))

    def test_string_tokenizer(self):
        assert accepts(get_model("StringTokenizer").model, T("init hasMoreTokens nextToken hasMoreTokens"))

    def test_must_be_deterministic(self):
        with pytest.raises(ModelError):
            GroundTruthModel("x", epsilon_union([path_fsa(TRACE1)]), RECONSTRUCTED)

    def test_unknown(self):
        with pytest.raises(KeyError):
            get_model("nope")


class TestGenerate:
    def test_path_contains_samples(self):
        ts = generate_traces(get_model("retailer"), "path", 2)
        assert {TRACE1, TRACE2, TRACE3} <= ts.traces
        assert len(ts) == 6

    def test_single_path_state(self):
        assert generate_traces(path_fsa(("a", "b")), "state", 3).traces == {("a", "b")}

    @pytest.mark.parametrize("model", builtin_models(), ids=lambda m: m.name)
    def test_state_cover(self, model):
        ts = generate_traces(model, "state", 2)
        fsa = model.model
        visited = set()
        for t in ts:
            s = fsa.initial
            visited.add(s)
            for op in t:
                (s,) = fsa.successors[s][op]
                visited.add(s)
        assert visited == fsa.states
        assert ts.traces <= enumerate_behaviors(fsa, 2).traces

    def test_state_cover_retailer_size(self):
        assert len(generate_traces(get_model("retailer"), "state", 2)) == 2

    def test_no_accepting(self):
        with pytest.raises(ModelError):
            generate_traces(Fsa.from_transitions([("a", "x", "b")], "a"), "path", 2)

    def test_bad_strategy(self):
        with pytest.raises(ConfigError):
            generate_traces(get_model("retailer"), "random", 2)

    def test_empty_trace_dropped(self):
        m = Fsa.from_transitions([("a", "x", "a")], "a", ["a"])
        assert generate_traces(m, "path", 2).traces == {("x",), ("x", "x")}


class TestPrecisionRecall:
    def test_identity(self):
        g = get_model("retailer")
        r = precision_recall(g.model, g, 2)
        assert (r.precision, r.recall) == (1, 1)

    def test_flower(self):
        g = get_model("retailer")
        r = precision_recall(flower(g.model.alphabet), g, 2)
        assert r.recall == 1
        assert r.mined_behaviors == flower_word_count(7, 2)
        # accepted: regLogin or premLogin, zero to two cats, then the fixed tail
        assert r.precision == Fraction(6, flower_word_count(7, 2))
        assert r.precision < Fraction(1, 100)

    def test_specminer_retailer(self):
        g = get_model("retailer")
        r = precision_recall(specminer(generate_traces(g, "path", 2), 2), g, 2)
        assert (r.precision, r.recall) == (1, 1)

    def test_ktail_two_traces(self, two_traces):
        g = get_model("retailer")
        r = precision_recall(ktail(two_traces, 1), g, 2)
        assert r.precision < 1

    def test_nondeterministic_mined(self):
        g = get_model("retailer")
        nfa = epsilon_union([path_fsa(TRACE1), path_fsa(TRACE3)])
        r = precision_recall(nfa, g, 2)
        assert r.precision == 1 and r.recall == Fraction(2, 6)

    def test_empty_mined_flagged(self):
        g = get_model("retailer")
        r = precision_recall(Fsa.from_transitions([], "q0", alphabet=["x"]), g, 2)
        assert r.precision == 1 and r.empty_mined and r.warnings
        assert r.recall == 0

    def test_symmetry(self):
        g = get_model("retailer")
        m = ktail(generate_traces(g, "path", 2), 1)
        forward = precision_recall(m, g, 2)
        backward = precision_recall(g.model, GroundTruthModel("m", m, RECONSTRUCTED), 2)
        assert forward.precision == backward.recall and forward.recall == backward.precision

    @pytest.mark.parametrize("model", builtin_models(), ids=lambda m: m.name)
    def test_pta_of_path_corpus(self, model):
        pta = build_pta(generate_traces(model, "path", 2))
        r = precision_recall(pta, model, 2)
        assert (r.precision, r.recall) == (1, 1)

    def test_fields(self):
        g = get_model("retailer")
        r = precision_recall(g.model, g, 2, elapsed_ms=12.5, algorithm="x", params="k=1")
        assert isinstance(r.precision, Fraction)
        assert r.mined_states == 11 and r.mined_transitions == 12 and r.visit_limit == 2
        assert r.csv_row() == ("retailer", "x", "k=1", "1.000", "1.000", "12.5", "11", "12")


def test_csv_and_table():
    a = EvalReport(Fraction(1, 3), Fraction(1), 5.0, 3, 4, 2, name="sys", algorithm="kTail", params="k=1")
    text = reports_to_csv([a], timing=False)
    assert text == "name,algorithm,params,P,R,elapsed_ms,states,transitions\nsys,kTail,k=1,0.333,1.000,,3,4\n"
    table = render_table([a])
    assert "kTail, k=1" in table and "0.333" in table and "sys" in table
