"""Heuristic-driven generalization of single traces, joined by truthful minimization.

Each trace is turned into its own small automaton by scanning it left to
right. At every position a back-to-back repeated block (a cycle) is tried
before a run of one operation (a loop); either is only generalized when the
corpus holds the supporting traces, otherwise it is kept as a literal path.
The per-trace automata are then joined with empty moves, determinized and
minimized, which merges states without adding behavior.
"""
from __future__ import annotations

from specmine.automata import EMPTY, Fsa, determinize, epsilon_union, minimize, renumber
from specmine.errors import ConfigError, EmptyCorpusError
from specmine.miners.heuristics import (
    CycleEvidence,
    LoopEvidence,
    cycle_generalize,
    find_tandem_repeat,
    loop_generalize,
    multiloop_admitted,
)


class _Lifted:
    """Membership in the enclosing corpus for variants of a cycle body.

    A variant ``v`` of the body stands for the enclosing trace with every
    full repetition of the body replaced by ``v``.
    """

    def __init__(self, outer, prefix, repeats, partial, suffix):
        self.outer = outer
        self.prefix = prefix
        self.repeats = repeats
        self.partial = partial
        self.suffix = suffix

    def __contains__(self, variant):
        return self.prefix + tuple(variant) * self.repeats + self.partial + self.suffix in self.outer


class _Builder:
    def __init__(self):
        self.count = 0
        self.transitions = set()
        self.succ = {}

    def new(self):
        s = f"s{self.count}"
        self.count += 1
        self.succ[s] = {}
        return s

    def add(self, a, label, b):
        self.transitions.add((a, label, b))
        self.succ[a].setdefault(label, set()).add(b)

    def chain(self, tip, ops):
        for op in ops:
            nxt = self.new()
            self.add(tip, op, nxt)
            tip = nxt
        return tip

    def detach(self, tip):
        """A fresh state behind an empty move, free of the tip's loops and rings."""
        nxt = self.new()
        self.add(tip, EMPTY, nxt)
        return nxt

    def _closure(self, states):
        seen = set(states)
        todo = list(seen)
        while todo:
            s = todo.pop()
            for t in self.succ[s].get(EMPTY, ()):
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
        return seen

    def read(self, start, ops):
        current = self._closure([start])
        for op in ops:
            nxt = set()
            for s in current:
                nxt.update(self.succ[s].get(op, ()))
            current = self._closure(nxt)
        return current


class _Ring:
    __slots__ = ("start", "end", "unit", "offset", "repeats")

    def __init__(self, start, end, unit, offset, repeats):
        self.start = start
        self.end = end
        self.unit = unit
        self.offset = offset
        self.repeats = repeats


def _nesting_supported(trace, ring, end, corpus):
    """Whether the corpus shows the region ``trace[ring.end:end]`` repeating
    inside every pass of ``ring`` rather than only after leaving it."""
    inner = trace[ring.end:end]
    head, tail = ring.unit[:ring.offset], ring.unit[ring.offset:]
    witness = trace[:ring.start] + (head + inner + tail) * ring.repeats + head + trace[end:]
    return witness in corpus


def _generalize(trace, corpus, rc, b, start):
    tip = start
    loops = {}   # state -> [start of its loop region in trace, set of loop ops]
    rings = {}   # state -> _Ring it sits on as the exit
    i = 0
    n = len(trace)
    while i < n:
        ev = find_tandem_repeat(trace, i, rc)

        if isinstance(ev, CycleEvidence):
            end = i + ev.consumed
            shape = cycle_generalize(ev, corpus, rc)
            if shape is None:
                tip = b.chain(tip, trace[i:end])
                i = end
                continue
            entry = tip
            if tip in loops or (tip in rings and not _nesting_supported(trace, rings[tip], end, corpus)):
                entry = b.detach(tip)
            unit = ev.unit
            if shape.mandatory:
                entry = b.chain(entry, unit)
            body = _Lifted(corpus, trace[:i], ev.full_repeats, unit[:shape.exit_offset], trace[end:])
            body_end = _generalize(unit, body, rc, b, entry)
            b.add(body_end, EMPTY, entry)
            exits = b.read(entry, unit[:shape.exit_offset])
            if len(exits) == 1:
                tip = next(iter(exits))
            else:
                tip = b.new()
                for s in sorted(exits):
                    b.add(s, EMPTY, tip)
            rings[tip] = _Ring(i, end, unit, shape.exit_offset, ev.full_repeats)
            i = end
            continue

        if isinstance(ev, LoopEvidence):
            op = ev.op
            end = i + ev.bt
            on_ring_ok = tip not in rings or _nesting_supported(trace, rings[tip], end, corpus)
            if tip in loops:
                region, ops = loops[tip]
                wanted = ops | {op}
                if (len(wanted) >= 2 and on_ring_ok
                        and multiloop_admitted(trace[:region], wanted, trace[end:], rc, corpus)):
                    if op not in ops:
                        b.add(tip, op, tip)
                        ops.add(op)
                    i = end
                    continue
            st = loop_generalize(ev, corpus, rc)
            if st is None:
                tip = b.chain(tip, trace[i:end])
                i = end
                continue
            anchor = tip
            if st == 0 and (tip in loops or not on_ring_ok):
                anchor = b.detach(tip)
            anchor = b.chain(anchor, (op,) * st)
            b.add(anchor, op, anchor)
            loops.setdefault(anchor, [i + st, set()])[1].add(op)
            tip = anchor
            i = end
            continue

        tip = b.chain(tip, trace[i:i + 1])
        i += 1
    return tip


def _check_rc(rc):
    if not isinstance(rc, int) or rc < 2:
        raise ConfigError(f"repeat count must be an integer >= 2, got {rc!r}")


def generalize_trace(trace, corpus, rc=2):
    """Automaton for one trace, generalized only where ``corpus`` supports it."""
    _check_rc(rc)
    trace = tuple(trace)
    b = _Builder()
    start = b.new()
    tip = _generalize(trace, corpus, rc, b, start)
    fsa = Fsa.from_transitions(b.transitions, start, [tip], states=b.succ, alphabet=trace)
    return renumber(fsa)


def specminer(traces, rc=2):
    """Mine a deterministic, minimal model that accepts every trace in ``traces``."""
    _check_rc(rc)
    if not len(traces):
        raise EmptyCorpusError("cannot mine an empty corpus")
    models = [generalize_trace(t, traces, rc) for t in sorted(traces.traces)]
    return minimize(determinize(epsilon_union(models)))
