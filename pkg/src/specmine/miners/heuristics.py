"""Evidence detection and support checks for loop and cycle generalization.

``corpus`` arguments only need to support ``trace in corpus`` for tuples,
so a :class:`~specmine.traces.TraceSet`, a plain set of tuples, or a lifted
view used while recursing into a cycle body all work.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from specmine.automata import Fsa


@dataclass(frozen=True)
class CycleEvidence:
    """``trace == prefix + unit * full_repeats + unit[:partial_len] + suffix``"""

    start_index: int
    unit: tuple
    full_repeats: int
    partial_len: int
    prefix: tuple
    suffix: tuple

    @property
    def consumed(self):
        return len(self.unit) * self.full_repeats + self.partial_len


@dataclass(frozen=True)
class LoopEvidence:
    """A run of ``bt`` copies of ``op`` between ``prefix`` and ``suffix``."""

    op: str
    bt: int
    st: int
    prefix: tuple
    suffix: tuple

    @property
    def consumed(self):
        return self.bt


@dataclass(frozen=True)
class CycleShape:
    """Accepted cycle: ``unit`` repeated (at least ``mandatory`` times), leaving
    the ring ``exit_offset`` operations after its entry."""

    unit: tuple
    exit_offset: int
    mandatory: int = 0

    def to_fsa(self):
        """The fragment on its own: entry is initial, the exit state accepts."""
        n = len(self.unit)
        transitions = []
        entry = "c0"
        if self.mandatory:
            # one plain traversal before the ring
            prev = "c0"
            for j, op in enumerate(self.unit):
                nxt = "r0" if j == n - 1 else f"m{j + 1}"
                transitions.append((prev, op, nxt))
                prev = nxt
            entry = "r0"
        ring = [entry] + [f"r{j}" for j in range(1, n)]
        for j, op in enumerate(self.unit):
            transitions.append((ring[j], op, ring[(j + 1) % n]))
        return Fsa.from_transitions(transitions, "c0", [ring[self.exit_offset]])


def is_primitive(unit):
    """False when ``unit`` is itself a shorter block repeated, like (a, a) or (a, b, a, b)."""
    n = len(unit)
    for p in range(1, n // 2 + 1):
        if n % p == 0 and unit[:p] * (n // p) == unit:
            return False
    return True


def find_tandem_repeat(trace, index, rc):
    """Cycle evidence for the longest primitive unit (length >= 2) starting at
    ``index`` that repeats back to back at least ``rc`` times; failing that,
    loop evidence for a run of ``trace[index]`` of length >= rc; else None.
    """
    trace = tuple(trace)
    n = len(trace)
    for size in range((n - index) // rc, 1, -1):
        unit = trace[index:index + size]
        if not is_primitive(unit):
            continue
        count = 1
        pos = index + size
        while trace[pos:pos + size] == unit:
            count += 1
            pos += size
        if count < rc:
            continue
        d = 0
        while pos + d < n and trace[pos + d] == unit[d]:
            d += 1
        return CycleEvidence(index, unit, count, d, trace[:index], trace[pos + d:])
    op = trace[index]
    run = 1
    while index + run < n and trace[index + run] == op:
        run += 1
    if run >= rc:
        return LoopEvidence(op, run, 0, trace[:index], trace[index + run:])
    return None


def loop_generalize(evidence, corpus, rc):
    """Number of mandatory repetitions before the loop, or None for no loop.

    Supportive traces ``prefix + op * st + suffix`` are tried for
    st = 0, 1, ... as long as ``bt - st >= rc``.
    """
    ev = evidence
    for st in range(0, ev.bt - rc + 1):
        if ev.prefix + (ev.op,) * st + ev.suffix in corpus:
            return st
    return None


def multiloop_rep_traces(prefix, loop_ops, suffix, rc):
    """Every ``prefix + w + suffix`` with ``w`` over ``loop_ops`` of length 0..rc."""
    ops = sorted(set(loop_ops))
    if len(ops) < 2:
        raise ValueError("a multi-loop needs at least two loop operations")
    prefix, suffix = tuple(prefix), tuple(suffix)
    reps = set()
    for length in range(rc + 1):
        for w in product(ops, repeat=length):
            reps.add(prefix + w + suffix)
    return frozenset(reps)


def multiloop_admitted(prefix, loop_ops, suffix, rc, corpus):
    return all(t in corpus for t in multiloop_rep_traces(prefix, loop_ops, suffix, rc))


def cycle_generalize(evidence, corpus, rc):
    """Decide how a detected cycle generalizes, or None to keep it literal.

    The exit position follows the trailing partial repeat. A two-operation
    unit without the zero-iteration witness may still form a cycle that
    requires one traversal, when ``prefix + unit + suffix`` was observed.
    """
    ev = evidence
    d = ev.partial_len
    if ev.prefix + ev.unit[:d] + ev.suffix in corpus:
        return CycleShape(ev.unit, d, 0)
    if len(ev.unit) == 2 and d == 0 and ev.prefix + ev.unit + ev.suffix in corpus:
        return CycleShape(ev.unit, 0, 1)
    return None

