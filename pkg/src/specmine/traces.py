"""Trace corpora: parsing, serialisation and the prefix tree acceptor.

A trace is a plain tuple of operation names. The corpus text format has one
trace per line with operations separated by commas and/or whitespace; blank
lines and lines starting with ``#`` are skipped.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from specmine.automata import Fsa
from specmine.errors import EmptyCorpusError, ParseError

_SEPARATORS = re.compile(r"[,\s]+")


@dataclass(frozen=True)
class TraceSet:
    """A deduplicated set of traces.

    ``duplicates`` records how many input lines were dropped as repeats;
    it does not take part in equality.
    """

    traces: frozenset
    duplicates: int = 0

    def __post_init__(self):
        traces = frozenset(tuple(t) for t in self.traces)
        for t in traces:
            if not t:
                raise ValueError("traces must contain at least one operation")
        object.__setattr__(self, "traces", traces)

    @classmethod
    def of(cls, *traces):
        return cls(frozenset(tuple(t) for t in traces))

    @property
    def alphabet(self):
        return frozenset(op for t in self.traces for op in t)

    def __iter__(self):
        return iter(sorted(self.traces))

    def __len__(self):
        return len(self.traces)

    def __contains__(self, trace):
        return tuple(trace) in self.traces

    def __eq__(self, other):
        if not isinstance(other, TraceSet):
            return NotImplemented
        return self.traces == other.traces

    def __hash__(self):
        return hash(self.traces)


def parse_traces(text):
    """Parse corpus text (a string or anything with ``read()``)."""
    if hasattr(text, "read"):
        text = text.read()
    seen = set()
    dupes = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        ops = tuple(op for op in _SEPARATORS.split(stripped) if op)
        if not ops:
            raise ParseError("line has separators but no operations", line=lineno)
        if ops in seen:
            dupes += 1
        seen.add(ops)
    if not seen:
        raise EmptyCorpusError("corpus contains no traces")
    return TraceSet(frozenset(seen), dupes)


def serialize_traces(traces):
    """One comma-separated trace per line, sorted lexicographically."""
    return "".join(",".join(t) + "\n" for t in sorted(traces.traces))


def build_pta(traces):
    """Prefix tree acceptor: one state per distinct prefix, trace ends accepting."""
    if not len(traces):
        raise EmptyCorpusError("cannot build a prefix tree from an empty corpus")
    # BFS numbering by (length, lexicographic) prefix order
    prefixes = {()}
    for t in traces.traces:
        for i in range(1, len(t) + 1):
            prefixes.add(t[:i])
    order = sorted(prefixes, key=lambda p: (len(p), p))
    name = {p: f"q{i}" for i, p in enumerate(order)}
    transitions = frozenset((name[p[:-1]], p[-1], name[p]) for p in order if p)
    return Fsa(frozenset(name.values()), traces.alphabet, transitions, name[()],
               frozenset(name[t] for t in traces.traces))
