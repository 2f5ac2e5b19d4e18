"""Trace generation from a model by path or state coverage."""
from __future__ import annotations

from specmine.automata import enumerate_behaviors, reachable
from specmine.errors import ConfigError, ModelError, NotDeterministicError
from specmine.traces import TraceSet

PATH = "path"
STATE = "state"
STRATEGIES = (PATH, STATE)


def _fsa(model):
    return getattr(model, "model", model)


def _visited(fsa, trace):
    s = fsa.initial
    seen = {s}
    for op in trace:
        (s,) = fsa.successors[s][op]
        seen.add(s)
    return frozenset(seen)


def _live_states(fsa):
    """Reachable states from which some accepting state can be reached."""
    seen = reachable(fsa)
    pred = {}
    for a, _, b in fsa.transitions:
        pred.setdefault(b, set()).add(a)
    live = set(fsa.accepting & seen)
    todo = list(live)
    while todo:
        s = todo.pop()
        for p in pred.get(s, ()):
            if p not in live:
                live.add(p)
                todo.append(p)
    return live & seen


def _greedy_state_cover(fsa, behaviors):
    if not fsa.deterministic:
        raise NotDeterministicError("state coverage needs a deterministic model")
    target = _live_states(fsa)
    candidates = sorted(behaviors, key=lambda t: (len(t), t))
    visits = {t: _visited(fsa, t) for t in candidates}
    covered = set()
    chosen = []
    while not target <= covered:
        # most newly covered states; ties go to the shorter, then smaller trace
        best = max(candidates, key=lambda t: len(visits[t] - covered))
        gain = visits[best] - covered
        if not gain:
            break
        chosen.append(best)
        covered |= gain
    return chosen


def generate_traces(model, strategy=PATH, visit_limit=2):
    """Coverage traces of ``model`` (a GroundTruthModel or Fsa).

    The empty trace is never emitted: a corpus holds conversations of at
    least one operation.
    """
    if strategy not in STRATEGIES:
        raise ConfigError(f"unknown strategy {strategy!r}; expected one of {', '.join(STRATEGIES)}")
    fsa = _fsa(model)
    if reachable(fsa).isdisjoint(fsa.accepting):
        raise ModelError("model has no reachable accepting state")
    behaviors = [t for t in enumerate_behaviors(fsa, visit_limit) if t]
    if strategy == STATE:
        behaviors = _greedy_state_cover(fsa, behaviors)
    if not behaviors:
        raise ModelError("model accepts no non-empty trace within the visit limit")
    return TraceSet(frozenset(behaviors))
