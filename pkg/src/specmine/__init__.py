"""Finite-state behavior models mined from interaction traces."""
from specmine.automata import (
    EMPTY,
    BehaviorSet,
    Fsa,
    accepts,
    count_behaviors,
    determinize,
    enumerate_behaviors,
    epsilon_union,
    minimize,
)
from specmine.traces import TraceSet, build_pta, parse_traces, serialize_traces

__version__ = "0.1.0"

__all__ = [
    "EMPTY", "BehaviorSet", "Fsa", "accepts", "count_behaviors", "determinize",
    "enumerate_behaviors", "epsilon_union", "minimize", "TraceSet", "build_pta",
    "parse_traces", "serialize_traces",
]
