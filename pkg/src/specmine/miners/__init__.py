"""Model inference: kTail, temporal rules and heuristic generalization."""
from specmine.miners.heuristics import (
    CycleEvidence,
    CycleShape,
    LoopEvidence,
    cycle_generalize,
    find_tandem_repeat,
    loop_generalize,
    multiloop_admitted,
    multiloop_rep_traces,
)
from specmine.miners.ktail import ktail
from specmine.miners.rules import FUTURE, PAST, TemporalRule, format_rules, mine_temporal_rules
from specmine.miners.specminer import generalize_trace, specminer

__all__ = [
    "CycleEvidence", "CycleShape", "LoopEvidence", "cycle_generalize", "find_tandem_repeat",
    "loop_generalize", "multiloop_admitted", "multiloop_rep_traces", "ktail", "FUTURE", "PAST",
    "TemporalRule", "format_rules", "mine_temporal_rules", "generalize_trace", "specminer",
]
