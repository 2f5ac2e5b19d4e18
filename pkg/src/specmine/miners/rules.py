"""Two-event temporal rules that hold on every trace of a corpus."""
from dataclasses import dataclass
from itertools import permutations

FUTURE = "future"
PAST = "past"


@dataclass(frozen=True, order=True)
class TemporalRule:
    """``a -> b``: every a is eventually followed by b.
    ``a <- b``: every b is preceded by some earlier a.
    """

    kind: str
    antecedent: str
    consequent: str

    def __str__(self):
        arrow = "->" if self.kind == FUTURE else "<-"
        return f"{self.antecedent} {arrow} {self.consequent}"


def _future_holds(trace, a, b):
    pending = False
    for op in trace:
        if op == a:
            pending = True
        elif op == b:
            pending = False
    return not pending


def _past_holds(trace, a, b):
    seen_a = False
    for op in trace:
        if op == a:
            seen_a = True
        elif op == b and not seen_a:
            return False
    return True


def mine_temporal_rules(traces):
    ops = sorted({op for t in traces for op in t})
    rules = set()
    for a, b in permutations(ops, 2):
        if all(_future_holds(t, a, b) for t in traces):
            rules.add(TemporalRule(FUTURE, a, b))
        if all(_past_holds(t, a, b) for t in traces):
            rules.add(TemporalRule(PAST, a, b))
    return rules


def format_rules(rules):
    return "".join(line + "\n" for line in sorted(str(r) for r in rules))
