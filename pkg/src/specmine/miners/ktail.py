"""kTail: merge prefix-tree states whose k-futures coincide."""
from specmine.automata import Fsa, determinize, minimize
from specmine.errors import ConfigError, EmptyCorpusError
from specmine.traces import build_pta


def _find(parent, s):
    root = s
    while parent[root] != root:
        root = parent[root]
    while parent[s] != root:
        parent[s], s = root, parent[s]
    return root


def k_tails(succ, accepting, k):
    """k-tail of every state of a (possibly nondeterministic) machine.

    ``succ`` maps state -> {label: set(targets)}. A tail is a label sequence
    of length k, or a shorter one that can end in an accepting state.
    """
    tails = {}
    for start in succ:
        found = set()
        frontier = {((), start)}
        for depth in range(k + 1):
            nxt = set()
            for seq, s in frontier:
                if depth == k:
                    found.add(seq)
                    continue
                if s in accepting:
                    found.add(seq)
                for label, targets in succ[s].items():
                    for t in targets:
                        nxt.add((seq + (label,), t))
            frontier = nxt
        tails[start] = frozenset(found)
    return tails


def ktail(traces, k):
    """Mine a model with kTail, iterating merges on the quotient to a fixpoint."""
    if not isinstance(k, int) or k < 1:
        raise ConfigError(f"k must be an integer >= 1, got {k!r}")
    if not len(traces):
        raise EmptyCorpusError("cannot mine an empty corpus")
    pta = build_pta(traces)
    parent = {s: s for s in pta.states}
    while True:
        succ = {}
        for s in pta.states:
            succ.setdefault(_find(parent, s), {})
        for a, label, b in pta.transitions:
            succ[_find(parent, a)].setdefault(label, set()).add(_find(parent, b))
        accepting = {_find(parent, s) for s in pta.accepting}
        tails = k_tails(succ, accepting, k)
        groups = {}
        for block in sorted(tails):
            groups.setdefault(tails[block], []).append(block)
        merged = False
        for members in groups.values():
            for other in members[1:]:
                parent[_find(parent, other)] = _find(parent, members[0])
                merged = True
        if not merged:
            break
    transitions = frozenset((_find(parent, a), lab, _find(parent, b)) for a, lab, b in pta.transitions)
    quotient = Fsa(frozenset(succ), pta.alphabet, transitions, _find(parent, pta.initial),
                   frozenset(accepting))
    return minimize(determinize(quotient))
