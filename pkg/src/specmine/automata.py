"""Finite automata over operation names.

An :class:`Fsa` is an immutable value. Every operation here is a pure
function returning a new automaton whose states are renumbered ``q0, q1, ...``
in breadth-first order from the initial state, so results are stable across
runs and comparable as plain values.

Transitions whose label is :data:`EMPTY` are epsilon moves. Missing
``(state, label)`` pairs mean rejection; no dead state is ever drawn.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from specmine import kernels
from specmine.errors import ConfigError, ModelError, NoModelsError, NotDeterministicError

EMPTY = "ε"

# compiled kernels keep per-transition counters in one byte
MAX_VISIT_LIMIT = 255


def _label_key(label):
    return (label != EMPTY, label)


def _natural_key(name):
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name)]


@dataclass(frozen=True)
class Fsa:
    """A finite-state automaton with string state ids and string labels.

    Build one with :meth:`from_transitions` unless every field is at hand.
    Construction validates the structural invariants and raises
    :class:`ModelError` on violation.
    """

    states: frozenset
    alphabet: frozenset
    transitions: frozenset
    initial: str
    accepting: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for name in ("states", "alphabet", "transitions", "accepting"):
            value = getattr(self, name)
            if not isinstance(value, frozenset):
                object.__setattr__(self, name, frozenset(value))
        if self.initial not in self.states:
            raise ModelError(f"initial state {self.initial!r} is not a state")
        if not self.accepting <= self.states:
            extra = sorted(self.accepting - self.states)
            raise ModelError(f"accepting states {extra} are not states")
        if EMPTY in self.alphabet:
            raise ModelError(f"{EMPTY!r} is reserved for empty transitions")
        for label in self.alphabet:
            if not isinstance(label, str) or not label or label.split() != [label]:
                raise ModelError(f"bad operation name {label!r}")
        for src, label, dst in self.transitions:
            if src not in self.states or dst not in self.states:
                raise ModelError(f"transition {src}-{label}->{dst} leaves the state set")
            if label != EMPTY and label not in self.alphabet:
                raise ModelError(f"label {label!r} is not in the alphabet")

    @classmethod
    def from_transitions(cls, transitions, initial, accepting=(), states=(), alphabet=()):
        """Infer states and alphabet from the transitions plus any extras given."""
        transitions = frozenset(tuple(t) for t in transitions)
        all_states = set(states) | {initial} | set(accepting)
        all_labels = set(alphabet)
        for src, label, dst in transitions:
            all_states.update((src, dst))
            if label != EMPTY:
                all_labels.add(label)
        return cls(frozenset(all_states), frozenset(all_labels), transitions,
                   initial, frozenset(accepting))

    @cached_property
    def deterministic(self):
        seen = set()
        for src, label, _ in self.transitions:
            if label == EMPTY or (src, label) in seen:
                return False
            seen.add((src, label))
        return True

    @cached_property
    def successors(self):
        """``{state: {label: frozenset(targets)}}`` including empty moves."""
        table = {s: {} for s in self.states}
        for src, label, dst in self.transitions:
            table[src].setdefault(label, set()).add(dst)
        return {s: {a: frozenset(ts) for a, ts in row.items()} for s, row in table.items()}

    def closure(self, states):
        """Everything reachable from ``states`` through empty moves alone."""
        seen = set(states)
        todo = list(seen)
        succ = self.successors
        while todo:
            s = todo.pop()
            for t in succ[s].get(EMPTY, ()):
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
        return frozenset(seen)

    def step(self, states, label):
        succ = self.successors
        out = set()
        for s in states:
            out.update(succ[s].get(label, ()))
        return self.closure(out)

    def __repr__(self):
        return (f"Fsa({len(self.states)} states, {len(self.transitions)} transitions, "
                f"initial={self.initial!r}, accepting={sorted(self.accepting, key=_natural_key)})")


@dataclass(frozen=True)
class BehaviorSet:
    """Traces of one automaton under a per-transition visit bound."""

    traces: frozenset
    visit_limit: int

    def __iter__(self):
        return iter(sorted(self.traces))

    def __len__(self):
        return len(self.traces)

    def __contains__(self, trace):
        return tuple(trace) in self.traces


def path_fsa(trace):
    """Single-path automaton accepting exactly ``trace``."""
    trace = tuple(trace)
    states = [f"q{i}" for i in range(len(trace) + 1)]
    transitions = [(states[i], op, states[i + 1]) for i, op in enumerate(trace)]
    return Fsa(frozenset(states), frozenset(trace), frozenset(transitions),
               states[0], frozenset([states[-1]]))


def accepts(fsa, trace):
    current = fsa.closure([fsa.initial])
    for op in trace:
        if op not in fsa.alphabet:
            return False
        current = fsa.step(current, op)
        if not current:
            return False
    return not current.isdisjoint(fsa.accepting)


def renumber(fsa):
    """Rename states ``q0, q1, ...`` in breadth-first order from the initial state.

    Outgoing edges are explored by label (empty moves first) then by the old
    target name; unreachable states keep their relative order at the end.
    """
    order = {fsa.initial: 0}
    queue = deque([fsa.initial])
    succ = fsa.successors
    while queue:
        s = queue.popleft()
        for label in sorted(succ[s], key=_label_key):
            for t in sorted(succ[s][label], key=_natural_key):
                if t not in order:
                    order[t] = len(order)
                    queue.append(t)
    for s in sorted(fsa.states - order.keys(), key=_natural_key):
        order[s] = len(order)
    name = {s: f"q{i}" for s, i in order.items()}
    return Fsa(
        frozenset(name.values()),
        fsa.alphabet,
        frozenset((name[a], lab, name[b]) for a, lab, b in fsa.transitions),
        name[fsa.initial],
        frozenset(name[s] for s in fsa.accepting),
    )


def reachable(fsa):
    seen = {fsa.initial}
    todo = [fsa.initial]
    succ = fsa.successors
    while todo:
        s = todo.pop()
        for targets in succ[s].values():
            for t in targets:
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
    return frozenset(seen)


def epsilon_union(models):
    """Join models under a fresh initial state with one empty move to each."""
    models = list(models)
    if not models:
        raise NoModelsError("no models to combine")
    start = "u"
    states = {start}
    transitions = set()
    accepting = set()
    alphabet = set()
    for i, m in enumerate(models):
        tag = f"m{i}:"
        states.update(tag + s for s in m.states)
        transitions.update((tag + a, lab, tag + b) for a, lab, b in m.transitions)
        transitions.add((start, EMPTY, tag + m.initial))
        accepting.update(tag + s for s in m.accepting)
        alphabet |= m.alphabet
    return renumber(Fsa(frozenset(states), frozenset(alphabet), frozenset(transitions),
                        start, frozenset(accepting)))


def determinize(nfa):
    """Subset construction over reachable subsets, with eager empty closure."""
    start = nfa.closure([nfa.initial])
    names = {start: "q0"}
    queue = deque([start])
    transitions = set()
    labels = sorted(nfa.alphabet)
    succ = nfa.successors
    while queue:
        subset = queue.popleft()
        present = set()
        for s in subset:
            present.update(succ[s])
        for label in labels:
            if label not in present:
                continue
            target = nfa.step(subset, label)
            if not target:
                continue
            if target not in names:
                names[target] = f"q{len(names)}"
                queue.append(target)
            transitions.add((names[subset], label, names[target]))
    accepting = {name for subset, name in names.items() if not subset.isdisjoint(nfa.accepting)}
    return Fsa(frozenset(names.values()), nfa.alphabet, frozenset(transitions),
               "q0", frozenset(accepting))


def minimize(dfa):
    """Hopcroft partition refinement on the reachable, completed DFA.

    The dead class introduced by completion (and any other state that can
    never reach acceptance) is stripped from the result.
    """
    if not dfa.deterministic:
        raise NotDeterministicError("minimize needs a deterministic automaton; determinize first")
    live = sorted(reachable(dfa), key=_natural_key)
    labels = sorted(dfa.alphabet)
    index = {s: i for i, s in enumerate(live)}
    n = len(live)
    dead = n  # completion sink, always present; harmless if unused
    size = n + 1
    table = [[dead] * len(labels) for _ in range(size)]
    label_index = {a: c for c, a in enumerate(labels)}
    for src, label, dst in dfa.transitions:
        if src in index:
            table[index[src]][label_index[label]] = index[dst]
    inverse = [[[] for _ in range(size)] for _ in labels]
    for s in range(size):
        for c in range(len(labels)):
            inverse[c][table[s][c]].append(s)

    final = {index[s] for s in dfa.accepting if s in index}
    rest = set(range(size)) - final
    blocks = [set(b) for b in (final, rest) if b]
    block_of = [0] * size
    for b, members in enumerate(blocks):
        for s in members:
            block_of[s] = b
    waiting = set()
    if len(blocks) == 2:
        waiting.add(0 if len(blocks[0]) <= len(blocks[1]) else 1)

    while waiting:
        splitter = list(blocks[waiting.pop()])
        for c in range(len(labels)):
            pre = set()
            for t in splitter:
                pre.update(inverse[c][t])
            if not pre:
                continue
            touched = {}
            for s in pre:
                touched.setdefault(block_of[s], []).append(s)
            for b, inside in touched.items():
                if len(inside) == len(blocks[b]):
                    continue
                moved = set(inside)
                blocks[b] -= moved
                nb = len(blocks)
                blocks.append(moved)
                for s in moved:
                    block_of[s] = nb
                if b in waiting:
                    waiting.add(nb)
                else:
                    waiting.add(nb if len(moved) <= len(blocks[b]) else b)

    # blocks that can reach an accepting block
    accepting_blocks = {block_of[s] for s in final}
    block_edges = {}
    for s in range(size):
        for c in range(len(labels)):
            block_edges.setdefault(block_of[table[s][c]], set()).add(block_of[s])
    useful = set(accepting_blocks)
    todo = list(useful)
    while todo:
        b = todo.pop()
        for p in block_edges.get(b, ()):
            if p not in useful:
                useful.add(p)
                todo.append(p)
    start = block_of[index[dfa.initial]]
    keep = useful | {start}

    transitions = set()
    for b in keep:
        rep = next(iter(blocks[b]))
        for c, label in enumerate(labels):
            target = block_of[table[rep][c]]
            if target in useful:
                transitions.add((f"b{b}", label, f"b{target}"))
    quotient = Fsa(frozenset(f"b{b}" for b in keep), dfa.alphabet, frozenset(transitions),
                   f"b{start}", frozenset(f"b{b}" for b in accepting_blocks))
    return renumber(quotient)


def _encode(fsa):
    """Flatten ``fsa`` into the compressed adjacency arrays the kernels expect."""
    order = sorted(fsa.states, key=_natural_key)
    index = {s: i for i, s in enumerate(order)}
    labels = sorted(fsa.alphabet)
    label_index = {a: c for c, a in enumerate(labels)}
    label_index[EMPTY] = -1
    rows = [[] for _ in order]
    for src, label, dst in fsa.transitions:
        rows[index[src]].append((label_index[label], index[dst]))
    offsets = [0]
    lab_out = []
    dst_out = []
    for row in rows:
        row.sort()
        for lab, dst in row:
            lab_out.append(lab)
            dst_out.append(dst)
        offsets.append(len(lab_out))
    accepting = [1 if s in fsa.accepting else 0 for s in order]
    return {
        "n": len(order),
        "initial": index[fsa.initial],
        "accepting": kernels.byte_array(accepting),
        "offsets": kernels.int_array(offsets),
        "labels": kernels.int_array(lab_out),
        "targets": kernels.int_array(dst_out),
        "label_names": labels,
    }


def _check_limit(visit_limit):
    if not isinstance(visit_limit, int) or visit_limit < 1:
        raise ConfigError(f"visit limit must be a positive integer, got {visit_limit!r}")
    if visit_limit > MAX_VISIT_LIMIT:
        raise ConfigError(f"visit limit above {MAX_VISIT_LIMIT} is not supported")


def enumerate_behaviors(fsa, visit_limit, backend=None):
    """All traces spelled by accepting paths using no transition more than
    ``visit_limit`` times. The empty trace is included iff the initial state
    accepts.
    """
    _check_limit(visit_limit)
    impl = backend or kernels
    enc = _encode(fsa)
    words = impl.enumerate_words(enc["n"], enc["initial"], enc["accepting"], enc["offsets"],
                                 enc["labels"], enc["targets"], visit_limit)
    names = enc["label_names"]
    return BehaviorSet(frozenset(tuple(names[c] for c in w) for w in words), visit_limit)


def count_behaviors(fsa, visit_limit, accepted_by=None, backend=None):
    """Count bounded behaviors of a DFA without materialising them.

    Returns ``(total, accepted)`` where ``accepted`` counts those behaviors
    that ``accepted_by`` (any automaton) accepts; with no filter it is 0.
    """
    _check_limit(visit_limit)
    if not fsa.deterministic:
        raise NotDeterministicError("counting needs a deterministic automaton")
    impl = backend or kernels
    enc = _encode(fsa)
    names = enc["label_names"]
    if accepted_by is None:
        f_initial, f_accepting, f_delta = -1, kernels.byte_array([]), kernels.int_array([])
    else:
        flt = determinize(accepted_by)
        f_order = sorted(flt.states, key=_natural_key)
        f_index = {s: i for i, s in enumerate(f_order)}
        delta = [-1] * (len(f_order) * len(names))
        col = {a: c for c, a in enumerate(names)}
        for src, label, dst in flt.transitions:
            if label in col:
                delta[f_index[src] * len(names) + col[label]] = f_index[dst]
        f_initial = f_index[flt.initial]
        f_accepting = kernels.byte_array([1 if s in flt.accepting else 0 for s in f_order])
        f_delta = kernels.int_array(delta)
    return impl.count_words(enc["n"], enc["initial"], enc["accepting"], enc["offsets"],
                            enc["labels"], enc["targets"], visit_limit,
                            f_initial, f_accepting, f_delta, len(names))


# -- serialisation ---------------------------------------------------------

def to_json_dict(fsa):
    key = _natural_key
    return {
        "states": sorted(fsa.states, key=key),
        "alphabet": sorted(fsa.alphabet),
        "initial": fsa.initial,
        "accepting": sorted(fsa.accepting, key=key),
        "transitions": [
            {"from": a, "label": lab, "to": b}
            for a, lab, b in sorted(fsa.transitions,
                                    key=lambda t: (key(t[0]), _label_key(t[1]), key(t[2])))
        ],
    }


def from_json_dict(data):
    try:
        transitions = [(t["from"], t["label"], t["to"]) for t in data["transitions"]]
        return Fsa(frozenset(data["states"]), frozenset(data["alphabet"]),
                   frozenset(transitions), data["initial"], frozenset(data["accepting"]))
    except (KeyError, TypeError) as exc:
        raise ModelError(f"malformed model JSON: {exc!r}") from None


def _dot_id(name):
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(fsa, name="fsa"):
    key = _natural_key
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for s in sorted(fsa.states, key=key):
        shape = "doublecircle" if s in fsa.accepting else "circle"
        lines.append(f"  {_dot_id(s)} [shape={shape}];")
    lines.append(f"  __start -> {_dot_id(fsa.initial)};")
    for a, lab, b in sorted(fsa.transitions, key=lambda t: (key(t[0]), _label_key(t[1]), key(t[2]))):
        lines.append(f"  {_dot_id(a)} -> {_dot_id(b)} [label={_dot_id(lab)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
