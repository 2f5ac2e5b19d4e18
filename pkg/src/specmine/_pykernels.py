"""Pure-Python bounded path kernels.

Both kernels walk an automaton stored in compressed adjacency form:
outgoing transitions of state ``s`` occupy positions
``offsets[s]:offsets[s + 1]`` of ``labels`` and ``targets``. A label of -1
is the empty transition. Each position is a distinct transition, and no
transition may be taken more than ``limit`` times along one path.

These are the reference versions; ``_ckernels.pyx`` mirrors them line for
line and ``specmine.kernels`` picks whichever is importable.
"""
import sys


def enumerate_words(n, initial, accepting, offsets, labels, targets, limit):
    """Return the set of label tuples spelled by bounded accepting paths."""
    usage = [0] * len(targets)
    words = set()
    word = []
    if accepting[initial]:
        words.add(())
    # frame: [state, next outgoing position, transition used to get here]
    stack = [[initial, offsets[initial], -1]]
    while stack:
        frame = stack[-1]
        s = frame[0]
        j = frame[1]
        end = offsets[s + 1]
        while j < end and usage[j] >= limit:
            j += 1
        if j >= end:
            stack.pop()
            e = frame[2]
            if e >= 0:
                usage[e] -= 1
                if labels[e] >= 0:
                    word.pop()
            continue
        frame[1] = j + 1
        usage[j] += 1
        t = targets[j]
        if labels[j] >= 0:
            word.append(labels[j])
        if accepting[t]:
            words.add(tuple(word))
        stack.append([t, offsets[t], j])
    return words


def count_words(n, initial, accepting, offsets, labels, targets, limit,
                f_initial, f_accepting, f_delta, n_labels):
    """Count bounded accepting paths, and those whose word a filter DFA accepts.

    The source automaton must be deterministic without empty labels, so that
    paths and words correspond one to one. The filter is a complete or
    partial DFA over the same label indices given as a flat row-major table
    ``f_delta[f * n_labels + label]`` with -1 for a missing transition; a
    filter state of -1 is the implicit dead state.

    Returns ``(total, accepted)`` as Python ints.
    """
    usage = [0] * len(targets)
    memo = {}
    depth_needed = len(targets) * limit + 50
    if sys.getrecursionlimit() < depth_needed:
        sys.setrecursionlimit(depth_needed)

    def visit(s, f):
        key = (s, f, tuple(usage))
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        accepted = 0
        if accepting[s]:
            total = 1
            if f >= 0 and f_accepting[f]:
                accepted = 1
        for j in range(offsets[s], offsets[s + 1]):
            if usage[j] >= limit:
                continue
            g = f_delta[f * n_labels + labels[j]] if f >= 0 else -1
            usage[j] += 1
            t, a = visit(targets[j], g)
            usage[j] -= 1
            total += t
            accepted += a
        memo[key] = (total, accepted)
        return total, accepted

    return visit(initial, f_initial)
