"""Exhaustive census of connected diagrams at small size.

This is the ground-truth oracle for the generating series: it constructs
every pointed isomorphism class explicitly and deduplicates unpointed
classes by canonical code, with no counting shortcuts, so its output is
independent of the cycle-index machinery it validates.

The enumerator builds each pointed class exactly once by generating only
*canonically labeled* structures: arcs are labeled in breadth-first
discovery order from the base arc 0 with generators applied in the fixed
order [rot, rot^-1, inv], and the search assigns a fresh label exactly when
the traversal would discover a new arc.  Pointed connected diagrams are
rigid, so canonical labelings biject with pointed classes and no
deduplication is needed.  The rotation is maintained as disjoint open
chains (partial cycles); expanding an arc either closes its chain into a
cycle, extends it by a fresh arc, or splices in another chain.  The
trivalent flavor restricts cycle lengths to 1 or 3.

A naive mode (`count_transitive_pairs`) filters all permutation pairs for
transitivity; it is exponentially slower and exists solely to validate the
backtracking enumerator at tiny sizes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .diagram import Diagram, canonical_code, canonical_representative, is_normal

#: Size caps for the census (resource guard, not a hard algorithmic limit).
CENSUS_CAP_TRIVALENT = 14
CENSUS_CAP_GENERAL = 10


@dataclass(frozen=True)
class CensusReport:
    """Counts and representatives for one size.

    `labelled_connected` is the number of connected labeled structures; by
    rigidity it equals pointed_classes * (size-1)!.
    """

    size: int
    labelled_connected: int
    pointed_classes: int
    unpointed_classes: int
    class_representatives: tuple = field(default=())


def pointed_structures(n: int, trivalent: bool = True):
    """Yield (rot, inv) image tuples, one per pointed isomorphism class of
    connected diagrams on n arcs, each in canonical labeling."""
    if n < 1:
        raise ValueError("size must be >= 1, got %d" % n)
    rot = [-1] * n
    pre = [-1] * n
    inv = [-1] * n

    def chain_head(a):
        while pre[a] != -1:
            a = pre[a]
        return a

    def chain_tail(a):
        while rot[a] != -1:
            a = rot[a]
        return a

    def chain_len(a):
        a = chain_head(a)
        length = 1
        while rot[a] != -1:
            a = rot[a]
            length += 1
        return length

    if trivalent:
        def can_close(length):
            return length == 1 or length == 3

        def can_grow(length):
            return length < 3
    else:
        def can_close(length):
            return True

        def can_grow(length):
            return True

    # The three steps below mirror the traversal: expanding arc a must leave
    # rot(a), rot^-1(a) and inv(a) defined, assigning fresh labels in the
    # order the traversal would discover them.
    def expand(a, used):
        if a == used:
            if used == n:
                yield tuple(rot), tuple(inv)
            return
        yield from step_rot(a, used)

    def step_rot(a, used):
        if rot[a] != -1:
            yield from step_pre(a, used)
            return
        head = chain_head(a)          # a is the tail of its chain
        length = chain_len(a)
        if can_close(length):
            rot[a] = head
            pre[head] = a
            yield from step_pre(a, used)
            rot[a] = -1
            pre[head] = -1
        if can_grow(length):
            if used < n:
                b = used
                rot[a] = b
                pre[b] = a
                yield from step_pre(a, used + 1)
                rot[a] = -1
                pre[b] = -1
            for b in range(used):     # splice another chain after a
                if b == a or pre[b] != -1 or chain_head(b) == head:
                    continue
                if trivalent and length + chain_len(b) > 3:
                    continue
                rot[a] = b
                pre[b] = a
                yield from step_pre(a, used)
                rot[a] = -1
                pre[b] = -1

    def step_pre(a, used):
        if pre[a] != -1:
            yield from step_inv(a, used)
            return
        length = chain_len(a)         # a is the head of its chain
        if length > 1 and can_close(length):
            tail = chain_tail(a)
            pre[a] = tail
            rot[tail] = a
            yield from step_inv(a, used)
            pre[a] = -1
            rot[tail] = -1
        if can_grow(length):
            if used < n:
                b = used
                pre[a] = b
                rot[b] = a
                yield from step_inv(a, used + 1)
                pre[a] = -1
                rot[b] = -1
            for b in range(used):     # splice another chain before a
                if b == a or rot[b] != -1 or chain_head(b) == a:
                    continue
                if trivalent and length + chain_len(b) > 3:
                    continue
                pre[a] = b
                rot[b] = a
                yield from step_inv(a, used)
                pre[a] = -1
                rot[b] = -1

    def step_inv(a, used):
        if inv[a] != -1:
            yield from expand(a + 1, used)
            return
        inv[a] = a                    # folded edge
        yield from expand(a + 1, used)
        inv[a] = -1
        if used < n:
            b = used
            inv[a] = b
            inv[b] = a
            yield from expand(a + 1, used + 1)
            inv[a] = -1
            inv[b] = -1
        for b in range(used):
            if b != a and inv[b] == -1:
                inv[a] = b
                inv[b] = a
                yield from expand(a + 1, used)
                inv[a] = -1
                inv[b] = -1

    yield from expand(0, 1)


def _census_cap(trivalent: bool) -> int:
    return CENSUS_CAP_TRIVALENT if trivalent else CENSUS_CAP_GENERAL


def enumerate_size(n: int, trivalent: bool = True, cap: int = None) -> CensusReport:
    """Construct all connected diagrams of size n.

    Counts pointed classes exactly, deduplicates unpointed classes by
    canonical code, and keeps one canonical representative per class
    (sorted by code).  Raises for sizes beyond the cap.
    """
    cap = _census_cap(trivalent) if cap is None else cap
    if n > cap:
        raise ValueError(
            "census size %d exceeds the cap %d; pass a larger cap explicitly "
            "if you really want this" % (n, cap)
        )
    pointed = 0
    by_code = {}
    for rot, inv in pointed_structures(n, trivalent):
        pointed += 1
        d = Diagram(rot, inv)
        code = canonical_code(d)
        if code not in by_code:
            by_code[code] = canonical_representative(d)
    reps = tuple(by_code[c] for c in sorted(by_code))
    return CensusReport(
        size=n,
        labelled_connected=pointed * math.factorial(n - 1),
        pointed_classes=pointed,
        unpointed_classes=len(reps),
        class_representatives=reps,
    )


def enumerate_normal(n: int, trivalent: bool = True, cap: int = None) -> list:
    """The unpointed representatives whose automorphism group is
    arc-transitive (normal subgroups of the classified group)."""
    report = enumerate_size(n, trivalent, cap)
    return [d for d in report.class_representatives if is_normal(d)]


def count_transitive_pairs(n: int, trivalent: bool = True) -> int:
    """Labeled count by brute force: pairs (rot, inv) of permutations of n
    points with inv^2 = id (and rot^3 = id in the trivalent flavor) that act
    transitively.  Exponential; intended for n <= 7."""
    if n < 1:
        raise ValueError("size must be >= 1, got %d" % n)
    perms = list(itertools.permutations(range(n)))
    invs = [p for p in perms if all(p[p[i]] == i for i in range(n))]
    if trivalent:
        rots = [p for p in perms if all(p[p[p[i]]] == i for i in range(n))]
    else:
        rots = perms
    count = 0
    for rot in rots:
        for inv in invs:
            seen = 1
            mark = [False] * n
            mark[0] = True
            stack = [0]
            while stack:
                a = stack.pop()
                for b in (rot[a], inv[a]):
                    if not mark[b]:
                        mark[b] = True
                        seen += 1
                        stack.append(b)
            if seen == n:
                count += 1
    return count
