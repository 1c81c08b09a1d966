"""Pattern containment: 1324, 2143, the barred pattern 21-bar-3-54, and generic patterns.

Every ``contains_*`` function returns the lexicographically least witness as a
tuple of 1-based positions, or ``None`` when the pattern is avoided.
"""

from __future__ import annotations

from itertools import combinations

from .core import Permutation, cover_edges

__all__ = [
    "PatternOccurrence",
    "contains_1324",
    "contains_2143",
    "contains_21bar354",
    "contains_classical",
    "has_1324",
    "has_2143",
    "has_21bar354",
    "natural_embedding_crosses",
    "crossing_edge_pair",
]

# (p, q, r, s) with p < q < r < s, 1-based
PatternOccurrence = tuple[int, ...]


def _first_quadruple(p: Permutation, test) -> PatternOccurrence | None:
    v = p.values
    for idx in combinations(range(p.n), 4):
        if test(*(v[k] for k in idx)):
            return tuple(k + 1 for k in idx)
    return None


def contains_1324(p: Permutation) -> PatternOccurrence | None:
    return _first_quadruple(p, lambda a, b, c, d: a < c < b < d)


def contains_2143(p: Permutation) -> PatternOccurrence | None:
    return _first_quadruple(p, lambda a, b, c, d: b < a < d < c)


def contains_21bar354(p: Permutation) -> PatternOccurrence | None:
    """An occurrence of 2154 that no middle entry extends to 21354."""
    v = p.values
    for a, b, c, d in combinations(range(p.n), 4):
        if v[b] < v[a] < v[d] < v[c]:
            lo, hi = v[a], v[d]
            if not any(lo < v[t] < hi for t in range(b + 1, c)):
                return (a + 1, b + 1, c + 1, d + 1)
    return None


def has_1324(values) -> bool:
    """Quadratic containment test for 1324 on a raw value sequence."""
    n = len(values)
    pre = [0] * n  # pre[b] = min(values[:b])
    low = None
    for b in range(n):
        pre[b] = low
        low = values[b] if low is None else min(low, values[b])
    suf = [0] * n  # suf[c] = max(values[c+1:])
    high = None
    for c in range(n - 1, -1, -1):
        suf[c] = high
        high = values[c] if high is None else max(high, values[c])
    for b in range(1, n - 2):
        vb, lo = values[b], pre[b]
        for c in range(b + 1, n - 1):
            vc = values[c]
            if lo < vc < vb and suf[c] > vb:
                return True
    return False


def has_2143(values) -> bool:
    """Quadratic containment test for 2143 on a raw value sequence.

    For the "1" at ``b`` take the smallest larger value to its left; for the
    "4" at ``c`` the largest smaller value to its right.  A 2143 exists iff
    some ``b < c`` has the first strictly below the second.
    """
    n = len(values)
    best_left = None
    for c in range(1, n):
        b = c - 1
        vb = values[b]
        cand = min((w for w in values[:b] if w > vb), default=None)
        if cand is not None and (best_left is None or cand < best_left):
            best_left = cand
        if best_left is None:
            continue
        vc = values[c]
        right = max((w for w in values[c + 1:] if w < vc), default=None)
        if right is not None and best_left < right:
            return True
    return False


def has_21bar354(values) -> bool:
    """Fast containment test for 21-bar-3-54 on a raw value sequence.

    An uncovered 2154 can always be tightened until its "1" and "5" sit in
    adjacent positions (no extending entry lies between them), so it is
    enough to look at each ascent ``v[x] < v[x+1]`` for a left entry and a
    right entry whose values nest inside it in the right order.
    """
    n = len(values)
    for x in range(1, n - 2):
        lo, hi = values[x], values[x + 1]
        if lo > hi:
            continue
        left = min((w for w in values[:x] if lo < w < hi), default=None)
        if left is None:
            continue
        if any(left < w < hi for w in values[x + 2:]):
            return True
    return False


def contains_classical(p: Permutation, pattern: Permutation) -> PatternOccurrence | None:
    k = pattern.n
    if k > p.n:
        return None
    pat = pattern.values
    order = sorted(range(k), key=lambda t: pat[t])
    v = p.values
    for idx in combinations(range(p.n), k):
        vals = [v[t] for t in idx]
        if all(vals[order[t]] < vals[order[t + 1]] for t in range(k - 1)):
            return tuple(t + 1 for t in idx)
    return None


def _orient(ax, ay, bx, by, cx, cy) -> int:
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def _segments_cross(s, t) -> bool:
    # proper crossing only: shared endpoints do not count
    (a, b), (c, d) = s, t
    if {a, b} & {c, d}:
        return False
    o1 = _orient(*a, *b, *c)
    o2 = _orient(*a, *b, *d)
    o3 = _orient(*c, *d, *a)
    o4 = _orient(*c, *d, *b)
    return o1 * o2 < 0 and o3 * o4 < 0


def crossing_edge_pair(p: Permutation):
    """First pair of graph edges whose straight segments cross, when vertex ``i`` sits at ``(i, p[i])``."""
    edges = cover_edges(p.values)
    pts = {i: (i, p[i]) for i in range(1, p.n + 1)}
    segs = [(pts[i], pts[j]) for i, j in edges]
    for x in range(len(edges)):
        for y in range(x + 1, len(edges)):
            if _segments_cross(segs[x], segs[y]):
                return edges[x], edges[y]
    return None


def natural_embedding_crosses(p: Permutation) -> bool:
    return crossing_edge_pair(p) is not None
