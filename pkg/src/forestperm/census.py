"""Exhaustive census of S_n: class counts, refined tables, edge statistics, realizability.

The per-permutation kernel works on raw 0-based tuples and uses the
quadratic pattern tests; :mod:`forestperm.classify` is the slow reference it
is tested against.  Shards are the permutations with a fixed first entry;
they are merged by addition in shard order, so results never depend on the
worker count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .core import Permutation, PermGraph, build_graph, make_permutation
from .patterns import has_1324, has_2143, has_21bar354

__all__ = [
    "CENSUS_CLASSES",
    "CensusRow",
    "CensusLimitError",
    "MAX_N",
    "run_census",
    "profile",
    "expected_total_edges",
    "harmonic",
    "inversions",
    "bruhat_covers",
    "realizability_scan",
    "find_isomorphism",
    "cube_graph",
]

CENSUS_CLASSES = ("forest", "tree", "rooted", "path", "smooth", "plane")
MAX_N = int(os.environ.get("FORESTPERM_MAX_N", "11"))


class CensusLimitError(ValueError):
    pass


def profile(v: tuple[int, ...]):
    """Classify one permutation given as a tuple of ``0..n-1``.

    Returns ``(flags, m, a, edges)`` with ``flags`` ordered like
    :data:`CENSUS_CLASSES` and ``edges`` as 0-based pairs.
    """
    n = len(v)
    parent = list(range(n))
    deg = [0] * n
    edges = []
    acyclic = True
    for i in range(n):
        low = v[i]
        ceiling = n
        for j in range(i + 1, n):
            w = v[j]
            if low < w < ceiling:
                ceiling = w
                edges.append((i, j))
                deg[i] += 1
                deg[j] += 1
                if acyclic:
                    a, b = i, j
                    while parent[a] != a:
                        a = parent[a]
                    while parent[b] != b:
                        b = parent[b]
                    if a == b:
                        acyclic = False
                    else:
                        parent[a] = b
    e = len(edges)
    tree = acyclic and e == n - 1
    rooted = tree and v[0] == 0
    path = tree and max(deg) <= 2
    smooth = not has_1324(v) and not has_2143(v)
    plane = not has_21bar354(v)
    m = 0
    low = n
    for x in reversed(v):
        if x < low:
            m += 1
            low = x
    a = 1
    while a < n and v[n - a - 1] < v[n - a]:
        a += 1
    return (acyclic, tree, rooted, path, smooth, plane), m, a, edges


@dataclass
class CensusRow:
    n: int
    total: int = 0
    counts: dict = field(default_factory=dict)
    # refined[cls]["rl-minima" | "final-ascent"][l] = count with statistic l
    refined: dict = field(default_factory=dict)
    total_edges: int = 0
    max_edges: int = 0
    bar_counts: dict = field(default_factory=dict)  # (i, j) 1-based -> count

    @classmethod
    def empty(cls, n: int) -> CensusRow:
        return cls(
            n=n,
            counts=dict.fromkeys(CENSUS_CLASSES, 0),
            refined={c: {"rl-minima": [0] * (n + 1), "final-ascent": [0] * (n + 1)} for c in CENSUS_CLASSES},
            bar_counts={(i, j): 0 for i in range(1, n + 1) for j in range(i + 1, n + 1)},
        )

    def merge(self, other: CensusRow) -> None:
        self.total += other.total
        for c in CENSUS_CLASSES:
            self.counts[c] += other.counts[c]
            for stat in ("rl-minima", "final-ascent"):
                mine, theirs = self.refined[c][stat], other.refined[c][stat]
                for k, x in enumerate(theirs):
                    mine[k] += x
        self.total_edges += other.total_edges
        self.max_edges = max(self.max_edges, other.max_edges)
        for k, x in other.bar_counts.items():
            self.bar_counts[k] += x

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "counts": dict(self.counts),
            "refined": {c: {s: list(t) for s, t in d.items()} for c, d in self.refined.items()},
            "total_edges": self.total_edges,
            "max_edges": self.max_edges,
            "bar_counts": [[i, j, c] for (i, j), c in sorted(self.bar_counts.items())],
        }


def _shard(args) -> CensusRow:
    n, first = args
    row = CensusRow.empty(n)
    rest = [x for x in range(n) if x != first]
    refined = [row.refined[c] for c in CENSUS_CLASSES]
    counts = [0] * len(CENSUS_CLASSES)
    bars = [[0] * n for _ in range(n)]
    for tail in permutations(rest):
        v = (first,) + tail
        flags, m, a, edges = profile(v)
        row.total += 1
        e = len(edges)
        row.total_edges += e
        if e > row.max_edges:
            row.max_edges = e
        for i, j in edges:
            bars[i][j] += 1
        for k, f in enumerate(flags):
            if f:
                counts[k] += 1
                refined[k]["rl-minima"][m] += 1
                refined[k]["final-ascent"][a] += 1
    for k, c in enumerate(CENSUS_CLASSES):
        row.counts[c] = counts[k]
    for i in range(n):
        for j in range(i + 1, n):
            row.bar_counts[(i + 1, j + 1)] = bars[i][j]
    return row


def run_census(n: int, workers: int | None = None, limit: int | None = None) -> CensusRow:
    """Classify every permutation of length ``n`` and tally the results."""
    limit = MAX_N if limit is None else limit
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise CensusLimitError(f"census of S_{n} exceeds the configured limit n <= {limit}")
    if workers is None:
        workers = int(os.environ.get("FORESTPERM_WORKERS", "1"))
    jobs = [(n, first) for first in range(n)]
    if workers > 1 and n >= 7:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            shards = list(pool.map(_shard, jobs))
    else:
        shards = [_shard(j) for j in jobs]
    row = CensusRow.empty(n)
    for s in shards:
        row.merge(s)
    return row


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def expected_total_edges(n: int) -> int:
    """Closed form for the number of edges summed over all of S_n."""
    val = math.factorial(n + 1) * (harmonic(n + 1) - 2) + math.factorial(n)
    assert val.denominator == 1
    return int(val)


def inversions(v) -> int:
    return sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] > v[j])


def bruhat_covers(p: Permutation) -> int:
    """Number of positional transpositions raising the inversion count by exactly one."""
    v = list(p.values)
    base = inversions(v)
    count = 0
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            v[i], v[j] = v[j], v[i]
            if inversions(v) == base + 1:
                count += 1
            v[i], v[j] = v[j], v[i]
    return count


def cube_graph() -> PermGraph:
    """The 3-cube on vertices 1..8 (vertex ``k+1`` is the bit string ``k``)."""
    edges = [(a + 1, (a ^ (1 << b)) + 1) for a in range(8) for b in range(3) if a < (a ^ (1 << b))]
    return PermGraph.from_edges(8, edges)


def find_isomorphism(g: PermGraph, h: PermGraph) -> dict[int, int] | None:
    """A vertex bijection carrying ``g`` onto ``h``, found by backtracking.

    Vertices of ``g`` are placed in decreasing degree order and only tried
    against vertices of ``h`` of the same degree.
    """
    if g.n != h.n or g.e != h.e:
        return None
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg.values()) != sorted(dh.values()):
        return None
    ag = {v: set(ws) for v, ws in g.adjacency().items()}
    ah = {v: set(ws) for v, ws in h.adjacency().items()}
    order = sorted(ag, key=lambda v: (-dg[v], v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def place(k):
        if k == len(order):
            return True
        v = order[k]
        for w in sorted(ah):
            if w in used or dh[w] != dg[v]:
                continue
            if all((mapping[x] in ah[w]) == (x in ag[v]) for x in mapping):
                mapping[v] = w
                used.add(w)
                if place(k + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(mapping) if place(0) else None


_GRAPH_CACHE: dict[int, list[tuple[Permutation, PermGraph]]] = {}


def _graphs_of(n: int) -> list[tuple[Permutation, PermGraph]]:
    if n not in _GRAPH_CACHE:
        _GRAPH_CACHE[n] = [
            (p, build_graph(p)) for p in (make_permutation(t) for t in permutations(range(1, n + 1)))
        ]
    return _GRAPH_CACHE[n]


def realizability_scan(n: int, target: PermGraph) -> Permutation | None:
    """Some permutation of length ``n`` whose graph is isomorphic to ``target``, if any."""
    if target.n != n:
        # pad with isolated vertices so the vertex counts match
        if target.n > n:
            return None
        target = PermGraph(n, target.edges)
    degs = sorted(target.degrees().values())
    for p, g in _graphs_of(n):
        if g.e != target.e:
            continue
        if sorted(g.degrees().values()) != degs:
            continue
        if find_isomorphism(g, target) is not None:
            return p
    return None
