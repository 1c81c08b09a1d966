"""Permutations, their Hasse-diagram graph and bar diagram.

Everything here speaks 1-based indices: position ``i`` of a permutation of
length ``n`` runs over ``1..n`` and ``p[i]`` is its value there.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

__all__ = [
    "PermutationError",
    "ReconstructionError",
    "Permutation",
    "PermGraph",
    "BarDiagram",
    "make_permutation",
    "parse_permutation",
    "identity",
    "build_graph",
    "build_bar_diagram",
    "rl_minima",
    "final_ascent",
    "inverse",
    "reconstruct",
    "cover_edges",
]


class PermutationError(ValueError):
    """Input does not describe a permutation of 1..n."""


class ReconstructionError(ValueError):
    """A graph is not the graph of any permutation."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1..n}`` in one-line notation (``n >= 1``).

    Build it with :func:`make_permutation` so the values get validated.
    """

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        # 1-based access
        if not 1 <= i <= len(self.values):
            raise IndexError(i)
        return self.values[i - 1]

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.values))
        return " ".join(map(str, self.values))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def pos(self, value: int) -> int:
        """Position of ``value`` (the inverse permutation at ``value``)."""
        return self.values.index(value) + 1

    def is_increasing(self) -> bool:
        return all(v == i for i, v in enumerate(self.values, 1))


def make_permutation(values: Iterable[int]) -> Permutation:
    vals = tuple(int(v) for v in values)
    if not vals:
        raise PermutationError("empty permutation")
    n = len(vals)
    seen = set()
    for v in vals:
        if not 1 <= v <= n:
            raise PermutationError(f"value {v} outside 1..{n}")
        if v in seen:
            raise PermutationError(f"repeated value {v}")
        seen.add(v)
    return Permutation(vals)


def parse_permutation(text: str) -> Permutation:
    """Parse ``"6 4 3 7 5 1 8 2"``, ``"6,4,3"`` or the compact ``"64375182"``.

    The compact digit form is only accepted for ``n <= 9``.
    """
    s = text.strip()
    if not s:
        raise PermutationError("empty permutation")
    if re.fullmatch(r"[1-9]+", s):
        if len(s) > 9:
            raise PermutationError("compact form is limited to n <= 9; separate entries by spaces")
        return make_permutation(int(c) for c in s)
    parts = [t for t in re.split(r"[\s,]+", s) if t]
    try:
        return make_permutation(int(t) for t in parts)
    except ValueError as exc:
        if isinstance(exc, PermutationError):
            raise
        raise PermutationError(f"cannot parse {text!r}") from None


def identity(n: int) -> Permutation:
    return make_permutation(range(1, n + 1))


def cover_edges(values: Sequence[int]) -> list[tuple[int, int]]:
    """Edges ``(i, j)`` of the Hasse diagram of ``{(i, values[i])}``, 1-based.

    Works on any sequence of distinct numbers; edges come out sorted.
    """
    n = len(values)
    edges = []
    for i in range(n):
        low = values[i]
        ceiling = None
        for j in range(i + 1, n):
            v = values[j]
            # v is covered by low iff nothing seen so far sits in (low, v)
            if v > low and (ceiling is None or v < ceiling):
                edges.append((i + 1, j + 1))
                ceiling = v
    return edges


@dataclass(frozen=True)
class PermGraph:
    """Undirected graph on ``1..n``; each edge is stored as ``(i, j)``, ``i < j``.

    Orienting every edge from ``i`` to ``j`` gives the Hasse diagram of the
    dimension-2 order induced by the permutation.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.edges:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"bad edge {(i, j)} for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> PermGraph:
        return cls(n, frozenset((min(a, b), max(a, b)) for a, b in edges))

    @property
    def e(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, list[int]]:
        adj = {v: [] for v in range(1, self.n + 1)}
        for i, j in sorted(self.edges):
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def successors(self) -> dict[int, list[int]]:
        succ = {v: [] for v in range(1, self.n + 1)}
        for i, j in sorted(self.edges):
            succ[i].append(j)
        return succ

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(range(1, self.n + 1), 0)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        adj = self.adjacency()
        seen: set[int] = set()
        comps = []
        for v in range(1, self.n + 1):
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def find_cycle(self) -> list[int] | None:
        """A cycle as a closed vertex walk ``[v0, ..., vk]`` (``v0`` not repeated), or None."""
        adj = self.adjacency()
        parent: dict[int, int | None] = {}
        for root in range(1, self.n + 1):
            if root in parent:
                continue
            parent[root] = None
            depth = {root: 0}
            stack = [root]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w == parent[u]:
                        continue
                    if w in parent:
                        # back edge u-w closes a cycle; walk both up to the meeting point
                        a, b = u, w
                        left, right = [a], [b]
                        while depth[a] > depth[b]:
                            a = parent[a]
                            left.append(a)
                        while depth[b] > depth[a]:
                            b = parent[b]
                            right.append(b)
                        while a != b:
                            a, b = parent[a], parent[b]
                            left.append(a)
                            right.append(b)
                        right.pop()
                        return left + right[::-1]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    stack.append(w)
        return None

    def is_forest(self) -> bool:
        return len(self.edges) == self.n - len(self.components())

    def is_tree(self) -> bool:
        return len(self.edges) == self.n - 1 and self.is_connected()

    def is_path(self) -> bool:
        return self.is_tree() and all(d <= 2 for d in self.degrees().values())

    def has_triangle(self) -> bool:
        adj = {v: set(ws) for v, ws in self.adjacency().items()}
        return any(adj[i] & adj[j] for i, j in self.edges)

    def relabel(self, mapping: Sequence[int]) -> PermGraph:
        """Graph obtained by renaming vertex ``v`` to ``mapping[v - 1]``."""
        return PermGraph.from_edges(self.n, ((mapping[i - 1], mapping[j - 1]) for i, j in self.edges))


@dataclass(frozen=True)
class BarDiagram:
    """Bars ``(i, j)`` between columns ``1..n``; bar ``(i, j)`` crosses dividers ``i..j-1``.

    ``bars`` is kept in lexicographic (start, end) order.
    """

    n: int
    bars: tuple[tuple[int, int], ...] = field(default=())

    @property
    def dividers(self) -> range:
        return range(1, self.n)

    def crossing(self, divider: int) -> list[tuple[int, int]]:
        return [b for b in self.bars if b[0] <= divider < b[1]]

    def crossing_counts(self) -> list[int]:
        return [len(self.crossing(d)) for d in self.dividers]


def build_graph(p: Permutation) -> PermGraph:
    return PermGraph(p.n, frozenset(cover_edges(p.values)))


def build_bar_diagram(p: Permutation) -> BarDiagram:
    return BarDiagram(p.n, tuple(cover_edges(p.values)))


def rl_minima(p: Permutation) -> list[int]:
    """Positions ``i`` with ``p[i] < p[j]`` for every ``j > i``; ``len`` of this is m(p)."""
    out = []
    low = p.n + 1
    for i in range(p.n, 0, -1):
        if p[i] < low:
            out.append(i)
            low = p[i]
    return out[::-1]


def final_ascent(p: Permutation) -> int:
    """Length of the longest increasing suffix."""
    vals = p.values
    a = 1
    while a < len(vals) and vals[-a - 1] < vals[-a]:
        a += 1
    return a


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, v in enumerate(p.values, 1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def reconstruct(g: PermGraph) -> Permutation:
    """Recover the permutation whose graph is ``g``.

    Orient each edge upward; ``reach[i]`` counts the vertices reachable from
    ``i`` (``i`` included), which equals the number of later positions holding
    a larger value.  Reading positions left to right, ``p[i]`` is then the
    ``reach[i]``-th largest value not used yet.
    """
    n = g.n
    if n < 1:
        raise ReconstructionError("empty graph")
    succ = g.successors()
    reach: dict[int, set[int]] = {}
    for v in range(n, 0, -1):
        r = {v}
        for w in succ[v]:
            r |= reach[w]
        reach[v] = r
    free = list(range(1, n + 1))
    vals = []
    for i in range(1, n + 1):
        a = len(reach[i])
        if a > len(free):
            raise ReconstructionError(f"vertex {i} reaches {a} vertices but only {len(free)} values remain")
        vals.append(free.pop(len(free) - a))
    p = Permutation(tuple(vals))
    if build_graph(p).edges != g.edges:
        raise ReconstructionError("graph is not realised by any permutation")
    return p
