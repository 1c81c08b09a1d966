"""Plane trees for rooted tree-like permutations, U/D words for path-like ones."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Permutation, build_graph, identity, make_permutation, rl_minima
from .decompose import DecompTriple, phi, phi_inverse

__all__ = [
    "BijectionError",
    "PlaneTree",
    "to_plane_tree",
    "from_plane_tree",
    "all_plane_trees",
    "embedding_tree",
    "to_ud_word",
    "from_ud_word",
    "ud_walk",
]


class BijectionError(ValueError):
    pass


@dataclass(frozen=True)
class PlaneTree:
    """Ordered rooted tree; ``children`` run left to right."""

    children: tuple[PlaneTree, ...] = ()

    @property
    def edges(self) -> int:
        return sum(1 + c.edges for c in self.children)

    def serialize(self) -> str:
        # each child contributes "(" + its own serialization + ")"
        return "".join("(" + c.serialize() + ")" for c in self.children)

    @classmethod
    def parse(cls, text: str) -> PlaneTree:
        stack: list[list[PlaneTree]] = [[]]
        for ch in text.strip():
            if ch == "(":
                stack.append([])
            elif ch == ")":
                if len(stack) == 1:
                    raise BijectionError(f"unbalanced parentheses in {text!r}")
                kids = stack.pop()
                stack[-1].append(cls(tuple(kids)))
            elif not ch.isspace():
                raise BijectionError(f"unexpected character {ch!r} in tree string")
        if len(stack) != 1:
            raise BijectionError(f"unbalanced parentheses in {text!r}")
        return cls(tuple(stack[0]))

    def __str__(self) -> str:
        return self.serialize()


def _is_rooted_tree_like(p: Permutation) -> bool:
    return p[1] == 1 and build_graph(p).is_tree()


def to_plane_tree(p: Permutation) -> PlaneTree:
    if not _is_rooted_tree_like(p):
        raise BijectionError(f"{p} is not rooted tree-like")
    return _tree_of(p)


def _tree_of(p: Permutation) -> PlaneTree:
    if p.n == 1:
        return PlaneTree()
    t = phi(p, check=False)
    # the rooted case always has k = m(sigma)
    left = _tree_of(t.tau)
    rest = _tree_of(t.sigma)
    return PlaneTree((left,) + rest.children)


def from_plane_tree(t: PlaneTree) -> Permutation:
    if not t.children:
        return identity(1)
    tau = from_plane_tree(t.children[0])
    sigma = from_plane_tree(PlaneTree(t.children[1:]))
    return phi_inverse(DecompTriple(tau, sigma, len(rl_minima(sigma))))


def all_plane_trees(edges: int) -> list[PlaneTree]:
    """Every plane tree with the given number of edges."""
    if edges == 0:
        return [PlaneTree()]
    out = []
    # first child subtree with s edges, then the rest of the root
    for s in range(edges):
        for first in all_plane_trees(s):
            for rest in all_plane_trees(edges - 1 - s):
                out.append(PlaneTree((first,) + rest.children))
    return out


def embedding_tree(p: Permutation) -> PlaneTree:
    """Plane tree read off the drawing with vertex ``i`` at ``(i, p[i])``.

    Rooted at vertex 1, children ordered by position.  Exploratory only: it is
    not claimed to coincide with :func:`to_plane_tree`.
    """
    if not _is_rooted_tree_like(p):
        raise BijectionError(f"{p} is not rooted tree-like")
    adj = build_graph(p).adjacency()

    def grow(v, parent):
        return PlaneTree(tuple(grow(w, v) for w in sorted(adj[v]) if w != parent))

    return grow(1, None)


def ud_walk(p: Permutation) -> list[int]:
    """Vertices of the path graph of ``p``, from its lowest-labelled end."""
    g = build_graph(p)
    if p.n < 2 or not g.is_path():
        raise BijectionError(f"{p} is not path-like with n >= 2")
    adj = g.adjacency()
    start = min(v for v, ws in adj.items() if len(ws) == 1)
    walk = [start]
    prev = None
    while True:
        nxt = [w for w in adj[walk[-1]] if w != prev]
        if not nxt:
            return walk
        prev = walk[-1]
        walk.append(nxt[0])


def to_ud_word(p: Permutation) -> str:
    walk = ud_walk(p)
    return "".join("U" if b > a else "D" for a, b in zip(walk, walk[1:]))


def from_ud_word(w: str) -> Permutation:
    """Inverse of :func:`to_ud_word`.

    Words split by their last ``D``: ``U^a`` is the identity, ``D^b U^a``
    puts 1 in front of an increasing block of ``b`` large values, and
    ``W D U^j`` (``W`` containing a U) hangs an increasing tail of length
    ``j`` plus the entry 1 off the far end of the path for ``W``.
    """
    w = w.strip().upper()
    if not w or set(w) - {"U", "D"}:
        raise BijectionError(f"{w!r} is not a nonempty word over U, D")
    if "U" not in w:
        raise BijectionError(f"{w} is not in the image (all letters D)")
    last = w.rfind("D")
    if last < 0:
        return identity(len(w) + 1)
    prefix, j = w[:last], len(w) - last - 1
    if "U" not in prefix:
        b, a = last + 1, j
        return make_permutation([1] + list(range(a + 2, a + b + 2)) + list(range(2, a + 2)))
    sigma = from_ud_word(prefix)
    end = ud_walk(sigma)[-1]
    mins = rl_minima(sigma)
    if end not in mins:
        raise BijectionError(f"far end of {prefix} is not an rl-minimum")
    k = len(mins) - mins.index(end)
    return phi_inverse(DecompTriple(identity(j + 1), sigma, k))
