"""Subclass membership of a permutation, with witnesses, and the four-way forest check."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .core import Permutation, build_bar_diagram, build_graph, final_ascent, rl_minima
from .patterns import contains_1324, contains_2143, contains_21bar354
from .sorting import incidence_matrix, is_onto, sort_bars

__all__ = ["ClassReport", "InconsistencyError", "classify", "cross_validate", "CrossValidation"]


class InconsistencyError(AssertionError):
    """Two characterisations that must agree did not; this is a bug, not bad input."""


@dataclass(frozen=True)
class ClassReport:
    n: int
    e: int
    m: int
    a: int
    forest_like: bool
    tree_like: bool
    rooted_tree_like: bool
    path_like: bool
    smooth: bool
    plane: bool
    increasing: bool
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("forest_like", "tree_like", "rooted_tree_like", "path_like", "smooth", "plane", "increasing")

    def flags(self) -> dict[str, bool]:
        return {k: getattr(self, k) for k in self.FLAGS}

    def to_json(self) -> dict:
        d = asdict(self)
        return {
            "n": d["n"],
            "flags": self.flags(),
            "witnesses": {k: list(v) if isinstance(v, tuple) else v for k, v in self.witnesses.items()},
            "e": self.e,
            "m": self.m,
            "a": self.a,
        }


def classify(p: Permutation) -> ClassReport:
    g = build_graph(p)
    witnesses: dict = {}
    cycle = g.find_cycle()
    forest = cycle is None
    if cycle is not None:
        witnesses["cycle"] = cycle
    comps = g.components()
    tree = forest and len(comps) == 1
    if forest and not tree:
        # the component of vertex 1 is cut off from the rest
        witnesses["component"] = comps[0]
    path = tree and max(g.degrees().values(), default=0) <= 2
    rooted = tree and p[1] == 1
    w1324 = contains_1324(p)
    w2143 = contains_2143(p)
    wbar = contains_21bar354(p)
    if w1324:
        witnesses["1324"] = w1324
    if w2143:
        witnesses["2143"] = w2143
    if wbar:
        witnesses["21bar354"] = wbar
    rep = ClassReport(
        n=p.n,
        e=g.e,
        m=len(rl_minima(p)),
        a=final_ascent(p),
        forest_like=forest,
        tree_like=tree,
        rooted_tree_like=rooted,
        path_like=path,
        smooth=w1324 is None and w2143 is None,
        plane=wbar is None,
        increasing=p.is_increasing(),
        witnesses=witnesses,
    )
    _check_inclusions(p, rep)
    return rep


def _check_inclusions(p, r: ClassReport) -> None:
    implied = [
        ("tree_like", "forest_like"),
        ("rooted_tree_like", "tree_like"),
        ("path_like", "tree_like"),
        ("smooth", "forest_like"),
        ("forest_like", "plane"),
        ("increasing", "path_like"),
    ]
    for a, b in implied:
        if getattr(r, a) and not getattr(r, b):
            raise InconsistencyError(f"{p}: {a} without {b}")
    if r.forest_like and p[1] == 1 and not r.tree_like:
        raise InconsistencyError(f"{p}: forest-like with p(1)=1 but not tree-like")


@dataclass(frozen=True)
class CrossValidation:
    perm: Permutation
    graph: bool
    sorting: bool
    smith: bool
    patterns: bool

    @property
    def agree(self) -> bool:
        return self.graph == self.sorting == self.smith == self.patterns

    @property
    def forest_like(self) -> bool:
        return self.graph


def cross_validate(p: Permutation, strict: bool = True) -> CrossValidation:
    """Decide forest-likeness by graph acyclicity, bar sorting, Smith form and patterns.

    With ``strict`` a disagreement raises :class:`InconsistencyError`.
    """
    g = build_graph(p)
    d = build_bar_diagram(p)
    cv = CrossValidation(
        perm=p,
        graph=g.is_forest(),
        sorting=sort_bars(d).fully_sorted,
        smith=is_onto(incidence_matrix(d)),
        patterns=contains_1324(p) is None and contains_21bar354(p) is None,
    )
    if strict and not cv.agree:
        raise InconsistencyError(
            f"{p}: graph={cv.graph} sorting={cv.sorting} smith={cv.smith} patterns={cv.patterns}"
        )
    return cv
