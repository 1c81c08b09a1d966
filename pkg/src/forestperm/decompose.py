"""Recursive decomposition of forest-like permutations around the entry 1.

A forest-like permutation whose 1 is not in last position splits into a
triple ``(tau, sigma, k)``: a rooted tree-like ``tau`` holding the smallest
entries, a forest-like ``sigma`` holding the rest, and the rank ``k`` (counted
from the right) of the rl-minimum of ``sigma`` in front of which the 1 sat.
When the 1 is last, the permutation is just a smaller one with 1 appended
(:func:`strip_last_one` / :func:`append_one`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Permutation, build_graph, final_ascent, make_permutation, rl_minima
from .patterns import contains_1324, contains_2143

__all__ = [
    "DecompTriple",
    "DecompositionError",
    "RecurrenceError",
    "phi",
    "phi_inverse",
    "strip_last_one",
    "append_one",
    "statistics_check",
    "StatsRecord",
]


class DecompositionError(ValueError):
    pass


class RecurrenceError(AssertionError):
    pass


@dataclass(frozen=True)
class DecompTriple:
    tau: Permutation
    sigma: Permutation
    k: int

    def __post_init__(self):
        if self.tau[1] != 1:
            raise DecompositionError(f"tau={self.tau} must start with 1")
        m = len(rl_minima(self.sigma))
        if not 1 <= self.k <= m:
            raise DecompositionError(f"k={self.k} outside 1..{m}")

    def __str__(self) -> str:
        return f"({self.tau}, {self.sigma}, {self.k})"


def _pattern(vals) -> tuple[int, ...]:
    order = sorted(vals)
    rank = {v: r for r, v in enumerate(order, 1)}
    return tuple(rank[v] for v in vals)


def _is_forest(p: Permutation) -> bool:
    return build_graph(p).is_forest()


def phi(p: Permutation, check: bool = True) -> DecompTriple:
    n = p.n
    v = p.values
    i = p.pos(1)
    if i == n:
        raise DecompositionError("1 is in last position; use strip_last_one")
    if check and not _is_forest(p):
        raise DecompositionError(f"{p} is not forest-like")
    h = min([v[i]] + list(v[: i - 1]))  # v[i] is p(i+1)
    # the h-1 smallest entries are 1 and the last h-2 entries
    tail = v[n - (h - 2):] if h > 2 else ()
    if sorted(tail) != list(range(2, h)):
        raise DecompositionError(f"{p}: trailing entries are not 2..{h - 1}")
    tau = make_permutation((1,) + tail)
    rest = v[: i - 1] + v[i: n - (h - 2)]
    sigma = make_permutation(x - h + 1 for x in rest)
    mins = rl_minima(sigma)
    if i not in mins:
        raise DecompositionError(f"{p}: sigma({i}) is not an rl-minimum")
    k = len(mins) - mins.index(i)
    return DecompTriple(tau, sigma, k)


def phi_inverse(t: DecompTriple) -> Permutation:
    shift = t.tau.n
    mins = rl_minima(t.sigma)
    i = mins[len(mins) - t.k]
    s = [x + shift for x in t.sigma.values]
    return make_permutation(s[: i - 1] + [1] + s[i - 1:] + list(t.tau.values[1:]))


def strip_last_one(p: Permutation) -> Permutation:
    if p.values[-1] != 1 or p.n < 2:
        raise DecompositionError(f"{p} does not end with 1")
    return make_permutation(x - 1 for x in p.values[:-1])


def append_one(p: Permutation) -> Permutation:
    return make_permutation([x + 1 for x in p.values] + [1])


@dataclass(frozen=True)
class StatsRecord:
    m_pi: int
    m_expected: int
    a_pi: int
    a_expected: int | None  # None when p is not smooth
    tree: tuple[bool, bool]
    rooted: tuple[bool, bool]
    path: tuple[bool, bool]
    smooth: tuple[bool, bool]

    @property
    def ok(self) -> bool:
        pairs = (self.tree, self.rooted, self.path, self.smooth)
        return (
            self.m_pi == self.m_expected
            and (self.a_expected is None or self.a_pi == self.a_expected)
            and all(x == y for x, y in pairs)
        )

    def as_dict(self) -> dict:
        return {
            "m": [self.m_pi, self.m_expected],
            "a": [self.a_pi, self.a_expected],
            "tree": list(self.tree),
            "rooted": list(self.rooted),
            "path": list(self.path),
            "smooth": list(self.smooth),
            "ok": self.ok,
        }


def _smooth(p: Permutation) -> bool:
    return contains_1324(p) is None and contains_2143(p) is None


def statistics_check(p: Permutation, t: DecompTriple, strict: bool = True) -> StatsRecord:
    """Compare statistics of ``p`` with what the triple ``t = phi(p)`` predicts.

    Each class pair is ``(actual, predicted)``.
    """
    tau, sigma, k = t.tau, t.sigma, t.k
    tau_one = tau.n == 1
    m_sigma = len(rl_minima(sigma))
    a_sigma = final_ascent(sigma)

    m_exp = k + 1 if tau_one else len(rl_minima(tau))

    smooth_pi = _smooth(p)
    a_exp = None
    if smooth_pi:
        if tau_one and k <= a_sigma:
            a_exp = k + 1
        elif tau_one and k == m_sigma:
            a_exp = a_sigma
        elif not tau_one and tau.is_increasing():
            a_exp = final_ascent(tau) - 1
        else:
            a_exp = final_ascent(tau)

    g_pi, g_sigma = build_graph(p), build_graph(sigma)
    pos = rl_minima(sigma)[m_sigma - k]
    endpoint = g_sigma.degree(pos) == 1 or sigma.n == 1
    rec = StatsRecord(
        m_pi=len(rl_minima(p)),
        m_expected=m_exp,
        a_pi=final_ascent(p),
        a_expected=a_exp,
        tree=(g_pi.is_tree(), g_sigma.is_tree()),
        rooted=(g_pi.is_tree() and p[1] == 1, g_sigma.is_tree() and sigma[1] == 1 and k == m_sigma),
        path=(g_pi.is_path(), tau.is_increasing() and g_sigma.is_path() and endpoint),
        smooth=(smooth_pi, _smooth(sigma) and (k == m_sigma or k <= a_sigma)),
    )
    if strict and not rec.ok:
        raise RecurrenceError(f"{p} = phi^-1{t}: {rec}")
    return rec
