"""Exhaustive cross-checks over S_1..S_n, shared by ``forestperm verify`` and the test suite."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .bijections import from_plane_tree, from_ud_word, to_plane_tree, to_ud_word
from .census import bruhat_covers, expected_total_edges, run_census
from .classify import classify, cross_validate
from .core import build_bar_diagram, build_graph, make_permutation, reconstruct
from .decompose import phi, phi_inverse, statistics_check
from .patterns import contains_21bar354, natural_embedding_crosses
from .series import bivariate_closed_form, closed_form, functional_equation_fixed_point
from .sorting import incidence_matrix, is_bijective

__all__ = ["Check", "verify", "REFINED_SOURCES"]

# census table -> bivariate series class
REFINED_SOURCES = {
    ("forest", "rl-minima"): "forest",
    ("tree", "rl-minima"): "tree",
    ("rooted", "rl-minima"): "rooted",
    ("smooth", "final-ascent"): "smooth",
    ("rooted", "final-ascent"): "rooted-by-ascent",
}


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _perms(n):
    return (make_permutation(t) for t in permutations(range(1, n + 1)))


def _pad(xs, width):
    xs = list(xs)
    return xs + [0] * (width - len(xs))


def verify(n: int, workers: int | None = None, bruhat_max: int = 7) -> list[Check]:
    checks: list[Check] = []
    add = checks.append
    rows = {k: run_census(k, workers=workers) for k in range(1, n + 1)}
    closed = {c: closed_form(c, n) for c in ("forest", "tree", "rooted", "path", "smooth")}
    fixed = {c: functional_equation_fixed_point(c, n) for c in ("forest", "tree", "rooted", "path", "smooth", "rooted-by-ascent")}
    bivar = {c: bivariate_closed_form(c, n) for c in ("forest", "tree", "rooted", "smooth", "rooted-by-ascent")}

    for k in range(1, n + 1):
        bad_thm = bad_cor = bad_rt = bad_plane = bad_class = 0
        bad_phi = bad_stats = 0
        bad_bruhat = 0
        trees, words = set(), set()
        bad_bij = 0
        row = rows[k]
        tally = dict.fromkeys(row.counts, 0)
        for p in _perms(k):
            cv = cross_validate(p, strict=False)
            g = build_graph(p)
            bad_thm += not cv.agree
            bad_cor += is_bijective(incidence_matrix(build_bar_diagram(p))) != g.is_tree()
            bad_rt += reconstruct(g) != p
            bad_plane += (contains_21bar354(p) is None) == natural_embedding_crosses(p)
            r = classify(p)
            for cls, flag in (("forest", r.forest_like), ("tree", r.tree_like), ("rooted", r.rooted_tree_like),
                              ("path", r.path_like), ("smooth", r.smooth), ("plane", r.plane)):
                tally[cls] += flag
            if r.forest_like and p.pos(1) < k:
                t = phi(p)
                bad_phi += phi_inverse(t) != p
                bad_stats += not statistics_check(p, t, strict=False).ok
            if r.rooted_tree_like:
                tr = to_plane_tree(p)
                bad_bij += from_plane_tree(tr) != p
                trees.add(tr)
            if r.path_like and k >= 2:
                w = to_ud_word(p)
                bad_bij += from_ud_word(w) != p
                words.add(w)
            if k <= bruhat_max:
                bad_bruhat += bruhat_covers(p) != g.e
        add(Check(f"S_{k}: graph/sorting/Smith/pattern verdicts agree", bad_thm == 0, f"{bad_thm} disagreements"))
        add(Check(f"S_{k}: Smith bijectivity iff tree", bad_cor == 0, f"{bad_cor} disagreements"))
        add(Check(f"S_{k}: reconstruction round trip", bad_rt == 0, f"{bad_rt} failures"))
        add(Check(f"S_{k}: embedding crossings iff 21-bar-3-54", bad_plane == 0, f"{bad_plane} disagreements"))
        add(Check(f"S_{k}: census kernel matches classify", tally == row.counts, str(row.counts)))
        add(Check(f"S_{k}: decomposition round trip and recurrences", bad_phi == 0 and bad_stats == 0,
                  f"{bad_phi} round-trip, {bad_stats} recurrence failures"))
        catalan = math.comb(2 * (k - 1), k - 1) // k
        paths = 2 ** (k - 1) - 1 if k >= 2 else 0
        add(Check(f"S_{k}: bijection round trips and image sizes",
                  bad_bij == 0 and len(trees) == catalan and len(words) == paths,
                  f"{len(trees)} trees, {len(words)} words, {bad_bij} failures"))
        if k >= 2:
            lang = {"".join(w) for w in product("UD", repeat=k - 1)} - {"D" * (k - 1)}
            add(Check(f"S_{k}: U/D image is every word with a U", words == lang))
        if k <= bruhat_max:
            add(Check(f"S_{k}: Bruhat covers equal edge count", bad_bruhat == 0, f"{bad_bruhat} failures"))
        add(Check(f"S_{k}: total edges formula", row.total_edges == expected_total_edges(k),
                  f"{row.total_edges} vs {expected_total_edges(k)}"))
        fact = math.factorial(k)
        bars_ok = all(Fraction(c) == Fraction(fact, j - i + 1) for (i, j), c in row.bar_counts.items())
        add(Check(f"S_{k}: bar (i,j) occurs in n!/(j-i+1) permutations", bars_ok))
        add(Check(f"S_{k}: max edges is floor(n^2/4)", row.max_edges == k * k // 4, str(row.max_edges)))
        for c in closed:
            vals = (row.counts[c], closed[c][k], fixed[c].at_one()[k])
            add(Check(f"S_{k}: {c} census = closed form = fixed point", len(set(vals)) == 1, str(vals)))
        for (c, stat), src in REFINED_SOURCES.items():
            census_t = row.refined[c][stat]
            w = len(census_t)
            b = _pad(bivar[src][k], w)
            f = _pad(fixed[src][k], w)
            add(Check(f"S_{k}: {c} by {stat} census = bivariate = fixed point", census_t == b == f))
    return checks
