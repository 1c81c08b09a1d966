"""Acceptance criteria 1-10.  Each test prints one PASS/FAIL line, then asserts."""

import math
import time
from fractions import Fraction
from itertools import product

import pytest

from forestperm.bijections import from_plane_tree, from_ud_word, to_plane_tree, to_ud_word
from forestperm.census import bruhat_covers, cube_graph, expected_total_edges, realizability_scan, run_census
from forestperm.classify import cross_validate
from forestperm.core import build_bar_diagram, build_graph
from forestperm.decompose import phi, phi_inverse, statistics_check
from forestperm.patterns import contains_21bar354, natural_embedding_crosses
from forestperm.series import (
    CLASSES,
    bivariate_closed_form,
    closed_form,
    functional_equation_fixed_point,
    growth_ratio,
    growth_target,
)
from forestperm.sorting import incidence_matrix, is_bijective
from forestperm.verify import REFINED_SOURCES

from conftest import perms

GROWTH_ORDER = 30
GROWTH_TOL = Fraction(1, 100)


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance {number:>2}] {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return emit


@pytest.fixture(scope="module")
def census():
    rows, times = {}, {}
    for n in range(1, 10):
        t0 = time.perf_counter()
        rows[n] = run_census(n)
        times[n] = time.perf_counter() - t0
    return rows, times


def test_criterion_01_forest_series(census, report):
    rows, times = census
    got = [rows[n].counts["forest"] for n in range(1, 10)]
    closed = closed_form("forest", 9)
    small = sum(times[n] for n in range(1, 9))
    ok = (got[:7] == [1, 2, 6, 22, 89, 379, 1661]
          and got[7:] == [closed[8], closed[9]]
          and small < 1.0 and times[9] < 30.0)
    report(1, ok, f"forest counts n=1..9 {got}; census n<=8 {small:.2f}s, n=9 {times[9]:.2f}s")


def test_criterion_02_four_way_equivalence(report):
    bad = bad_cor = total = 0
    for n in range(1, 9):
        for p in perms(n):
            total += 1
            cv = cross_validate(p, strict=False)
            bad += not cv.agree
            bad_cor += is_bijective(incidence_matrix(build_bar_diagram(p))) != build_graph(p).is_tree()
    report(2, bad == 0 and bad_cor == 0,
           f"{total} permutations, {bad} four-way disagreements, {bad_cor} Smith-bijective vs tree disagreements")


def test_criterion_03_five_classes(census, report):
    rows, _ = census
    closed = {c: closed_form(c, 9) for c in CLASSES}
    fixed = {c: functional_equation_fixed_point(c, 9).at_one() for c in CLASSES}
    bad = [(c, n) for c in CLASSES for n in range(1, 10)
           if not rows[n].counts[c] == closed[c][n] == fixed[c][n]]
    spots = (all(rows[n].counts["rooted"] == math.comb(2 * (n - 1), n - 1) // n for n in range(1, 10))
             and all(rows[n].counts["path"] == 2 ** (n - 1) - 1 for n in range(2, 10))
             and rows[4].counts["smooth"] == 22)
    report(3, not bad and spots, f"census = closed form = fixed point for 5 classes, n<=9; mismatches {bad}; spot values {'ok' if spots else 'wrong'}")


def _pad(xs, w):
    return list(xs) + [0] * (w - len(xs))


def test_criterion_04_bivariate(census, report):
    rows, _ = census
    bad = []
    for (cls, stat), src in REFINED_SOURCES.items():
        closed = bivariate_closed_form(src, 8)
        fixed = functional_equation_fixed_point(src, 8)
        for n in range(1, 9):
            want = rows[n].refined[cls][stat]
            if not want == _pad(closed[n], n + 1) == _pad(fixed[n], n + 1):
                bad.append((cls, stat, n))
    x3 = bivariate_closed_form("forest", 3)[3]
    ok = not bad and x3 == (0, 2, 3, 1)
    report(4, ok, f"{len(REFINED_SOURCES)} refined tables n<=8, mismatches {bad}; [x^3]F(x,u) coefficients {list(x3)}")


def test_criterion_05_bijections(report):
    bad, sizes = 0, []
    for n in range(1, 10):
        trees, words = set(), set()
        for p in perms(n):
            g = build_graph(p)
            if not g.is_tree():
                continue
            if p[1] == 1:
                t = to_plane_tree(p)
                bad += from_plane_tree(t) != p
                trees.add(t)
            if n >= 2 and g.is_path():
                w = to_ud_word(p)
                bad += from_ud_word(w) != p
                words.add(w)
        want_t = math.comb(2 * (n - 1), n - 1) // n
        want_w = 2 ** (n - 1) - 1 if n >= 2 else 0
        if len(trees) != want_t or len(words) != want_w:
            sizes.append(n)
    lang_bad = []
    for n in range(2, 11):
        for w in ("".join(t) for t in product("UD", repeat=n - 1)):
            if "U" not in w:
                continue
            p = from_ud_word(w)
            if not build_graph(p).is_path() or to_ud_word(p) != w:
                lang_bad.append(w)
    ok = bad == 0 and not sizes and not lang_bad
    report(5, ok, f"round-trip failures {bad}; image-size mismatches at n {sizes}; "
                  f"U/D language n<=10 mismatches {len(lang_bad)}")


def test_criterion_06_decomposition(report):
    fails = checked = 0
    for n in range(2, 9):
        for p in perms(n):
            if p.pos(1) == n or not build_graph(p).is_forest():
                continue
            checked += 1
            t = phi(p)
            if phi_inverse(t) != p or phi(phi_inverse(t)) != t or not statistics_check(p, t, strict=False).ok:
                fails += 1
    report(6, fails == 0, f"{checked} decompositions n<=8, {fails} round-trip or recurrence failures")


def test_criterion_07_edge_statistics(census, report):
    rows, _ = census
    bruhat_bad = sum(bruhat_covers(p) != build_graph(p).e for n in range(1, 8) for p in perms(n))
    sums_bad = [n for n in range(1, 9) if rows[n].total_edges != expected_total_edges(n)]
    bars_bad = [n for n in range(1, 8)
                if any(c * (j - i + 1) != math.factorial(n) for (i, j), c in rows[n].bar_counts.items())]
    ok = not bruhat_bad and not sums_bad and not bars_bad and expected_total_edges(3) == 8
    report(7, ok, f"Bruhat mismatches n<=7 {bruhat_bad}; edge-sum failures {sums_bad}; "
                  f"bar-frequency failures {bars_bad}; e(3)={rows[3].total_edges}")


def test_criterion_08_planarity(report):
    bad = total = 0
    for n in range(1, 9):
        for p in perms(n):
            total += 1
            bad += (contains_21bar354(p) is None) == natural_embedding_crosses(p)
    report(8, bad == 0, f"{total} permutations, {bad} embedding vs 21-bar-3-54 disagreements")


def test_criterion_09_cube(report):
    t0 = time.perf_counter()
    w = realizability_scan(8, cube_graph())
    dt = time.perf_counter() - t0
    report(9, w is None and dt < 60, f"cube witness in S_8: {w}; scan {dt:.2f}s")


def test_criterion_10_growth_ratios(report):
    parts, ok = [], True
    for cls in ("forest", "smooth", "tree", "rooted"):
        r = growth_ratio(cls, GROWTH_ORDER)
        target = growth_target(cls)
        rel = abs(r - target) / target
        ok &= rel <= GROWTH_TOL
        parts.append(f"{cls} {float(r):.5f} vs {float(target):.5f} ({float(rel) * 100:.3f}%)")
    report(10, ok, f"N={GROWTH_ORDER}, tolerance 1%: " + "; ".join(parts))
