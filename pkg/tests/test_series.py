import math
from fractions import Fraction

import pytest
import sympy

from forestperm.classify import classify
from forestperm.series import (
    BIVARIATE_CLASSES,
    CLASSES,
    BivarSeries,
    SeriesError,
    TruncSeries,
    bisect_root,
    bivariate_closed_form,
    catalan_series,
    closed_form,
    functional_equation_fixed_point,
    growth_ratio,
    growth_target,
    v_series,
)

from conftest import perms

N = 9


def test_sqrt_one_minus_four_x():
    x = TruncSeries.x(8)
    r = (1 - 4 * x).sqrt()
    assert r.to_list()[:6] == [1, -2, -2, -4, -10, -28]
    assert (r * r).to_list() == (1 - 4 * x).to_list()


def test_basic_arithmetic():
    x = TruncSeries.x(6)
    assert ((1 - x) * (1 - x).inverse()).to_list() == [1, 0, 0, 0, 0, 0, 0]
    assert (x / x).to_list()[0] == 1
    assert (x * x).shift(-2).to_list()[0] == 1
    with pytest.raises(SeriesError):
        x.inverse()
    with pytest.raises(SeriesError):
        (2 + x).sqrt()
    with pytest.raises(SeriesError):
        TruncSeries.of([Fraction(1, 2)], 3).integral()


def test_catalan_and_kernel_root():
    u = catalan_series(12)
    assert u.to_list()[:5] == [1, 1, 2, 5, 14]
    assert u.to_list() == [math.comb(2 * k, k) // (k + 1) for k in range(13)]
    x = TruncSeries.x(12)
    assert all(c == 0 for c in (u - 1 - x * u * u).to_list())
    v = v_series(12)
    assert all(c == 0 for c in (v - x * (1 + v) * (1 + v)).to_list())


FOREST = [0, 1, 2, 6, 22, 89, 379, 1661]


def test_closed_form_values():
    assert closed_form("forest", 7).to_list() == FOREST
    assert closed_form("rooted", 5).to_list() == [0, 1, 1, 2, 5, 14]
    assert closed_form("tree", 9).to_list() == [0, 1, 1, 3, 11, 44, 184, 789, 3435, 15100]
    assert closed_form("smooth", 9).to_list() == [0, 1, 2, 6, 22, 88, 366, 1552, 6652, 28696]
    assert closed_form("path", 10).to_list() == [0, 1] + [2 ** (n - 1) - 1 for n in range(2, 11)]


def test_closed_forms_against_sympy():
    x = sympy.symbols("x")
    r = sympy.sqrt(1 - 4 * x)
    forest = ((1 - x) * (1 - 4 * x - 2 * x**2) - (1 - 5 * x) * r) / (2 * (1 - 5 * x + 2 * x**2 - x**3))
    ser = sympy.series(forest, x, 0, 12).removeO()
    assert [ser.coeff(x, k) for k in range(12)] == closed_form("forest", 11).to_list()


def brute_census(n):
    out = {c: 0 for c in CLASSES}
    for p in perms(n):
        r = classify(p)
        out["forest"] += r.forest_like
        out["tree"] += r.tree_like
        out["rooted"] += r.rooted_tree_like
        out["path"] += r.path_like
        out["smooth"] += r.smooth
    return out


@pytest.mark.parametrize("cls", CLASSES)
def test_fixed_point_matches_closed_form(cls):
    fp = functional_equation_fixed_point(cls, 16).at_one().to_list()
    assert fp == closed_form(cls, 16).to_list()


def test_closed_forms_match_brute_force():
    for n in range(1, 8):
        counts = brute_census(n)
        for c in CLASSES:
            assert closed_form(c, 7)[n] == counts[c], (c, n)


def refined_brute(n):
    tab = {c: [0] * (n + 1) for c in BIVARIATE_CLASSES}
    for p in perms(n):
        r = classify(p)
        if r.forest_like:
            tab["forest"][r.m] += 1
        if r.tree_like:
            tab["tree"][r.m] += 1
        if r.rooted_tree_like:
            tab["rooted"][r.m] += 1
            tab["rooted-by-ascent"][r.a] += 1
        if r.smooth:
            tab["smooth"][r.a] += 1
    return tab


def pad(xs, w):
    return list(xs) + [0] * (w - len(xs))


def test_bivariate_x_cubed():
    assert bivariate_closed_form("forest", 5)[3] == (0, 2, 3, 1)
    assert functional_equation_fixed_point("forest", 5)[3] == (0, 2, 3, 1)
    assert bivariate_closed_form("smooth", 3)[1] == (0, 1)


@pytest.mark.parametrize("cls", BIVARIATE_CLASSES)
def test_bivariate_against_brute_force(cls):
    closed = bivariate_closed_form(cls, 7)
    fixed = functional_equation_fixed_point(cls, 7)
    for n in range(1, 8):
        want = refined_brute(n)[cls]
        assert pad(closed[n], n + 1) == want
        assert pad(fixed[n], n + 1) == want


@pytest.mark.parametrize("cls", BIVARIATE_CLASSES)
def test_specialization_at_one(cls):
    uni = "rooted" if cls == "rooted-by-ascent" else cls
    assert bivariate_closed_form(cls, 14).at_one().to_list() == closed_form(uni, 14).to_list()


def test_rooted_shape_and_forest_link():
    order = 12
    r = bivariate_closed_form("rooted", order)
    r1 = closed_form("rooted", order)
    x = BivarSeries.monomial(1, 1, order)
    lhs = r * (1 - BivarSeries.monomial(0, 1, order) * r1)
    assert lhs.to_lists() == x.to_lists()
    t1 = closed_form("tree", order)
    f1 = closed_form("forest", order)
    assert (t1 / (1 - t1)).to_list() == f1.to_list()


def test_series_stay_integral_at_order_30():
    for c in CLASSES:
        assert all(isinstance(k, int) for k in closed_form(c, 30).to_list())


def test_unknown_class_and_order():
    with pytest.raises(ValueError):
        closed_form("weird", 5)
    with pytest.raises(ValueError):
        closed_form("forest", 0)
    with pytest.raises(ValueError):
        bivariate_closed_form("path", 5)
    with pytest.raises(ValueError):
        functional_equation_fixed_point("plane", 5)
    with pytest.raises(ValueError):
        growth_ratio("forest", 5)


def test_bisection_is_exact():
    root = bisect_root([-2, 0, 1], Fraction(1), Fraction(2))
    assert isinstance(root, Fraction)
    assert abs(root - Fraction(14142135623731, 10**13)) < Fraction(1, 10**11)
    with pytest.raises(ValueError):
        bisect_root([1, 0, 1], Fraction(0), Fraction(1))
    f = growth_target("forest")
    assert abs(f**3 - 5 * f**2 + 2 * f - 1) < Fraction(1, 10**9)
    assert abs(float(f) - 4.6134) < 1e-3


def test_path_ratio_converges():
    assert abs(growth_ratio("path", 20) - 2) < Fraction(1, 10**4)
