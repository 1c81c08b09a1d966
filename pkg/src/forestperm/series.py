"""Exact truncated power series in ``x``, optionally with polynomial coefficients in a second variable.

Coefficients are Python ints or :class:`fractions.Fraction`; nothing is
ever evaluated in floating point.  The generating functions exported by
:func:`closed_form`, :func:`bivariate_closed_form` and
:func:`functional_equation_fixed_point` are checked to have integer
coefficients and converted to ``int``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = [
    "SeriesError",
    "TruncSeries",
    "BivarSeries",
    "CLASSES",
    "BIVARIATE_CLASSES",
    "FIXPOINT_CLASSES",
    "closed_form",
    "bivariate_closed_form",
    "functional_equation_fixed_point",
    "catalan_series",
    "v_series",
    "growth_ratio",
    "growth_target",
    "bisect_root",
]

CLASSES = ("forest", "tree", "rooted", "path", "smooth")
BIVARIATE_CLASSES = ("forest", "tree", "rooted", "smooth", "rooted-by-ascent")
FIXPOINT_CLASSES = ("forest", "tree", "rooted", "path", "smooth", "rooted-by-ascent")


class SeriesError(ArithmeticError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


@dataclass(frozen=True)
class TruncSeries:
    """``sum(coeffs[k] * x**k for k <= order)``; terms above ``order`` are unknown."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        c = tuple(_norm(x) for x in self.coeffs[: self.order + 1])
        c += (0,) * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def of(cls, coeffs: Sequence, order: int) -> TruncSeries:
        return cls(tuple(coeffs), order)

    @classmethod
    def constant(cls, c, order: int) -> TruncSeries:
        return cls((c,), order)

    @classmethod
    def x(cls, order: int, power: int = 1) -> TruncSeries:
        return cls((0,) * power + (1,), order)

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k <= self.order else 0

    def __len__(self) -> int:
        return self.order + 1

    def _lift(self, other) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Rational)):
            return TruncSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncSeries(tuple(self[k] + other[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return TruncSeries(tuple(c * other for c in self.coeffs), self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncSeries(tuple(out), n)

    __rmul__ = __mul__

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def shift(self, k: int) -> TruncSeries:
        """Multiply by ``x**k`` (``k < 0`` divides, dropping precision)."""
        if k >= 0:
            return TruncSeries((0,) * k + self.coeffs, self.order + k)
        if any(self.coeffs[:-k]):
            raise SeriesError("division by x leaves a negative power")
        return TruncSeries(self.coeffs[-k:], self.order + k)

    def inverse(self) -> TruncSeries:
        c0 = self[0]
        if not c0:
            raise SeriesError("series with zero constant term is not invertible")
        out = [_div(1, c0)]
        for k in range(1, self.order + 1):
            acc = sum(self[j] * out[k - j] for j in range(1, k + 1))
            out.append(_div(-acc, c0))
        return TruncSeries(tuple(out), self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return TruncSeries(tuple(_div(c, other) for c in self.coeffs), self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        v = other.valuation()
        if v is None:
            raise SeriesError("division by zero series")
        return self.shift(-v) * other.shift(-v).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def sqrt(self) -> TruncSeries:
        if self[0] != 1:
            raise SeriesError("sqrt needs constant term 1")
        s = [1]
        for k in range(1, self.order + 1):
            acc = sum(s[j] * s[k - j] for j in range(1, k))
            s.append(_div(self[k] - acc, 2))
        return TruncSeries(tuple(s), self.order)

    def truncate(self, order: int) -> TruncSeries:
        return TruncSeries(self.coeffs, min(order, self.order))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def integral(self) -> TruncSeries:
        if not self.is_integral():
            bad = next(k for k, c in enumerate(self.coeffs) if not isinstance(c, int))
            raise SeriesError(f"non-integer coefficient {self.coeffs[bad]} at x^{bad}")
        return self

    def to_list(self) -> list:
        return list(self.coeffs)


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _ptrim(out)


def _pscale(p, c):
    return _ptrim([x * c for x in p]) if c else ()


def _pmul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _ptrim(out)


def _ptrim(p):
    p = [_norm(c) for c in p]
    while p and not p[-1]:
        p.pop()
    return tuple(p)


@dataclass(frozen=True)
class BivarSeries:
    """Series in ``x`` whose ``x**k`` coefficient is a polynomial in ``u``.

    ``coeffs[k]`` is a tuple of polynomial coefficients, lowest ``u``-degree first.
    """

    coeffs: tuple
    order: int

    def __post_init__(self):
        c = tuple(_ptrim(p) for p in self.coeffs[: self.order + 1])
        c += ((),) * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, order: int) -> BivarSeries:
        return cls((), order)

    @classmethod
    def from_univariate(cls, s: TruncSeries) -> BivarSeries:
        return cls(tuple((c,) for c in s.coeffs), s.order)

    @classmethod
    def monomial(cls, xpow: int, upow: int, order: int, c=1) -> BivarSeries:
        coeffs = [()] * (order + 1)
        if xpow <= order:
            coeffs[xpow] = (0,) * upow + (c,)
        return cls(tuple(coeffs), order)

    def __getitem__(self, k: int) -> tuple:
        return self.coeffs[k] if 0 <= k <= self.order else ()

    def coefficient(self, xpow: int, upow: int):
        p = self[xpow]
        return p[upow] if upow < len(p) else 0

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            other = BivarSeries.monomial(0, 0, self.order, other)
        elif isinstance(other, TruncSeries):
            other = BivarSeries.from_univariate(other)
        if not isinstance(other, BivarSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return BivarSeries(tuple(_padd(self[k], other[k]) for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self):
        return BivarSeries(tuple(_pscale(p, -1) for p in self.coeffs), self.order)

    def __sub__(self, other):
        if isinstance(other, TruncSeries):
            other = BivarSeries.from_univariate(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return BivarSeries(tuple(_pscale(p, other) for p in self.coeffs), self.order)
        if isinstance(other, TruncSeries):
            # cheap path: scalar coefficients
            n = min(self.order, other.order)
            out = [()] * (n + 1)
            for i in range(n + 1):
                if self[i]:
                    for j in range(n + 1 - i):
                        if other[j]:
                            out[i + j] = _padd(out[i + j], _pscale(self[i], other[j]))
            return BivarSeries(tuple(out), n)
        if not isinstance(other, BivarSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [()] * (n + 1)
        for i in range(n + 1):
            if self[i]:
                for j in range(n + 1 - i):
                    if other[j]:
                        out[i + j] = _padd(out[i + j], _pmul(self[i], other[j]))
        return BivarSeries(tuple(out), n)

    __rmul__ = __mul__

    def mul_u(self, k: int = 1) -> BivarSeries:
        return BivarSeries(tuple((0,) * k + p if p else () for p in self.coeffs), self.order)

    def inverse(self) -> BivarSeries:
        c0 = self[0]
        if len(c0) != 1 or not c0[0]:
            raise SeriesError("constant term must be a nonzero constant")
        c = c0[0]
        out = [(_div(1, c),)]
        for k in range(1, self.order + 1):
            acc = ()
            for j in range(1, k + 1):
                if self[j] and out[k - j]:
                    acc = _padd(acc, _pmul(self[j], out[k - j]))
            out.append(_ptrim([_div(-a, c) for a in acc]))
        return BivarSeries(tuple(out), self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return BivarSeries(tuple(_ptrim([_div(a, other) for a in p]) for p in self.coeffs), self.order)
        if isinstance(other, TruncSeries):
            other = BivarSeries.from_univariate(other)
        return self * other.inverse()

    def at_one(self) -> TruncSeries:
        return TruncSeries(tuple(sum(p) for p in self.coeffs), self.order)

    def derivative_at_one(self) -> TruncSeries:
        return TruncSeries(tuple(sum(i * c for i, c in enumerate(p)) for p in self.coeffs), self.order)

    def divided_difference(self) -> BivarSeries:
        """``(A(u) - A(1)) / (u - 1)`` on each coefficient: ``u^i -> 1 + u + ... + u^(i-1)``."""
        out = []
        for p in self.coeffs:
            q = [0] * max(len(p) - 1, 0)
            for i, c in enumerate(p):
                for t in range(i):
                    q[t] += c
            out.append(tuple(q))
        return BivarSeries(tuple(out), self.order)

    def shifted_divided_difference(self) -> BivarSeries:
        """``(u A(u) - A(1)) / (u - 1)``: ``u^i -> 1 + u + ... + u^i``."""
        return self.mul_u().divided_difference()

    def substitute(self, s: TruncSeries) -> TruncSeries:
        """Replace the catalytic variable by a series in ``x``."""
        n = min(self.order, s.order)
        total = TruncSeries.constant(0, n)
        power = TruncSeries.constant(1, n)
        deg = max((len(p) for p in self.coeffs), default=0)
        for d in range(deg):
            col = TruncSeries(tuple(p[d] if d < len(p) else 0 for p in self.coeffs), n)
            total = total + col * power
            power = power * s
        return total

    def truncate(self, order: int) -> BivarSeries:
        return BivarSeries(self.coeffs, min(order, self.order))

    def integral(self) -> BivarSeries:
        for k, p in enumerate(self.coeffs):
            for d, c in enumerate(p):
                if not isinstance(c, int):
                    raise SeriesError(f"non-integer coefficient {c} at x^{k} u^{d}")
        return self

    def to_lists(self) -> list[list]:
        return [list(p) for p in self.coeffs]

    def table(self) -> list[list]:
        """Rectangular ``[x-power][u-degree]`` table, zero padded."""
        width = max((len(p) for p in self.coeffs), default=0)
        return [list(p) + [0] * (width - len(p)) for p in self.coeffs]


# --- the auxiliary series ----------------------------------------------------


def _sqrt_1_minus_4x(order: int) -> TruncSeries:
    return (1 - 4 * TruncSeries.x(order)).sqrt()


def catalan_series(order: int) -> TruncSeries:
    """``(1 - sqrt(1 - 4x)) / (2x)`` to the given order: the kernel root in ``u``."""
    one_more = order + 1
    num = 1 - _sqrt_1_minus_4x(one_more)
    return (num.shift(-1) / 2).truncate(order)


def v_series(order: int) -> TruncSeries:
    return catalan_series(order) - 1


def _x(order):
    return TruncSeries.x(order)


def closed_form(cls: str, order: int) -> TruncSeries:
    """Expand the closed-form generating function of a class to ``x**order``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    x = _x(order)
    root = _sqrt_1_minus_4x(order)
    if cls == "forest":
        num = (1 - x) * (1 - 4 * x - 2 * x * x) - (1 - 5 * x) * root
        den = 2 * (1 - 5 * x + 2 * x * x - x * x * x)
        s = num / den
    elif cls == "tree":
        num = 1 - 3 * x - 6 * x * x - (1 - 5 * x) * root
        s = num / (2 * (2 - 9 * x))
    elif cls == "rooted":
        s = (1 - root) / 2
    elif cls == "path":
        s = x * (1 - 2 * x + 2 * x * x) / ((1 - x) * (1 - 2 * x))
    elif cls == "smooth":
        num = 1 - 5 * x + 4 * x * x + x * root
        s = x * num / (1 - 6 * x + 8 * x * x - 4 * x * x * x)
    else:
        raise ValueError(f"unknown class {cls!r}; expected one of {CLASSES}")
    return s.integral()


def _bx(order):
    return BivarSeries.from_univariate(_x(order))


def _u(order):
    return BivarSeries.monomial(0, 1, order)


def bivariate_closed_form(cls: str, order: int) -> BivarSeries:
    """Closed bivariate forms; forest, tree and rooted count rl-minima, the rest the final ascent."""
    if order < 1:
        raise ValueError("order must be >= 1")
    x = _x(order)
    u = _u(order)
    one = BivarSeries.monomial(0, 0, order)
    if cls in ("forest", "tree", "smooth"):
        V = v_series(order)
        Vb = BivarSeries.from_univariate(V)
        one_plus = 1 + V
        lin = one + Vb - u * V  # 1 + V - uV
        if cls in ("forest", "tree"):
            top = BivarSeries.from_univariate(one_plus * one_plus * (1 - 2 * V)) - u * (V * (1 - 2 * V - 2 * V * V))
            bottom_u = lin * lin
            if cls == "tree":
                res = (u * x) * top / (bottom_u * (1 - 2 * V))
            else:
                res = (u * V) * top / (bottom_u * (1 - V - 2 * V * V - V * V * V))
        else:
            cubic = 1 - V - V * V - V * V * V
            top = BivarSeries.from_univariate(one_plus * (1 - V * V - V * V * V)) - u * (V * cubic)
            one_minus_xu = one - u * x
            res = (u * x) * top / (lin * one_minus_xu * cubic)
    elif cls == "rooted":
        r1 = closed_form("rooted", order)
        res = (u * x) / (one - u * r1)
    elif cls == "rooted-by-ascent":
        r1 = closed_form("rooted", order)
        a = _ascent_seed(order)
        res = a * (1 - r1) / (1 - x - r1)
    else:
        raise ValueError(f"unknown class {cls!r}; expected one of {BIVARIATE_CLASSES}")
    return res.truncate(order).integral()


def _ascent_seed(order: int) -> BivarSeries:
    """``x v (1 - x) / (1 - x v)``, the rooted permutations whose 1 is in the final ascent."""
    x = _x(order)
    v = _u(order)
    geo = (BivarSeries.monomial(0, 0, order) - v * x).inverse()
    return (v * (x * (1 - x))) * geo


# --- functional equations, solved x-adically ----------------------------------


def _iterate(step, start, order: int, max_rounds: int | None = None):
    cur = start
    rounds = max_rounds if max_rounds is not None else order + 2
    for _ in range(rounds):
        nxt = step(cur)
        if nxt.coeffs == cur.coeffs:
            return nxt
        cur = nxt
    raise SeriesError("fixed point iteration did not settle")


def _rooted_fp(order):
    x = _x(order)
    xu = _u(order) * x

    def step(r):
        return xu + xu * r + (r - xu) * r.at_one()

    return _iterate(step, BivarSeries.zero(order), order)


def _rooted_ascent_fp(order):
    x = _x(order)
    a = _ascent_seed(order)

    def step(r):
        return a + r * x + (r - a) * r.at_one()

    return _iterate(step, BivarSeries.zero(order), order)


def functional_equation_fixed_point(cls: str, order: int) -> BivarSeries:
    """Solve a class's functional equation by iterating it from zero.

    Every term on the right carries a factor ``x``, so each round fixes at
    least one more coefficient; iteration stops once two rounds agree.  The
    ``path`` result has no catalytic variable (constant polynomials).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    x = _x(order)
    u = _u(order)
    xu = u * x
    if cls == "rooted":
        res = _rooted_fp(order)
    elif cls == "rooted-by-ascent":
        res = _rooted_ascent_fp(order)
    elif cls == "forest":
        r = _rooted_fp(order)
        xu2 = u * xu

        def step(f):
            f1 = f.at_one()
            return xu + xu * f1 + xu2 * f.divided_difference() + (r - xu) * f.derivative_at_one()

        res = _iterate(step, BivarSeries.zero(order), order)
    elif cls == "tree":
        r = _rooted_fp(order)
        xu2 = u * xu

        def step(t):
            return xu + xu2 * t.divided_difference() + (r - xu) * t.derivative_at_one()

        res = _iterate(step, BivarSeries.zero(order), order)
    elif cls == "path":
        geo = (1 - x).inverse()

        def step(p):
            return x + x * x * geo * geo + x * geo * (p - x)

        res = BivarSeries.from_univariate(_iterate(step, TruncSeries.constant(0, order), order))
    elif cls == "smooth":
        rbar = _rooted_ascent_fp(order)
        seed = _ascent_seed(order)
        lead = u * (x * (1 - x))  # x v (1 - x)

        def step(s):
            s1 = s.at_one()
            q = (1 - x) * (s.derivative_at_one() + s1) - x
            return lead + s * x + lead * s.shifted_divided_difference() + (rbar - seed) * q

        res = _iterate(step, BivarSeries.zero(order), order)
    else:
        raise ValueError(f"unknown class {cls!r}; expected one of {FIXPOINT_CLASSES}")
    return res.integral()


# --- growth rates ----------------------------------------------------------------


def bisect_root(poly: Sequence[int], lo: Fraction, hi: Fraction, tol: Fraction = Fraction(1, 10**12)) -> Fraction:
    """Root of ``sum(poly[k] t**k)`` in ``[lo, hi]`` by exact bisection; needs a sign change."""

    def ev(t):
        return sum(c * t**k for k, c in enumerate(poly))

    lo, hi = Fraction(lo), Fraction(hi)
    flo, fhi = ev(lo), ev(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError("no sign change on the interval")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fm = ev(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def growth_target(cls: str) -> Fraction:
    """Exponential growth rate of a class's counting sequence."""
    if cls == "forest":
        return bisect_root([-1, 2, -5, 1], Fraction(4), Fraction(5))
    if cls == "smooth":
        return bisect_root([-4, 8, -6, 1], Fraction(4), Fraction(5))
    return {"tree": Fraction(9, 2), "rooted": Fraction(4), "path": Fraction(2)}[cls]


def growth_ratio(cls: str, order: int) -> Fraction:
    if order < 10:
        raise ValueError("growth ratios need order >= 10")
    s = closed_form(cls, order)
    return Fraction(s[order], s[order - 1])
