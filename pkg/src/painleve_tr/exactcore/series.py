"""Truncated Laurent series with exact coefficients, expansion and residues."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from flint.utils.flint_exceptions import DomainError

from .ratfunc import RationalFunction, _coerce, _poly_coefficients, _INDEX, var

__all__ = ["INFINITY", "LaurentSeries", "laurent_expand", "residue", "sqrt_series"]


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return "INFINITY"


#: The point at infinity; series there use the local coordinate u = 1/z.
INFINITY = _Infinity()

_ZERO = RationalFunction()


class LaurentSeries:
    """``sum(coeffs[i] * u**(valuation + i)) + O(u**prec)``.

    ``point`` records where the series was expanded (``INFINITY`` means the
    local coordinate is ``1/z``); it only matters for :meth:`residue`.
    Treat instances as immutable.
    """

    __slots__ = ("valuation", "coeffs", "prec", "point")

    def __init__(self, valuation: int, coeffs, prec: int, point=None):
        coeffs = [c if isinstance(c, RationalFunction) else _coerce(c) for c in coeffs]
        coeffs = coeffs[: max(0, prec - valuation)]
        k = 0
        while k < len(coeffs) and coeffs[k].is_zero():
            k += 1
        if k == len(coeffs):
            valuation, coeffs = prec, []
        else:
            valuation, coeffs = valuation + k, coeffs[k:]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.valuation = valuation
        self.coeffs = coeffs
        self.prec = prec
        self.point = point

    # -- basic queries ---------------------------------------------------
    @classmethod
    def monomial(cls, coeff, exponent: int, prec: int, point=None) -> "LaurentSeries":
        return cls(exponent, [coeff], prec, point)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, e: int) -> RationalFunction:
        if e >= self.prec:
            raise ValueError(f"coefficient of u^{e} is beyond the truncation O(u^{self.prec})")
        i = e - self.valuation
        if i < 0 or i >= len(self.coeffs):
            return _ZERO
        return self.coeffs[i]

    def __getitem__(self, e: int) -> RationalFunction:
        return self.coefficient(e)

    def exponents(self):
        return range(self.valuation, self.valuation + len(self.coeffs))

    def as_dict(self) -> dict[int, RationalFunction]:
        return {e: c for e, c in zip(self.exponents(), self.coeffs) if not c.is_zero()}

    def truncate(self, prec: int) -> "LaurentSeries":
        return LaurentSeries(self.valuation, self.coeffs, min(prec, self.prec), self.point)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by u**k."""
        return LaurentSeries(self.valuation + k, self.coeffs, self.prec + k, self.point)

    def residue(self) -> RationalFunction:
        """Residue of ``f dz`` (at infinity: ``-[u^1] f`` with ``u = 1/z``)."""
        if self.point is INFINITY:
            return -self.coefficient(1)
        return self.coefficient(-1)

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return LaurentSeries(self.valuation, [-c for c in self.coeffs], self.prec, self.point)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries(0, [_coerce(other)], self.prec, self.point)
        prec = min(self.prec, other.prec)
        v = min(self.valuation, other.valuation)
        out = [_ZERO] * max(0, prec - v)
        for series in (self, other):
            for i, c in enumerate(series.coeffs):
                j = series.valuation + i - v
                if j < len(out):
                    out[j] = out[j] + c
        return LaurentSeries(v, out, prec, self.point)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries(0, [_coerce(other)], self.prec, self.point)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "LaurentSeries":
        c = _coerce(c)
        if c.is_zero():
            return LaurentSeries(self.prec, [], self.prec, self.point)
        return LaurentSeries(self.valuation, [c * a for a in self.coeffs], self.prec, self.point)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        v = self.valuation + other.valuation
        prec = min(self.valuation + other.prec, other.valuation + self.prec)
        n = max(0, prec - v)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(min(n, len(a) + len(b) - 1)):
            acc = _ZERO
            for i in range(max(0, k - len(b) + 1), min(k, len(a) - 1) + 1):
                ai = a[i]
                bj = b[k - i]
                if not ai.is_zero() and not bj.is_zero():
                    acc = acc + ai * bj
            out.append(acc)
        return LaurentSeries(v, out, prec, self.point)

    def __rmul__(self, other):
        return self.scale(other)

    def inverse(self) -> "LaurentSeries":
        if self.is_zero():
            raise ZeroDivisionError("inverse of a series that vanishes to its truncation order")
        v = self.valuation
        n = self.prec - v
        a = self.coeffs
        inv0 = a[0].inverse()
        b = [inv0]
        for k in range(1, n):
            acc = _ZERO
            for i in range(1, min(k, len(a) - 1) + 1):
                acc = acc + a[i] * b[k - i]
            b.append(-acc * inv0)
        return LaurentSeries(-v, b, self.prec - 2 * v, self.point)

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * other.inverse()
        return self.scale(_coerce(other).inverse())

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentSeries(0, [1], self.prec - self.valuation, self.point)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self) -> "LaurentSeries":
        return LaurentSeries(
            self.valuation - 1,
            [c * (self.valuation + i) for i, c in enumerate(self.coeffs)],
            self.prec - 1,
            self.point,
        )

    def integral(self) -> "LaurentSeries":
        """Termwise primitive; a nonzero ``u^-1`` term would need a logarithm and is rejected."""
        if self.valuation <= -1 < self.prec and not self.coefficient(-1).is_zero():
            raise ValueError("series has a u^-1 term; its primitive is not a Laurent series")
        out = []
        for i, c in enumerate(self.coeffs):
            e = self.valuation + i
            out.append(_ZERO if e == -1 else c / (e + 1))
        return LaurentSeries(self.valuation + 1, out, self.prec + 1, self.point)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        return self.truncate(prec).as_dict() == other.truncate(prec).as_dict()

    def __repr__(self):
        terms = " + ".join(f"({c})*u^{e}" for e, c in self.as_dict().items()) or "0"
        return f"{terms} + O(u^{self.prec})"


def laurent_expand(f, variable: str, point, order: int) -> LaurentSeries:
    """Expand ``f`` in the local coordinate at ``point`` through ``u**order``.

    For a finite point the local coordinate is ``u = variable - point``; at
    ``INFINITY`` it is ``u = 1/variable``.  The result is exact modulo
    ``u**(order + 1)``.
    """
    f = _coerce(f)
    if "u" in f.variables():
        raise ValueError("the variable 'u' is reserved for local coordinates")
    u = var("u")
    if point is INFINITY:
        g = f.subs({variable: 1 / u})
    else:
        g = f.subs({variable: _coerce(point) + u})
    iu = _INDEX["u"]
    num = [RationalFunction(c) for c in _poly_coefficients(g.num, iu)]
    den = [RationalFunction(c) for c in _poly_coefficients(g.den, iu)]
    vn = next(i for i, c in enumerate(num) if not c.is_zero()) if not g.is_zero() else None
    if vn is None:
        return LaurentSeries(order + 1, [], order + 1, point)
    vd = next(i for i, c in enumerate(den) if not c.is_zero())
    a, d = num[vn:], den[vd:]
    val = vn - vd
    n = order + 1 - val
    d0inv = d[0].inverse()
    c = []
    for k in range(max(0, n)):
        acc = a[k] if k < len(a) else _ZERO
        for i in range(1, min(k, len(d) - 1) + 1):
            if not d[i].is_zero():
                acc = acc - d[i] * c[k - i]
        c.append(acc * d0inv)
    return LaurentSeries(val, c, order + 1, point)


def residue(f, point=None, variable: str = "z") -> RationalFunction:
    """Residue of ``f d(variable)`` at ``point`` (``INFINITY`` allowed).

    ``f`` may be a rational function or an already expanded :class:`LaurentSeries`.
    """
    if isinstance(f, LaurentSeries):
        return f.residue()
    order = 1 if point is INFINITY else -1
    return laurent_expand(f, variable, point, order).residue()


def _exact_sqrt(c: RationalFunction) -> RationalFunction:
    if c.is_constant():
        q = c.constant()
        if q < 0:
            raise DomainError("negative constant")
        rn, rd = isqrt(q.numerator), isqrt(q.denominator)
        if rn * rn != q.numerator or rd * rd != q.denominator:
            raise DomainError("not a rational square")
        return RationalFunction.constant_of(Fraction(rn, rd))
    return RationalFunction(c.num.sqrt(), c.den.sqrt())


def sqrt_series(f, variable: str, point, order: int, sign: int = 1) -> LaurentSeries:
    """Series ``g`` with ``g**2 = f`` through ``u**order``; ``sign`` picks the branch."""
    f = _coerce(f)
    if f.is_zero():
        raise ValueError("cannot take the square root of zero")
    reach = 0
    probe = laurent_expand(f, variable, point, reach)
    while probe.is_zero():
        # valuation is above the probe order; it is bounded by the degrees of f
        reach += 4
        probe = laurent_expand(f, variable, point, reach)
    v = probe.valuation
    if v % 2:
        raise ValueError(f"odd leading order u^{v}: no Laurent square root")
    m = v // 2
    if order < m:
        raise ValueError(f"order {order} is below the leading exponent {m}")
    fs = laurent_expand(f, variable, point, order + m)
    a = fs.coeffs
    try:
        b0 = _exact_sqrt(a[0])
    except DomainError:
        raise ValueError(
            f"leading coefficient {a[0]} is not a square in the active field; "
            "choose the internal parameter (s = sqrt(-theta/q0), w = sqrt(theta)) "
            "or a numeric value that makes it a perfect square"
        ) from None
    if sign < 0:
        b0 = -b0
    inv = (b0 * 2).inverse()
    b = [b0]
    for k in range(1, order - m + 1):
        acc = a[k] if k < len(a) else _ZERO
        for i in range(1, k):
            acc = acc - b[i] * b[k - i]
        b.append(acc * inv)
    return LaurentSeries(m, b, order + 1, point)
