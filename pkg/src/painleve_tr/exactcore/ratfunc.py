"""Exact rational functions over Q in a fixed set of named variables.

Numerators and denominators are python-flint ``fmpq_mpoly`` objects sharing a
single lexicographic context.  Every value is kept in canonical form: the
numerator and denominator are coprime and the denominator is monic with
respect to the context ordering, so structural equality is mathematical
equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

import flint

__all__ = [
    "BigRational",
    "PARAMETERS",
    "RationalFunction",
    "VARIABLES",
    "as_fraction",
    "parse_rational",
    "var",
]

#: Arbitrary-precision rationals.  ``Fraction`` keeps gcd(|num|, den) = 1 and den > 0.
BigRational = Fraction

VARIABLES = (
    "s", "q0", "w", "theta", "x", "z",
    "z0", "z1", "z2", "z3", "z4", "z5", "z6", "u",
)
PARAMETERS = ("s", "q0", "w", "theta")

_CTX = flint.fmpq_mpoly_ctx.get(VARIABLES, "lex")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_GENS = _CTX.gens()
_ZERO = _CTX.constant(0)
_ONE = _CTX.constant(1)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

Scalar = Union[int, Fraction, "flint.fmpq"]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` (optional sign, optional ``/q``) into an exact rational."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    m = _RATIONAL_RE.match(str(text))
    if m is None:
        raise ValueError(f"not an exact rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def _to_fmpq(c) -> "flint.fmpq":
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, int):
        return flint.fmpq(c)
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if isinstance(c, flint.fmpz):
        return flint.fmpq(c)
    raise TypeError(f"cannot convert {type(c).__name__} to an exact rational")


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, flint.fmpq):
        return Fraction(int(c.p), int(c.q))
    if isinstance(c, flint.fmpz):
        return Fraction(int(c))
    if isinstance(c, RationalFunction):
        return c.constant()
    raise TypeError(f"cannot convert {type(c).__name__} to Fraction")


def _poly_coefficients(poly, index: int) -> list:
    """Split ``poly`` into coefficients of powers of the variable at ``index``."""
    buckets: dict[int, dict] = {}
    for exps, c in poly.to_dict().items():
        e = exps[index]
        key = exps[:index] + (0,) + exps[index + 1:]
        buckets.setdefault(e, {})[key] = c
    if not buckets:
        return [_ZERO]
    out = [_ZERO] * (max(buckets) + 1)
    for e, terms in buckets.items():
        out[e] = _CTX.from_dict(terms)
    return out


class RationalFunction:
    """A canonical quotient of two polynomials over Q.

    Supports the field operations, exact equality, partial derivatives and
    substitution of variables by other rational functions.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None, *, _canonical: bool = False):
        if not isinstance(num, flint.fmpq_mpoly):
            num = _CTX.constant(_to_fmpq(num))
        if den is None:
            den = _ONE
            _canonical = True
        elif not isinstance(den, flint.fmpq_mpoly):
            den = _CTX.constant(_to_fmpq(den))
        if not _canonical:
            if den.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
            if num.is_zero():
                num, den = _ZERO, _ONE
            elif not den.is_constant():
                g = num.gcd(den)
                if not g.is_one():
                    num = num / g
                    den = den / g
            lc = den.leading_coefficient()
            if lc != 1:
                num = num / lc
                den = den / lc
        self.num = num
        self.den = den

    # -- construction -------------------------------------------------
    @classmethod
    def variable(cls, name: str) -> "RationalFunction":
        return cls(_GENS[_INDEX[name]], _ONE, _canonical=True)

    @classmethod
    def constant_of(cls, c) -> "RationalFunction":
        return cls(_CTX.constant(_to_fmpq(c)), _ONE, _canonical=True)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable, name: str) -> "RationalFunction":
        """Build ``sum(coeffs[i] * name**i)``; coefficients may be numbers or rational functions."""
        v = cls.variable(name)
        acc = cls()
        for c in reversed(list(coeffs)):
            acc = acc * v + c
        return acc

    # -- predicates and accessors -------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        if self.num.is_zero():
            return Fraction(0)
        c = self.num.leading_coefficient() / self.den.leading_coefficient()
        return Fraction(int(c.p), int(c.q))

    def variables(self) -> frozenset:
        used = set()
        for poly in (self.num, self.den):
            if poly.is_zero():
                continue
            for i, d in enumerate(poly.degrees()):
                if d:
                    used.add(VARIABLES[i])
        return frozenset(used)

    def degree(self, name: str) -> tuple[int, int]:
        """Degrees of numerator and denominator in ``name``."""
        i = _INDEX[name]
        dn = self.num.degrees()[i] if not self.num.is_zero() else -1
        return dn, self.den.degrees()[i]

    def coefficients(self, name: str) -> list["RationalFunction"]:
        """Coefficients of a polynomial in ``name`` (index = degree)."""
        if not self.den.is_constant():
            raise ValueError("coefficients() requires a polynomial in the variable")
        i = _INDEX[name]
        return [RationalFunction(c, self.den) for c in _poly_coefficients(self.num, i)]

    def numerator(self) -> "RationalFunction":
        return RationalFunction(self.num, _ONE, _canonical=True)

    def denominator(self) -> "RationalFunction":
        return RationalFunction(self.den, _ONE, _canonical=True)

    def factor_denominator(self) -> list[tuple["RationalFunction", int]]:
        _, factors = self.den.factor()
        return [(RationalFunction(f), m) for f, m in factors]

    def factor_numerator(self) -> list[tuple["RationalFunction", int]]:
        _, factors = self.num.factor()
        return [(RationalFunction(f), m) for f, m in factors]

    # -- arithmetic -----------------------------------------------------
    def __neg__(self):
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        if b.is_one() and d.is_one():
            return RationalFunction(a + c, _ONE, _canonical=True)
        if b == d:
            return RationalFunction(a + c, b)
        g = b.gcd(d)
        if g.is_one():
            return RationalFunction(a * d + c * b, b * d, _canonical=True)
        b1 = b / g
        d1 = d / g
        num = a * d1 + c * b1
        if num.is_zero():
            return RationalFunction()
        h = num.gcd(g)
        if not h.is_one():
            num = num / h
            g = g / h
        return RationalFunction(num, g * b1 * d1, _canonical=True)._monic()

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RationalFunction()
        if b.is_one() and d.is_one():
            return RationalFunction(a * c, _ONE, _canonical=True)
        if not d.is_one():
            g1 = a.gcd(d)
            if not g1.is_one():
                a = a / g1
                d = d / g1
        if not b.is_one():
            g2 = c.gcd(b)
            if not g2.is_one():
                c = c / g2
                b = b / g2
        return RationalFunction(a * c, b * d, _canonical=True)._monic()

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num, _canonical=True)._monic()

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k, _canonical=True)

    def _monic(self):
        lc = self.den.leading_coefficient()
        if lc != 1:
            self.num = self.num / lc
            self.den = self.den / lc
        return self

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    def __bool__(self):
        return not self.num.is_zero()

    # -- calculus and substitution -----------------------------------------
    def derivative(self, name: str) -> "RationalFunction":
        n, d = self.num, self.den
        dn = n.derivative(name)
        if d.is_constant():
            return RationalFunction(dn, d, _canonical=True) if not dn.is_zero() else RationalFunction()
        dd = d.derivative(name)
        return RationalFunction(dn * d - n * dd, d * d)

    def subs(self, mapping: Mapping[str, object]) -> "RationalFunction":
        """Substitute variables simultaneously.

        Values may be numbers or rational functions.  Polynomial values are
        substituted in one pass; a single rational value (for instance a
        Moebius map of the same variable) is handled by homogenisation.
        """
        vals = {k: _coerce(v) for k, v in mapping.items() if k in self.variables()}
        if not vals:
            return self
        if all(v.is_constant() for v in vals.values()):
            table = {k: _to_fmpq(v.constant()) for k, v in vals.items()}
            return RationalFunction(self.num.subs(table), self.den.subs(table))
        if all(v.is_polynomial() for v in vals.values()):
            args = list(_GENS)
            for k, v in vals.items():
                args[_INDEX[k]] = v.num * (1 / v.den.leading_coefficient())
            return RationalFunction(self.num.compose(*args), self.den.compose(*args))
        if len(vals) == 1:
            (name, value), = vals.items()
            return self._subs_rational(name, value)
        keys = set(vals)
        if any(v.variables() & keys for v in vals.values()):
            raise ValueError("simultaneous substitution of interdependent rational values")
        out = self
        for k, v in vals.items():
            out = out._subs_rational(k, v)
        return out

    def _subs_rational(self, name: str, value: "RationalFunction") -> "RationalFunction":
        i = _INDEX[name]
        p, q = value.num, value.den
        num_c = _poly_coefficients(self.num, i)
        den_c = _poly_coefficients(self.den, i)
        n, m = len(num_c) - 1, len(den_c) - 1
        top = _homogenise(num_c, p, q)
        bot = _homogenise(den_c, p, q)
        if n >= m:
            bot = bot * q ** (n - m)
        else:
            top = top * q ** (m - n)
        return RationalFunction(top, bot)

    def swap(self, a: str, b: str) -> "RationalFunction":
        return self.subs({a: var(b), b: var(a)})

    # -- display ------------------------------------------------------------
    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        from .render import render
        return render(self)


def _homogenise(coeffs, p, q):
    """sum_j c_j p^j q^(n-j) for coefficient list c of length n+1."""
    n = len(coeffs) - 1
    acc = _ZERO
    qpow = _ONE
    ppows = [_ONE]
    for _ in range(n):
        ppows.append(ppows[-1] * p)
    for j in range(n, -1, -1):
        c = coeffs[j]
        if not c.is_zero():
            acc = acc + c * ppows[j] * qpow
        qpow = qpow * q
    return acc


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, flint.fmpq, flint.fmpz)):
        return RationalFunction(_CTX.constant(_to_fmpq(x)), _ONE, _canonical=True)
    return NotImplemented


def var(name: str) -> RationalFunction:
    """The rational function consisting of the single variable ``name``."""
    return RationalFunction.variable(name)
