"""Truncated series in hbar, and 2x2 matrices over rational functions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .ratfunc import RationalFunction, _coerce

_ZERO = RationalFunction()
_ONE = RationalFunction.constant_of(1)


def _rf(v) -> RationalFunction:
    out = _coerce(v)
    if out is NotImplemented:
        raise TypeError(f"not a rational function: {v!r}")
    return out


@dataclass(frozen=True)
class Matrix2:
    """[[a, b], [c, d]] with rational-function entries."""

    a: RationalFunction
    b: RationalFunction
    c: RationalFunction
    d: RationalFunction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, _rf(getattr(self, name)))

    @classmethod
    def of(cls, rows) -> "Matrix2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def zero(cls) -> "Matrix2":
        return cls(_ZERO, _ZERO, _ZERO, _ZERO)

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls(_ONE, _ZERO, _ZERO, _ONE)

    @classmethod
    def diag(cls, a, d) -> "Matrix2":
        return cls(a, _ZERO, _ZERO, d)

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def __add__(self, o):
        if not isinstance(o, Matrix2):
            return NotImplemented
        return Matrix2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o):
        if not isinstance(o, Matrix2):
            return NotImplemented
        return Matrix2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return Matrix2(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o):
        if isinstance(o, Matrix2):
            return Matrix2(
                self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d,
            )
        o = _coerce(o)
        if o is NotImplemented:
            return NotImplemented
        return Matrix2(self.a * o, self.b * o, self.c * o, self.d * o)

    def __rmul__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return NotImplemented
        return Matrix2(o * self.a, o * self.b, o * self.c, o * self.d)

    def trace(self) -> RationalFunction:
        return self.a + self.d

    def det(self) -> RationalFunction:
        return self.a * self.d - self.b * self.c

    def transpose(self) -> "Matrix2":
        return Matrix2(self.a, self.c, self.b, self.d)

    def adjugate(self) -> "Matrix2":
        return Matrix2(self.d, -self.b, -self.c, self.a)

    def inverse(self) -> "Matrix2":
        det = self.det()
        if det.is_zero():
            raise ZeroDivisionError("singular 2x2 matrix")
        return self.adjugate() * det.inverse()

    def commutator(self, o: "Matrix2") -> "Matrix2":
        return self * o - o * self

    def map(self, f: Callable) -> "Matrix2":
        return Matrix2(*(f(e) for e in self.entries()))

    def derivative(self, name: str) -> "Matrix2":
        return self.map(lambda e: e.derivative(name))

    def subs(self, mapping) -> "Matrix2":
        return self.map(lambda e: e.subs(mapping))

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


class HbarSeries:
    """``sum_{k=min_power}^{order} coeffs[k - min_power] * hbar**k + O(hbar**(order+1))``.

    Coefficients are rational functions or :class:`Matrix2`, all of one kind.
    """

    __slots__ = ("min_power", "coeffs", "order", "kind")

    def __init__(self, min_power: int, coeffs, order: int, kind=None):
        coeffs = list(coeffs)[: max(0, order - min_power + 1)]
        if kind is None:
            kind = Matrix2 if any(isinstance(c, Matrix2) for c in coeffs) else RationalFunction
        if kind is RationalFunction:
            coeffs = [_rf(c) for c in coeffs]
        elif not all(isinstance(c, Matrix2) for c in coeffs):
            raise TypeError("mixed coefficient kinds in an hbar series")
        zero = Matrix2.zero() if kind is Matrix2 else _ZERO
        coeffs += [zero] * (order - min_power + 1 - len(coeffs))
        self.min_power = min_power
        self.coeffs = coeffs
        self.order = order
        self.kind = kind

    @classmethod
    def constant(cls, value, order: int) -> "HbarSeries":
        return cls(0, [value], order)

    def zero_coefficient(self):
        return Matrix2.zero() if self.kind is Matrix2 else _ZERO

    def __getitem__(self, k: int):
        if k > self.order:
            raise ValueError(f"hbar^{k} is beyond the truncation order {self.order}")
        if k < self.min_power:
            return self.zero_coefficient()
        return self.coeffs[k - self.min_power]

    def powers(self):
        return range(self.min_power, self.order + 1)

    def items(self):
        return zip(self.powers(), self.coeffs)

    def leading_power(self):
        for k, c in self.items():
            if not c.is_zero():
                return k
        return None

    def truncate(self, order: int) -> "HbarSeries":
        return HbarSeries(self.min_power, self.coeffs, min(order, self.order), self.kind)

    def _aligned(self, other: "HbarSeries"):
        order = min(self.order, other.order)
        lo = min(self.min_power, other.min_power)
        return lo, order

    def __add__(self, other):
        if not isinstance(other, HbarSeries):
            other = HbarSeries(0, [other], self.order)
        lo, order = self._aligned(other)
        return HbarSeries(lo, [self[k] + other[k] for k in range(lo, order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return HbarSeries(self.min_power, [-c for c in self.coeffs], self.order, self.kind)

    def __sub__(self, other):
        if not isinstance(other, HbarSeries):
            other = HbarSeries(0, [other], self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, HbarSeries):
            return HbarSeries(self.min_power, [c * other for c in self.coeffs], self.order)
        lo = self.min_power + other.min_power
        order = min(self.order + other.min_power, other.order + self.min_power)
        out = []
        for k in range(lo, order + 1):
            acc = None
            for i in range(self.min_power, k - other.min_power + 1):
                a = self.coeffs[i - self.min_power]
                b = other.coeffs[k - i - other.min_power]
                if a.is_zero() or b.is_zero():
                    continue
                term = a * b
                acc = term if acc is None else acc + term
            if acc is None:
                acc = Matrix2.zero() if Matrix2 in (self.kind, other.kind) else _ZERO
            out.append(acc)
        return HbarSeries(lo, out, order)

    def __rmul__(self, other):
        return HbarSeries(self.min_power, [other * c for c in self.coeffs], self.order)

    def __truediv__(self, other):
        if isinstance(other, HbarSeries):
            return self * other.inverse()
        inv = _rf(other).inverse()
        return HbarSeries(self.min_power, [c * inv for c in self.coeffs], self.order, self.kind)

    def shift(self, k: int) -> "HbarSeries":
        """Multiply by hbar**k."""
        return HbarSeries(self.min_power + k, self.coeffs, self.order + k, self.kind)

    def inverse(self) -> "HbarSeries":
        lead = self.leading_power()
        if lead is None:
            raise ZeroDivisionError("inverse of a vanishing hbar series")
        a = [self[k] for k in range(lead, self.order + 1)]
        inv0 = a[0].inverse()
        n = len(a)
        b = [inv0]
        for k in range(1, n):
            acc = None
            for i in range(1, k + 1):
                if a[i].is_zero():
                    continue
                term = a[i] * b[k - i]
                acc = term if acc is None else acc + term
            b.append(self.zero_coefficient() if acc is None else -(inv0 * acc))
        # 1/(hbar^lead (a0 + ...)) known through hbar^(order - 2 lead)
        return HbarSeries(-lead, b, self.order - 2 * lead)

    def map(self, f: Callable) -> "HbarSeries":
        return HbarSeries(self.min_power, [f(c) for c in self.coeffs], self.order)

    def dagger(self) -> "HbarSeries":
        """hbar -> -hbar."""
        return HbarSeries(
            self.min_power,
            [c if k % 2 == 0 else -c for k, c in self.items()],
            self.order,
            self.kind,
        )

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def first_nonzero(self):
        """(power, coefficient) of the first nonzero term, or None."""
        for k, c in self.items():
            if not c.is_zero():
                return k, c
        return None

    def __repr__(self):
        terms = ", ".join(f"{k}: {c}" for k, c in self.items() if not c.is_zero())
        return f"HbarSeries({{{terms}}} + O(hbar^{self.order + 1}))"


def matrix_series(entries: list[list[HbarSeries]]) -> HbarSeries:
    """Assemble four scalar hbar series into one series of 2x2 matrices."""
    (a, b), (c, d) = entries
    lo = min(e.min_power for e in (a, b, c, d))
    order = min(e.order for e in (a, b, c, d))
    return HbarSeries(lo, [Matrix2(a[k], b[k], c[k], d[k]) for k in range(lo, order + 1)], order, Matrix2)


def matrix_entry(series: HbarSeries, i: int, j: int) -> HbarSeries:
    name = "abcd"[2 * i + j]
    return HbarSeries(series.min_power, [getattr(c, name) for c in series.coeffs], series.order, RationalFunction)


def series_det(series: HbarSeries) -> HbarSeries:
    """det of a matrix-valued hbar series, as a scalar series."""
    a, b, c, d = (matrix_entry(series, i, j) for i in (0, 1) for j in (0, 1))
    return a * d - b * c


def series_trace(series: HbarSeries) -> HbarSeries:
    return HbarSeries(series.min_power, [m.trace() for m in series.coeffs], series.order, RationalFunction)
