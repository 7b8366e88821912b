"""The scalar field a computation lives in.

Every quantity is a rational function of at most one free parameter:
``q0`` itself, ``s`` with ``q0 = -theta/s^2`` (so ``s`` plays the role of
``sqrt(-theta/q0)``), ``w`` with ``theta = w^2``, or ``theta`` itself.  A
numeric field has no free parameter at all.  All t-dependence flows through
q0, and ``t = -2 q0^2 + theta/q0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .derivation import Derivation
from .ratfunc import RationalFunction, _coerce, _poly_coefficients, _INDEX, parse_rational, var

KINDS = ("q0", "s", "w", "theta", "numeric")


def _rat(value) -> Fraction:
    return value if isinstance(value, Fraction) else parse_rational(value)


def deflate_even(f: RationalFunction, name: str) -> RationalFunction:
    """Rewrite an even function of ``name`` as a function of ``name**2``, returned in ``name``.

    Raises ``ValueError`` when ``f`` is not even.
    """
    i = _INDEX[name]
    parts = []
    for poly in (f.num, f.den):
        coeffs = _poly_coefficients(poly, i)
        if any(not c.is_zero() for c in coeffs[1::2]):
            raise ValueError(f"not an even function of {name}: {f}")
        parts.append(RationalFunction.from_coefficients([RationalFunction(c) for c in coeffs[::2]], name))
    return parts[0] / parts[1]


class ScalarField:
    """Field context: which parameter is free, and how q0, theta, t depend on it."""

    def __init__(self, kind: str, theta=None, q0=None):
        if kind not in KINDS:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.parameter: Optional[str] = None if kind == "numeric" else kind
        if kind == "w":
            w = var("w")
            self.theta = w * w
            self.q0 = None
        elif kind == "theta":
            self.theta = var("theta")
            self.q0 = None
        else:
            if theta is None:
                raise ValueError("theta must be given")
            th = _rat(theta)
            if th == 0:
                raise ValueError("theta must be nonzero")
            self.theta = RationalFunction.constant_of(th)
            if kind == "q0":
                self.q0 = var("q0")
            elif kind == "s":
                s = var("s")
                self.q0 = -self.theta / (s * s)
            else:
                self.q0 = None if q0 is None else RationalFunction.constant_of(_rat(q0))
        if self.q0 is not None and self.q0.is_constant():
            if self.q0.is_zero():
                raise ValueError("q0 must be nonzero")
            if (self.q0 ** 3 * 4 + self.theta).is_zero():
                raise ValueError("4*q0^3 + theta = 0 is a turning point")

    # -- constructors ----------------------------------------------------
    @classmethod
    def symbolic_q0(cls, theta) -> "ScalarField":
        return cls("q0", theta)

    @classmethod
    def symbolic_s(cls, theta) -> "ScalarField":
        return cls("s", theta)

    @classmethod
    def symbolic_w(cls) -> "ScalarField":
        return cls("w")

    @classmethod
    def symbolic_theta(cls) -> "ScalarField":
        return cls("theta")

    @classmethod
    def numeric(cls, theta, q0=None) -> "ScalarField":
        return cls("numeric", theta, q0)

    # -- derived quantities ----------------------------------------------
    @property
    def is_symbolic(self) -> bool:
        return self.parameter is not None

    @property
    def t(self) -> RationalFunction:
        if self.q0 is None:
            raise ValueError(f"field {self.kind!r} carries no q0, so t is undefined")
        return -2 * self.q0 * self.q0 + self.theta / self.q0

    @property
    def turning(self) -> RationalFunction:
        """4 q0^3 + theta."""
        return 4 * self.q0 ** 3 + self.theta

    @property
    def dt(self) -> Derivation:
        """d/dt, defined through D_t q0 = -q0^2/(4 q0^3 + theta)."""
        if self.kind == "q0":
            return Derivation("d/dt", "q0", -self.q0 ** 2 / self.turning)
        if self.kind == "s":
            s = var("s")
            dq0_ds = 2 * self.theta / s ** 3
            return Derivation("d/dt", "s", (-self.q0 ** 2 / self.turning) / dq0_ds)
        raise ValueError(f"d/dt needs a free q0 (field kind q0 or s), not {self.kind!r}")

    def fingerprint(self) -> tuple:
        return (self.kind, str(self.theta), None if self.q0 is None else str(self.q0))

    # -- conversions -------------------------------------------------------
    def element(self, value) -> RationalFunction:
        f = _coerce(value)
        if f is NotImplemented:
            raise TypeError(f"not a field element: {value!r}")
        return f

    def from_q0(self, expr) -> RationalFunction:
        """Evaluate an expression written in ``q0`` and ``theta`` inside this field."""
        expr = _coerce(expr)
        mapping = {"theta": self.theta}
        if "q0" in expr.variables():
            if self.q0 is None:
                raise ValueError(f"field {self.kind!r} carries no q0")
            mapping["q0"] = self.q0
        return expr.subs(mapping)

    def to_q0(self, f) -> RationalFunction:
        """Report form: JM values in q0, Weber values in theta, others unchanged."""
        f = _coerce(f)
        if self.kind == "s":
            g = deflate_even(f, "s")  # now a function of s^2, written in s
            return g.subs({"s": -self.theta / var("q0")})
        if self.kind == "w":
            g = deflate_even(f, "w")
            return g.subs({"w": var("theta")})
        return f

    def evaluate(self, f, value) -> RationalFunction:
        """Substitute a number for the free parameter."""
        if self.parameter is None:
            return _coerce(f)
        return _coerce(f).subs({self.parameter: _rat(value)})

    def numeric_point(self, value) -> "ScalarField":
        """The numeric field obtained by fixing the free parameter."""
        value = _rat(value)
        if self.kind == "q0":
            return ScalarField.numeric(self.theta.constant(), value)
        if self.kind == "s":
            return ScalarField.numeric(self.theta.constant(), -self.theta.constant() / value ** 2)
        if self.kind == "w":
            return ScalarField.numeric(value * value)
        if self.kind == "theta":
            return ScalarField.numeric(value)
        raise ValueError("field is already numeric")

    def __repr__(self):
        q0 = "" if self.q0 is None else f", q0={self.q0}"
        return f"ScalarField({self.kind}, theta={self.theta}{q0})"
