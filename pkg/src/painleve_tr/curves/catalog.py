"""The four built-in curves: Jimbo-Miwa, Harnad-Tracy-Widom, Hermite-Weber and Bessel."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from ..exactcore import INFINITY, RationalFunction, ScalarField, parse_rational, var
from .spectral import Mobius, SpectralCurve

_0 = RationalFunction()
_1 = RationalFunction.constant_of(1)


def rational_sqrt(q: Fraction):
    """Nonnegative rational square root, or None."""
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _theta(theta) -> Fraction:
    th = parse_rational(theta)
    if th == 0:
        raise ValueError("theta must be nonzero")
    return th


ZHUKOVSKY = Mobius(_0, _1, _1, _0)  # z -> 1/z
REFLECTION = Mobius(-_1, _0, _0, _1)  # z -> -z


def build_jm(theta, q0=None, s=None) -> SpectralCurve:
    """Jimbo-Miwa curve in the Zhukovsky variable.

    With neither ``q0`` nor ``s`` the free parameter is ``s`` and
    ``q0 = -theta/s^2``.  A numeric ``q0`` needs ``-theta/q0`` to be a rational
    square; the positive root is taken for ``s``.
    """
    th = _theta(theta)
    if q0 is not None and s is not None:
        raise ValueError("give q0 or s, not both")
    if q0 is None and s is None:
        F = ScalarField.symbolic_s(th)
        sv = var("s")
    else:
        if s is None:
            q0 = parse_rational(q0)
            if q0 == 0:
                raise ValueError("q0 must be nonzero")
            root = rational_sqrt(-th / q0)
            if root is None:
                raise ValueError(f"JM numeric mode needs -theta/q0 to be a rational square; -theta/q0 = {-th / q0}")
            s = root
        s = parse_rational(s)
        if s == 0:
            raise ValueError("s must be nonzero")
        F = ScalarField.numeric(th, -th / s ** 2)
        sv = RationalFunction.constant_of(s)
    q0r = F.q0
    z = var("z")
    x = -q0r + sv / 2 * (z + 1 / z)
    y = sv / 2 * (z - 1 / z) * (x - q0r)
    X = var("x")
    E = (X - q0r) ** 2 * ((X + q0r) ** 2 + F.theta / q0r)
    curve = SpectralCurve(
        name="jm",
        field=F,
        x=x,
        y=y,
        involution=ZHUKOVSKY,
        branch_points=[_1, -_1],
        punctures=[_0, INFINITY],
        report_substitution="s^2 = -theta/q0",
        E_infinity=E,
        even_zero=q0r,
    )
    return curve.validate()


def build_htw(theta, q0=None) -> SpectralCurve:
    th = _theta(theta)
    F = ScalarField.symbolic_q0(th) if q0 is None else ScalarField.numeric(th, q0)
    q = F.q0
    z = var("z")
    x = 2 * q ** 2 * (z * z - 1)
    y = z * (F.theta - 4 * q ** 3 * (z * z - 1)) / (4 * q ** 2 * (z * z - 1))
    X = var("x")
    E = (X - F.theta / (2 * q)) ** 2 * (X + 2 * q ** 2) / (2 * X * X)
    curve = SpectralCurve(
        name="htw",
        field=F,
        x=x,
        y=y,
        involution=REFLECTION,
        branch_points=[_0],
        punctures=[INFINITY],
        report_substitution="q0 = q0",
        E_infinity=E,
        even_zero=F.theta / (2 * q),
    )
    return curve.validate()


def build_weber(theta=None, w=None) -> SpectralCurve:
    """Hermite-Weber curve; symbolic ``w = sqrt(theta)`` unless theta or w is given."""
    if theta is not None and w is not None:
        raise ValueError("give theta or w, not both")
    if theta is None and w is None:
        F = ScalarField.symbolic_w()
        wv = var("w")
    else:
        if w is None:
            th = _theta(theta)
            w = rational_sqrt(th)
            if w is None:
                raise ValueError(f"numeric Weber curve needs theta to be a rational square; theta = {th}")
        w = parse_rational(w)
        if w == 0:
            raise ValueError("w must be nonzero")
        F = ScalarField.numeric(w * w)
        wv = RationalFunction.constant_of(w)
    z = var("z")
    x = wv * (z + 1 / z)
    y = wv / 2 * (z - 1 / z)
    X = var("x")
    curve = SpectralCurve(
        name="weber",
        field=F,
        x=x,
        y=y,
        involution=ZHUKOVSKY,
        branch_points=[_1, -_1],
        punctures=[_0, INFINITY],
        report_substitution="w^2 = theta",
        E_infinity=X * X / 4 - F.theta,
    )
    return curve.validate()


def build_bessel(theta=None) -> SpectralCurve:
    """Bessel curve; symbolic theta when none is given."""
    F = ScalarField.symbolic_theta() if theta is None else ScalarField.numeric(_theta(theta))
    th = F.theta
    z = var("z")
    x = th * th * (z * z - 1)
    y = z / (2 * th * (z * z - 1))
    X = var("x")
    curve = SpectralCurve(
        name="bessel",
        field=F,
        x=x,
        y=y,
        involution=REFLECTION,
        branch_points=[_0],
        punctures=[INFINITY],
        report_substitution="theta = theta",
        E_infinity=(X + th * th) / (4 * X * X),
    )
    return curve.validate()


BUILDERS = {"jm": build_jm, "htw": build_htw, "weber": build_weber, "bessel": build_bessel}


def build_curve(name: str, theta=None, q0=None, s=None, w=None) -> SpectralCurve:
    """Dispatch by curve id; unused arguments must be None."""
    if name == "jm":
        return build_jm(theta, q0=q0, s=s)
    if s is not None:
        raise ValueError(f"--s applies only to the jm curve, not {name}")
    if name == "htw":
        return build_htw(theta, q0=q0)
    if q0 is not None:
        raise ValueError(f"q0 does not apply to the {name} curve")
    if name == "weber":
        return build_weber(theta, w=w)
    if name == "bessel":
        return build_bessel(theta)
    raise ValueError(f"unknown curve {name!r}; choose one of {sorted(BUILDERS)}")
