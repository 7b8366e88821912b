"""Free energies F^(g), their limits, t-derivatives and the Bernoulli identities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..curves import SpectralCurve, build_htw, build_jm
from ..exactcore import RationalFunction, bernoulli, derive, var
from ..exactcore.field import ScalarField, deflate_even
from ..exactcore.ratfunc import _poly_coefficients, _INDEX
from .recursion import DEFAULT_MAX_WEIGHT, KERNEL_FACTOR, _as_rf, engine_for


def free_energy(curve: SpectralCurve, g: int, max_weight: Optional[int] = None, kernel_factor=KERNEL_FACTOR) -> RationalFunction:
    """F^(g) = 1/(2g-2) sum_r Res_{z=r} Phi(z) omega_1^(g)(z), in the curve's field.

    dPhi = y dx.  The sign makes -hbar^2 d/dt log tau = sigma hold with
    tau ~ exp(sum hbar^(2g-2) F^(g)) while omega_n^(g) keeps the orientation
    that matches the determinantal correlators.  The workload cap defaults to
    whatever omega_1^(g) itself needs.
    """
    if g < 2:
        raise ValueError("F^(g) is computed here for g >= 2 only")
    cap = max(DEFAULT_MAX_WEIGHT, 2 * g - 1) if max_weight is None else max_weight
    eng = engine_for(curve, kernel_factor)
    w = eng.omega(g, 1, cap)
    acc = RationalFunction()
    kmax = max((first[1] for first in w.table), default=2)
    for a, loc in enumerate(eng.locals):
        phi = loc.primitive_ydx(kmax)
        for (b, k), row in w.table.items():
            if b != a:
                continue
            c = row.get((), 0)
            if c:
                # Res_{u=0} Phi(u) u^{-k} du
                acc = acc + _as_rf(c) * phi.coefficient(k - 1)
    return acc / (2 * g - 2)


def report_form(curve: SpectralCurve, f: RationalFunction) -> RationalFunction:
    """Express a field element through q0 (JM) or theta (Weber)."""
    return curve.field.to_q0(f)


def bernoulli_value(g: int, theta) -> RationalFunction:
    """B_2g / (2g (2g-2) theta^(2g-2)); theta may be a number or a rational function."""
    th = theta if isinstance(theta, RationalFunction) else RationalFunction.constant_of(Fraction(theta))
    return RationalFunction.constant_of(bernoulli(2 * g)) / (2 * g * (2 * g - 2)) / th ** (2 * g - 2)


@dataclass
class IdentityReport:
    check: str
    status: str
    lhs: str
    rhs: str
    first_diff: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def compare(check: str, lhs: RationalFunction, rhs: RationalFunction) -> IdentityReport:
    diff = lhs - rhs
    return IdentityReport(
        check=check,
        status="pass" if diff.is_zero() else "fail",
        lhs=str(lhs),
        rhs=str(rhs),
        first_diff=None if diff.is_zero() else str(diff),
    )


def bernoulli_check(curve: SpectralCurve, g: int) -> IdentityReport:
    """Bessel: F = B_2g/(2g(2g-2)theta^(2g-2)); Weber: the negative of that."""
    if curve.name not in ("bessel", "weber"):
        raise ValueError("the Bernoulli identity applies to the bessel and weber curves")
    F = report_form(curve, free_energy(curve, g))
    theta = var("theta") if curve.field.kind in ("w", "theta") else curve.field.theta
    expected = bernoulli_value(g, theta)
    if curve.name == "weber":
        expected = -expected
    return compare(f"bernoulli-{curve.name}-g{g}", F, expected)


@dataclass
class Limit:
    """Behaviour of a rational function of q0 at q0 -> 0 or q0 -> infinity.

    ``valuation`` is the order in the local parameter (q0 or 1/q0); a finite
    limit has valuation >= 0 and ``value`` its limit, otherwise ``value`` is
    the leading coefficient and the limit is a signed infinity.
    """

    value: RationalFunction
    valuation: int

    @property
    def finite(self) -> bool:
        return self.valuation >= 0

    @property
    def limit(self) -> RationalFunction:
        if self.valuation > 0:
            return RationalFunction()
        if self.valuation == 0:
            return self.value
        raise ArithmeticError(f"no finite limit: leading term {self.value} * t^{self.valuation}")

    def __str__(self):
        if self.finite:
            return str(self.limit)
        sign = "+" if self.value.constant() > 0 else "-"
        return f"{sign}infinity (valuation {self.valuation})"


def _lowest(poly, index) -> tuple[int, RationalFunction]:
    coeffs = _poly_coefficients(poly, index)
    for e, c in enumerate(coeffs):
        if not c.is_zero():
            return e, RationalFunction(c)
    raise ZeroDivisionError


def _highest(poly, index) -> tuple[int, RationalFunction]:
    coeffs = _poly_coefficients(poly, index)
    for e in range(len(coeffs) - 1, -1, -1):
        if not coeffs[e].is_zero():
            return e, RationalFunction(coeffs[e])
    raise ZeroDivisionError


def limit_of(f: RationalFunction, name: str, at: str) -> Limit:
    """Valuation and leading coefficient of ``f`` at name -> 0 or name -> infinity."""
    if f.is_zero():
        return Limit(RationalFunction(), 10 ** 9)
    i = _INDEX[name]
    if at == "0":
        en, cn = _lowest(f.num, i)
        ed, cd = _lowest(f.den, i)
        return Limit(cn / cd, en - ed)
    if at in ("inf", "infinity"):
        en, cn = _highest(f.num, i)
        ed, cd = _highest(f.den, i)
        return Limit(cn / cd, ed - en)
    raise ValueError("limit point must be '0' or 'inf'")


def fg_limit(F_q0: RationalFunction, at: str) -> Limit:
    """Limit of F^(g) written as a rational function of q0 (numeric theta)."""
    return limit_of(F_q0, "q0", at)


def fg_in_q0(name: str, theta, g: int) -> RationalFunction:
    """F^(g) of the jm or htw curve in symbolic-q0 form at a numeric theta."""
    if name == "jm":
        c = build_jm(theta)
    elif name == "htw":
        c = build_htw(theta)
    else:
        raise ValueError("q0-dependent free energies exist for jm and htw only")
    return report_form(c, free_energy(c, g))


def fg_difference(theta, g: int) -> IdentityReport:
    diff = fg_in_q0("jm", theta, g) - fg_in_q0("htw", theta, g)
    return compare(f"difference-g{g}-theta{theta}", diff, bernoulli_value(g, theta))


def dfg_dt(curve: SpectralCurve, g: int) -> RationalFunction:
    """D_t F^(g) in the curve's field."""
    return derive(curve.field.dt, free_energy(curve, g))


def q0_field_derivative(f_q0: RationalFunction, theta) -> RationalFunction:
    """D_t of an expression in q0, at numeric theta."""
    return derive(ScalarField.symbolic_q0(theta).dt, f_q0)


def is_even_in(f: RationalFunction, name: str) -> bool:
    try:
        deflate_even(f, name)
    except ValueError:
        return False
    return True
