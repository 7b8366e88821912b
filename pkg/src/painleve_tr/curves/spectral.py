"""Genus-0 spectral curves with a global Moebius involution."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..exactcore import INFINITY, RationalFunction, ScalarField, var
from ..exactcore.ratfunc import PARAMETERS


class CurveValidationError(ValueError):
    """Raised with one line per violated structural identity."""

    def __init__(self, failures: list[str]):
        self.failures = failures
        super().__init__("; ".join(failures))


def rational_roots(f: RationalFunction, name: str = "z") -> list[RationalFunction]:
    """Roots of the numerator of ``f`` in ``name``, each of which must be field-rational."""
    roots = []
    for factor, _mult in f.factor_numerator():
        deg = factor.degree(name)[0]
        if deg == 0:
            continue
        if deg > 1:
            raise ValueError(f"non-rational roots in {name}: factor {factor}")
        c = factor.coefficients(name)
        root = -c[0] / c[1]
        if root not in roots:
            roots.append(root)
    return roots


def _sort_key(point):
    if point is INFINITY:
        return (1, "")
    return (0, str(point))


@dataclass(frozen=True)
class Mobius:
    """iota(z) = (a z + b)/(c z + d)."""

    a: RationalFunction
    b: RationalFunction
    c: RationalFunction
    d: RationalFunction

    def as_function(self, name: str = "z") -> RationalFunction:
        z = var(name)
        return (self.a * z + self.b) / (self.c * z + self.d)

    def apply(self, f: RationalFunction, name: str = "z") -> RationalFunction:
        """f(iota(z))."""
        return f.subs({name: self.as_function(name)})

    def at(self, point):
        if point is INFINITY:
            return INFINITY if self.c.is_zero() else self.a / self.c
        den = self.c * point + self.d
        if den.is_zero():
            return INFINITY
        return (self.a * point + self.b) / den

    def is_involution(self) -> bool:
        # M^2 proportional to the identity, M itself not
        a, b, c, d = self.a, self.b, self.c, self.d
        sq = (a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d)
        if not (sq[1].is_zero() and sq[2].is_zero() and sq[0] == sq[3]):
            return False
        return not (b.is_zero() and c.is_zero() and a == d)


@dataclass
class SpectralCurve:
    name: str
    field: ScalarField
    x: RationalFunction
    y: RationalFunction
    involution: Mobius
    branch_points: list = field(default_factory=list)
    punctures: list = field(default_factory=list)
    report_substitution: str = ""
    E_infinity: Optional[RationalFunction] = None  # y^2 as a function of x
    even_zero: Optional[RationalFunction] = None  # double zero of E_infinity, if any

    @property
    def parameter_name(self):
        return self.field.parameter

    @property
    def dx(self) -> RationalFunction:
        return self.x.derivative("z")

    def iota(self, f: RationalFunction, name: str = "z") -> RationalFunction:
        return self.involution.apply(f, name)

    def fingerprint(self) -> tuple:
        return (self.name, self.field.fingerprint(), str(self.x), str(self.y), str(self.involution.as_function()))

    def computed_branch_points(self) -> list:
        return rational_roots(self.dx.numerator())

    def computed_punctures(self) -> list:
        pts = list(rational_roots(self.x.denominator()))
        dn, dd = self.x.degree("z")
        if dn > dd:
            pts.append(INFINITY)
        return pts

    def check(self) -> list[str]:
        """All violated invariants, each stated as the identity that failed."""
        failures = []
        stray = set(self.x.variables() | self.y.variables()) & set(PARAMETERS)
        allowed = {self.field.parameter} if self.field.parameter else set()
        if stray - allowed:
            failures.append(f"curve data depends on {sorted(stray - allowed)} outside the field parameter")
        if not self.involution.is_involution():
            failures.append(f"iota(iota(z)) = z fails for iota(z) = {self.involution.as_function()}")
        dxi = self.iota(self.x) - self.x
        if not dxi.is_zero():
            failures.append(f"x(iota(z)) - x(z) = {dxi}")
        dyi = self.iota(self.y) + self.y
        if not dyi.is_zero():
            failures.append(f"y(iota(z)) + y(z) = {dyi}")
        try:
            computed = self.computed_branch_points()
        except ValueError as exc:
            failures.append(f"dx/dz = {self.dx}: {exc}")
            computed = None
        if computed is not None:
            if sorted(map(str, computed)) != sorted(map(str, self.branch_points)):
                failures.append(
                    f"zeros of dx/dz = {self.dx} are {sorted(map(str, computed))}, "
                    f"declared {sorted(map(str, self.branch_points))}"
                )
        for r in self.branch_points:
            image = self.involution.at(r)
            if image is INFINITY or image != r:
                failures.append(f"iota({r}) = {image} != {r}")
        if self.E_infinity is not None:
            diff = self.y * self.y - self.E_infinity.subs({"x": self.x})
            if not diff.is_zero():
                failures.append(f"y^2 - E(x(z)) = {diff}")
        return failures

    def validate(self) -> "SpectralCurve":
        failures = self.check()
        if failures:
            raise CurveValidationError(failures)
        return self
