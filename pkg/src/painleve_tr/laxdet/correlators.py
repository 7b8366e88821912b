"""Determinantal correlators W_n built from the projector, and their comparison with omega_n^(g)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..curves import SpectralCurve
from ..exactcore import HbarSeries, LaurentSeries, Matrix2, RationalFunction, laurent_expand, var
from ..toprec import IdentityReport, compare, omega
from .lax import LaxMatrixSeries, build_lax
from .projector import ProjectorSeries, flavor_of, projector_m0, projector_recursion

NAMES = ("z1", "z2", "z3", "z4")


@dataclass
class CorrelatorSeries:
    """W_n(x(z_1), ..., x(z_n)) as an hbar series of rational functions of z_1..z_n."""

    n: int
    W: HbarSeries
    curve: SpectralCurve

    @property
    def names(self) -> tuple:
        return NAMES[: self.n]

    def differential(self, k: int) -> RationalFunction:
        """Coefficient of hbar^k times dx(z_1) ... dx(z_n)."""
        f = self.W[k]
        for name in self.names:
            f = f * self.curve.dx.swap("z", name)
        return f

    def wrong_parity(self) -> list[int]:
        return [k for k, c in self.W.items() if (k - self.n) % 2 and not c.is_zero()]

    def below_leading(self) -> list[int]:
        return [k for k, c in self.W.items() if k < self.n - 2 and not c.is_zero()]


def _x(curve: SpectralCurve, name: str) -> RationalFunction:
    return curve.x.swap("z", name)


def w1_leading(curve: SpectralCurve) -> RationalFunction:
    """W_1^(-1) = -Tr(D^(0) M^(0)) in z."""
    lax = build_lax(flavor_of(curve), K=0, field=curve.field)
    return -(lax.at(curve.x, "D")[0] * projector_m0(curve)).trace()


def w1(lax: LaxMatrixSeries, proj: ProjectorSeries) -> CorrelatorSeries:
    """W_1 = -Tr(D M)/hbar, known through hbar^(K-1)."""
    curve = proj.curve
    K = min(proj.K, lax.K)
    D = lax.at(curve.x, "D")
    coeffs = []
    for k in range(K + 1):
        acc = RationalFunction()
        for i in range(k + 1):
            acc = acc + (D[i] * proj[k - i]).trace()
        coeffs.append((-acc).swap("z", "z1"))
    return CorrelatorSeries(1, HbarSeries(-1, coeffs, K - 1), curve)


def w2(proj: ProjectorSeries, order: Optional[int] = None) -> CorrelatorSeries:
    """W_2 = (Tr M(x1) M(x2) - 1)/(x1 - x2)^2."""
    curve = proj.curve
    K = proj.K if order is None else min(order, proj.K)
    M1, M2 = proj.in_variable("z1"), proj.in_variable("z2")
    sep = (_x(curve, "z1") - _x(curve, "z2")) ** 2
    coeffs = []
    for k in range(K + 1):
        acc = RationalFunction.constant_of(-1) if k == 0 else RationalFunction()
        for i in range(k + 1):
            acc = acc + (M1[i] * M2[k - i]).trace()
        coeffs.append(acc / sep)
    return CorrelatorSeries(2, HbarSeries(0, coeffs, K), curve)


def _triple(A: Matrix2, B: Matrix2, C: Matrix2) -> RationalFunction:
    return (A * B * C).trace()


def w3(proj: ProjectorSeries, order: Optional[int] = None) -> CorrelatorSeries:
    """W_3 from the two 3-cycles."""
    curve = proj.curve
    K = proj.K if order is None else min(order, proj.K)
    M = [proj.in_variable(n) for n in NAMES[:3]]
    x1, x2, x3 = (_x(curve, n) for n in NAMES[:3])
    d123 = ((x1 - x2) * (x2 - x3) * (x3 - x1)).inverse()
    d132 = ((x1 - x3) * (x3 - x2) * (x2 - x1)).inverse()
    coeffs = []
    for k in range(K + 1):
        a = RationalFunction()
        b = RationalFunction()
        for i in range(k + 1):
            for j in range(k - i + 1):
                l = k - i - j
                a = a + _triple(M[0][i], M[1][j], M[2][l])
                b = b + _triple(M[0][i], M[2][l], M[1][j])
        coeffs.append(a * d123 + b * d132)
    return CorrelatorSeries(3, HbarSeries(0, coeffs, K), curve)


def correlators(curve: SpectralCurve, n: int, K: int = 6, lax: Optional[LaxMatrixSeries] = None,
                proj: Optional[ProjectorSeries] = None) -> CorrelatorSeries:
    if n not in (1, 2, 3):
        raise ValueError("correlators are built for n = 1, 2, 3")
    if proj is None:
        proj = projector_recursion(curve, K, lax=lax)
    if n == 1:
        if lax is None:
            lax = build_lax(flavor_of(curve), K=K, field=curve.field)
        return w1(lax, proj)
    if n == 2:
        return w2(proj, K)
    return w3(proj, K)


# -- comparison with the topological recursion ------------------------------

def pullback(curve: SpectralCurve, f: RationalFunction, names) -> RationalFunction:
    """iota^* of f dz_1 ... dz_n, returned as the new coefficient of dz_1 ... dz_n."""
    jac = curve.involution.as_function().derivative("z")
    for name in names:
        f = curve.involution.apply(f, name) * jac.swap("z", name)
    return f


def sheet_sign(curve: SpectralCurve, lead: Optional[RationalFunction] = None) -> int:
    """+1 if W_1^(-1) = y, -1 if W_1^(-1) = -y, the value of y on the other sheet.

    ``lead`` is W_1^(-1) in z; it is computed from D^(0) and M^(0) when omitted.
    """
    lead = w1_leading(curve) if lead is None else lead
    if lead == curve.y:
        return 1
    if lead == -curve.y:
        return -1
    raise ArithmeticError(f"W_1^(-1) = {lead} is neither y nor -y = {curve.y}")


def omega_body(curve: SpectralCurve, g: int, n: int) -> RationalFunction:
    w = omega(curve, g, n)
    if isinstance(w, RationalFunction):
        return w
    return w.body(list(NAMES[:n]))


def tt_compare(w: CorrelatorSeries, g: int, sign: int) -> IdentityReport:
    """W_n^(g) dx... against omega_n^(g), after the sheet map fixed by ``sign``."""
    n = w.n
    k = 2 * g - 2 + n
    curve = w.curve
    lhs = w.differential(k)
    rhs = omega_body(curve, g, n)
    if (g, n) == (0, 2):
        dx1, dx2 = curve.dx.swap("z", "z1"), curve.dx.swap("z", "z2")
        rhs = rhs - dx1 * dx2 / (_x(curve, "z1") - _x(curve, "z2")) ** 2
    if sign == -1:
        rhs = pullback(curve, rhs, NAMES[:n])
    return compare(f"tt-{curve.name}-g{g}-n{n}", lhs, rhs)


# -- diagonal limits ----------------------------------------------------------

def taylor(f: RationalFunction, name: str, order: int) -> LaurentSeries:
    """f(name + u) through u^order, coefficients via derivatives."""
    coeffs = []
    fact = 1
    d = f
    for j in range(order + 1):
        coeffs.append(d / fact)
        d = d.derivative(name)
        fact *= j + 1
    return LaurentSeries(0, coeffs, order + 1, var(name))


def w2_diagonal(proj: ProjectorSeries, order: Optional[int] = None) -> HbarSeries:
    """W_2(x, x) in z, via the expansion of the second point about the first.

    Raises if the numerator does not vanish to second order on the diagonal.
    """
    curve = proj.curve
    K = proj.K if order is None else min(order, proj.K)
    shifted = [tuple(taylor(e, "z", 2) for e in m.entries()) for m in proj.M[: K + 1]]
    sep = taylor(curve.x, "z", 3)
    sep = sep - LaurentSeries(0, [curve.x], 4, var("z"))
    sep2 = (sep * sep).coefficient(2)  # (x(z+u) - x(z))^2 = x'^2 u^2 + ...
    out = []
    for k in range(K + 1):
        num = LaurentSeries(0, [RationalFunction.constant_of(-1 if k == 0 else 0)], 3, var("z"))
        for i in range(k + 1):
            A, B = proj.M[i], shifted[k - i]
            num = num + _series_trace(A, B)
        for e in (0, 1):
            if not num.coefficient(e).is_zero():
                raise ArithmeticError(f"Tr M(z)M(z+u) - 1 has a u^{e} term at hbar^{k}: {num.coefficient(e)}")
        out.append(num.coefficient(2) / sep2)
    return HbarSeries(0, out, K)


def _series_trace(A: Matrix2, B: tuple) -> LaurentSeries:
    """Tr(A B) where B holds the entries (a, b, c, d) as series."""
    ba, bb, bc, bd = B
    return ba.scale(A.a) + bc.scale(A.b) + bb.scale(A.c) + bd.scale(A.d)


def diagonal(f: RationalFunction, keep: str, drop: str) -> RationalFunction:
    """Value of f on drop = keep, by a Laurent expansion in drop - keep."""
    s = laurent_expand(f, drop, var(keep), 0)
    if s.valuation < 0:
        raise ArithmeticError(f"{f} is singular on the diagonal {drop} = {keep}")
    return s.coefficient(0)

