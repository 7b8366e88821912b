"""The rank-one projector M = Psi E11 Psi^-1 order by order in hbar, on the curve.

Entries are rational in the uniformising variable z.  Order k solves

    [A0, M^(k)] = B_k,      M0 M^(k) + M^(k) M0 - M^(k) = C_k

where A0 is R^(0) (t driver) or D^(0) (x driver).  Both commute with M0,
so A0 = mu (2 M0 - 1) with mu = Tr(A0 M0), and the system splits along the
blocks of M0 and 1 - M0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..curves import SpectralCurve
from ..exactcore import HbarSeries, Matrix2, RationalFunction, derive, var
from .lax import LaxMatrixSeries, build_lax

DRIVERS = ("x_system", "t_system")


class ProjectorConsistencyError(ArithmeticError):
    pass


def flavor_of(curve: SpectralCurve) -> str:
    if curve.name not in ("jm", "htw"):
        raise ValueError(f"no Lax pair is attached to the {curve.name!r} curve")
    return curve.name


def jm_s(curve: SpectralCurve) -> RationalFunction:
    """s in x = -q0 + s/2 (z + 1/z)."""
    return curve.x.subs({"z": 1}) + curve.field.q0


def projector_m0(curve: SpectralCurve) -> Matrix2:
    """M^(0) with the on-curve root fixed as in the catalog.

    jm:  sqrt((x+q0)^2 + theta/q0) = (s/2)(z - 1/z)
    htw: sqrt(2) sqrt(x + 2 q0^2) = 2 q0 z
    """
    F = curve.field
    q0, theta = F.q0, F.theta
    z = var("z")
    half = RationalFunction.constant_of(1) / 2
    if flavor_of(curve) == "jm":
        root = jm_s(curve) / 2 * (z - 1 / z)
        x = curve.x
        return Matrix2(
            half + (x + q0) / (2 * root), 1 / (2 * root),
            theta / (2 * q0 * root), half - (x + q0) / (2 * root),
        )
    return Matrix2(half - 1 / (2 * z), curve.x / (2 * q0 * z), 1 / (4 * q0 * z), half + 1 / (2 * z))


def solve_order(M0: Matrix2, A0: Matrix2, B: Matrix2, C: Matrix2) -> Matrix2:
    """The unique X with [A0, X] = B and M0 X + X M0 - X = C."""
    P = M0
    Q = Matrix2.identity() - M0
    mu = (A0 * P).trace()
    for label, block in (("M0 B M0", P * B * P), ("(1-M0) B (1-M0)", Q * B * Q),
                         ("M0 C (1-M0)", P * C * Q), ("(1-M0) C M0", Q * C * P)):
        if not block.is_zero():
            raise ProjectorConsistencyError(f"{label} = {block} should vanish")
    return P * C * P - Q * C * Q + (P * B * Q - Q * B * P) * (2 * mu).inverse()


@dataclass
class ProjectorSeries:
    curve: SpectralCurve
    M: list
    driver: str

    @property
    def K(self) -> int:
        return len(self.M) - 1

    def series(self) -> HbarSeries:
        return HbarSeries(0, self.M, self.K, Matrix2)

    def __getitem__(self, k: int) -> Matrix2:
        return self.M[k]

    def in_variable(self, name: str) -> list:
        """M^(k) with z renamed, for multi-point correlators."""
        if name == "z":
            return list(self.M)
        return [m.map(lambda e: e.swap("z", name)) for m in self.M]


def _lax_for(curve: SpectralCurve, K: int, lax: Optional[LaxMatrixSeries]) -> LaxMatrixSeries:
    if lax is None:
        return build_lax(flavor_of(curve), K=K, field=curve.field)
    if lax.K < K:
        raise ValueError(f"Lax series known through hbar^{lax.K}, need {K}")
    return lax


def projector_recursion(curve: SpectralCurve, K: int, driver: str = "x_system",
                        lax: Optional[LaxMatrixSeries] = None) -> ProjectorSeries:
    if driver not in DRIVERS:
        raise ValueError(f"driver must be one of {DRIVERS}")
    lax = _lax_for(curve, K, lax)
    xz = curve.x
    dxdz = curve.dx
    if driver == "x_system":
        A = lax.at(xz, "D")

        def derivative(m: Matrix2) -> Matrix2:
            return m.derivative("z") * dxdz.inverse()
    else:
        if not curve.field.is_symbolic:
            raise ValueError("the t driver needs a symbolic field (q0 or s)")
        A = lax.at(xz, "R")
        d = curve.field.dt
        # d/dt at fixed x = D_t at fixed z - (D_t x / x') d/dz
        shift = derive(d, xz) / dxdz

        def derivative(m: Matrix2) -> Matrix2:
            return m.map(lambda e: derive(d, e)) - m.derivative("z") * shift

    M = [projector_m0(curve)]
    for k in range(1, K + 1):
        B = derivative(M[k - 1])
        for i in range(1, k + 1):
            B = B - A[i].commutator(M[k - i])
        C = Matrix2.zero()
        for i in range(1, k):
            C = C - M[i] * M[k - i]
        M.append(solve_order(M[0], A[0], B, C))
    return ProjectorSeries(curve, M, driver)


def projector_defects(proj: ProjectorSeries) -> list[str]:
    """Violations of M^2 = M, Tr M = 1, det M = 0 order by order."""
    S = proj.series()
    out = []
    sq = S * S - S
    for k in range(proj.K + 1):
        if not sq[k].is_zero():
            out.append(f"(M^2 - M)^({k}) = {sq[k]}")
        tr = S[k].trace() - (1 if k == 0 else 0)
        if not tr.is_zero():
            out.append(f"Tr M^({k}) - {1 if k == 0 else 0} = {tr}")

    def entry(name):
        return HbarSeries(0, [getattr(m, name) for m in S.coeffs], S.order)

    dets = entry("a") * entry("d") - entry("b") * entry("c")
    for k in range(proj.K + 1):
        if not dets[k].is_zero():
            out.append(f"(det M)^({k}) = {dets[k]}")
    return out
