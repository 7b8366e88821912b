"""hbar-expansion of the Painleve 2 Hamiltonian system.

    hbar q' = p + q^2 + t/2,     hbar p' = -2 q p - theta,

with ' = d/dt routed through q0.  The order-0 data is q_0 = q0,
p_0 = -theta/(2 q0), t = -2 q0^2 + theta/q0; every higher order solves a
2x2 linear system whose matrix only involves q_0 and p_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exactcore import HbarSeries, RationalFunction, ScalarField, derive


@dataclass
class PainleveSeriesSolution:
    field: ScalarField
    q: HbarSeries
    p: HbarSeries
    K: int

    @property
    def t(self) -> RationalFunction:
        return self.field.t

    def dot(self, series: HbarSeries) -> HbarSeries:
        """d/dt applied coefficientwise."""
        d = self.field.dt
        return series.map(lambda c: derive(d, c))


def order_matrix_det(field: ScalarField) -> RationalFunction:
    """Determinant of the order-k system in the unknowns (q_k, p_k)."""
    q0 = field.q0
    p0 = -field.theta / (2 * q0)
    return 2 * q0 * 2 * q0 - 2 * p0


def expand_qp(field: ScalarField, K: int) -> PainleveSeriesSolution:
    if K < 0:
        raise ValueError("K must be nonnegative")
    d = field.dt
    theta = field.theta
    q0 = field.q0
    p0 = -theta / (2 * q0)
    det = order_matrix_det(field)
    if det.is_zero():
        raise ZeroDivisionError("turning point: 4 q0^3 + theta = 0")
    inv_det = det.inverse()
    q = [q0]
    p = [p0]
    for k in range(1, K + 1):
        # p_k + 2 q0 q_k = D q_{k-1} - sum_{0<i<k} q_i q_{k-i}
        r1 = derive(d, q[k - 1])
        # 2 p0 q_k + 2 q0 p_k = -D p_{k-1} - 2 sum_{0<i<k} q_i p_{k-i}
        r2 = -derive(d, p[k - 1])
        for i in range(1, k):
            r1 = r1 - q[i] * q[k - i]
            r2 = r2 - 2 * q[i] * p[k - i]
        # [[2 q0, 1], [2 p0, 2 q0]] (q_k, p_k)^T = (r1, r2)^T
        qk = (2 * q0 * r1 - r2) * inv_det
        pk = (2 * q0 * r2 - 2 * p0 * r1) * inv_det
        q.append(qk)
        p.append(pk)
    return PainleveSeriesSolution(field, HbarSeries(0, q, K), HbarSeries(0, p, K), K)


def painleve_residual(sol: PainleveSeriesSolution) -> HbarSeries:
    """hbar^2 q'' - (2 q^3 + t q - theta + hbar/2), through the available order."""
    q = sol.q
    K = sol.K
    q2 = sol.dot(sol.dot(q)).shift(2).truncate(K)
    rhs = 2 * (q * q * q) + q * sol.t - sol.field.theta + HbarSeries(1, [RationalFunction.constant_of(Fraction(1, 2))], K)
    return q2 - rhs


def hamiltonian_residual(sol: PainleveSeriesSolution) -> tuple[HbarSeries, HbarSeries]:
    """Residuals of the two first-order equations."""
    q, p, K = sol.q, sol.p, sol.K
    e1 = sol.dot(q).shift(1).truncate(K) - (p + q * q + sol.t / 2)
    e2 = sol.dot(p).shift(1).truncate(K) - (-2 * (q * p) - sol.field.theta)
    return e1, e2


@dataclass
class SigmaSeries:
    sigma: HbarSeries
    flavor: str
    field: ScalarField

    def hamiltonian(self) -> HbarSeries:
        """sigma for JM; sigma + t^2/8 for HTW."""
        if self.flavor == "htw":
            return self.sigma + self.field.t ** 2 / 8
        return self.sigma

    def coefficient(self, k: int) -> RationalFunction:
        """sigma_{2k}."""
        return self.sigma[2 * k]


def sigma_series(sol: PainleveSeriesSolution, flavor: str = "jm") -> SigmaSeries:
    if flavor not in ("jm", "htw"):
        raise ValueError("flavor must be jm or htw")
    q, p = sol.q, sol.p
    sigma = p * p / 2 + (q * q + sol.t / 2) * p + q * sol.field.theta
    return SigmaSeries(sigma, flavor, sol.field)


def sigma_form_residual(sig: SigmaSeries, order: Optional[int] = None) -> HbarSeries:
    """(hbar s'')^2 + 4 s'^3 + 2 t s'^2 - 2 s s' - theta^2/4 through hbar^order."""
    s = sig.sigma
    order = s.order if order is None else order
    if order > s.order:
        raise ValueError(f"sigma is only known through hbar^{s.order}")
    s = s.truncate(order)
    d = sig.field.dt
    s1 = s.map(lambda c: derive(d, c))
    s2 = s1.map(lambda c: derive(d, c)).shift(1).truncate(order)
    t = sig.field.t
    return s2 * s2 + 4 * (s1 * s1 * s1) + (s1 * s1) * (2 * t) - 2 * (s * s1) - sig.field.theta ** 2 / 4


def sigma_relations(sol: PainleveSeriesSolution) -> tuple[HbarSeries, HbarSeries]:
    """Residuals of sigma' = p/2 and hbar sigma'' = -q p - theta/2."""
    sig = sigma_series(sol).sigma
    s1 = sol.dot(sig)
    r1 = s1 - sol.p / 2
    s2 = sol.dot(s1).shift(1).truncate(sol.K)
    r2 = s2 - (-(sol.q * sol.p) - sol.field.theta / 2)
    return r1, r2


@dataclass
class ParityReport:
    ok: bool
    first_bad_order: Optional[int]
    detail: str


def dagger_parity(sol: PainleveSeriesSolution, order: Optional[int] = None) -> ParityReport:
    """p has only even hbar powers, and -q - theta/p equals q with hbar -> -hbar."""
    order = sol.K if order is None else order
    for k in range(1, order + 1, 2):
        if not sol.p[k].is_zero():
            return ParityReport(False, k, f"p_{k} = {sol.p[k]} should vanish")
    p = sol.p.truncate(order)
    q = sol.q.truncate(order)
    lhs = -q - p.inverse() * sol.field.theta
    rhs = q.dagger()
    for k in range(order + 1):
        diff = lhs[k] - rhs[k]
        if not diff.is_zero():
            return ParityReport(False, k, f"(-q - theta/p)_{k} - (-1)^{k} q_{k} = {diff}")
    return ParityReport(True, None, f"p even and q^dagger = -q - theta/p through hbar^{order}")
