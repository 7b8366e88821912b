"""hbar-deformed Lax pairs of Painleve 2, as hbar series of 2x2 matrices in x."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..exactcore import HbarSeries, Matrix2, RationalFunction, ScalarField, derive, matrix_series, var
from ..painleve import PainleveSeriesSolution, expand_qp

FLAVORS = ("jm", "htw")


@dataclass
class LaxMatrixSeries:
    """D(x, t) and R(x, t) with entries rational in ``x`` over ``field``.

    ``sol`` is the Painleve solution the matrices were assembled from; it
    lives in a symbolic field even when ``field`` is numeric.
    """

    flavor: str
    field: ScalarField
    D: HbarSeries
    R: HbarSeries
    Gamma: HbarSeries
    sol: PainleveSeriesSolution

    @property
    def K(self) -> int:
        return self.D.order

    def at(self, x: RationalFunction, which: str = "D") -> HbarSeries:
        """D or R with x replaced by a function of z."""
        series = self.D if which == "D" else self.R
        return series.map(lambda m: m.subs({"x": x}))


def _const(c, K) -> HbarSeries:
    return HbarSeries(0, [c], K)


def _entries(flavor, q: HbarSeries, p: HbarSeries, t, theta):
    K = q.order
    x = var("x")
    if flavor == "jm":
        a = p + (x * x + t / 2)
        D = [[a, -q + x], [-2 * (p * x + q * p + theta), -a]]
        R = [[(q + x) / 2, _const(RationalFunction.constant_of(1) / 2, K)], [-p, -(q + x) / 2]]
        G = [[_const(1, K), _const(0, K)], [_const(0, K), -2 * p]]
    else:
        a = -q + theta / (2 * x)
        D = [[a, -p - 2 * (q * q) + (x - t)], [p / (2 * x) + RationalFunction.constant_of(1) / 2, -a]]
        R = [[q, _const(-x, K)], [_const(RationalFunction.constant_of(-1) / 2, K), -q]]
        off = p / (2 * theta)
        G = [[_const(1, K), off], [off, _const(0, K)]]
    return matrix_series(D), matrix_series(R), matrix_series(G)


def _symbolic_field(field: ScalarField) -> ScalarField:
    if field.kind in ("q0", "s"):
        return field
    if field.kind == "numeric" and field.q0 is not None:
        return ScalarField.symbolic_q0(field.theta.constant())
    raise ValueError(f"a Lax pair needs a field with q0, got {field!r}")


def build_lax(flavor: str, theta=None, K: int = 6, field: Optional[ScalarField] = None) -> LaxMatrixSeries:
    """Assemble D and R from the hbar-expansion of (q, p) through hbar^K.

    The field defaults to symbolic q0 at the given theta.  A numeric field
    (theta and q0 fixed) expands symbolically first and then substitutes q0.
    """
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}")
    if field is None:
        if theta is None:
            raise ValueError("give theta or a field")
        field = ScalarField.symbolic_q0(theta)
    sym = _symbolic_field(field)
    sol = expand_qp(sym, K)
    q, p = sol.q, sol.p
    if sym is not field:
        point = {"q0": field.q0.constant()}
        q = q.map(lambda c: c.subs(point))
        p = p.map(lambda c: c.subs(point))
    D, R, G = _entries(flavor, q, p, field.t, field.theta)
    return LaxMatrixSeries(flavor, field, D, R, G, sol)


def zero_curvature_residual(lax: LaxMatrixSeries) -> HbarSeries:
    """hbar (d_t D - d_x R) + [D, R]; needs a symbolic field for d_t."""
    if not lax.field.is_symbolic:
        raise ValueError("the zero-curvature residual needs a symbolic field")
    d = lax.field.dt
    dD = lax.D.map(lambda m: m.map(lambda e: derive(d, e)))
    dR = lax.R.map(lambda m: m.derivative("x"))
    comm = lax.D * lax.R - lax.R * lax.D
    return (dD - dR).shift(1).truncate(lax.K) + comm


def x_dependence(lax: LaxMatrixSeries, which: str = "R") -> list[int]:
    """Orders k >= 1 at which D^(k) or R^(k) still depends on x."""
    series = lax.D if which == "D" else lax.R
    return [k for k in range(1, series.order + 1) if "x" in _vars(series[k])]


def _vars(m: Matrix2) -> set:
    out = set()
    for e in m.entries():
        out |= set(e.variables())
    return out


def minus_det_d0(lax: LaxMatrixSeries) -> RationalFunction:
    return -lax.D[0].det()


def parity_residual(lax: LaxMatrixSeries) -> HbarSeries:
    """Gamma D^T Gamma^-1 - D^dagger."""
    Dt = lax.D.map(lambda m: m.transpose())
    return lax.Gamma * Dt * lax.Gamma.inverse() - lax.D.dagger()
