"""Determinantal-side verifications: Lax data, poles, parity, loop equations, TT, the t-derivative residue."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..curves import SpectralCurve
from ..exactcore import (
    INFINITY,
    HbarSeries,
    LaurentSeries,
    Matrix2,
    RationalFunction,
    laurent_expand,
    series_det,
    sqrt_series,
    var,
)
from ..toprec import IdentityReport, compare, dfg_dt, omega
from .correlators import (
    diagonal,
    pullback,
    sheet_sign,
    tt_compare,
    w1,
    w1_leading,
    w2,
    w2_diagonal,
    w3,
)
from .lax import LaxMatrixSeries, build_lax, minus_det_d0, parity_residual, x_dependence, zero_curvature_residual
from .projector import ProjectorSeries, flavor_of, projector_defects, projector_recursion


def _ok(check: str, detail: str = "") -> IdentityReport:
    return IdentityReport(check, "pass", detail, detail)


def _bad(check: str, lhs: str, rhs: str, diff: str) -> IdentityReport:
    return IdentityReport(check, "fail", lhs, rhs, diff)


def _series_report(check: str, residual: HbarSeries) -> IdentityReport:
    hit = residual.first_nonzero()
    if hit is None:
        return _ok(check, f"0 + O(hbar^{residual.order + 1})")
    k, c = hit
    return _bad(check, f"residual at hbar^{k}", "0", str(c))


# -- Lax pair ----------------------------------------------------------------

def lax_checks(lax: LaxMatrixSeries, curve: Optional[SpectralCurve] = None) -> list[IdentityReport]:
    """Zero curvature, tracelessness, x-independence of R^(k), and E_infinity = -det D^(0)."""
    fl = lax.flavor
    out = [_series_report(f"zero-curvature-{fl}", zero_curvature_residual(lax))]
    traces = [k for k in lax.D.powers() if not (lax.D[k].trace().is_zero() and lax.R[k].trace().is_zero())]
    out.append(_ok(f"traceless-{fl}") if not traces else _bad(f"traceless-{fl}", f"orders {traces}", "[]", "nonzero trace"))
    bad = x_dependence(lax, "R")
    out.append(_ok(f"R-x-independent-{fl}") if not bad else _bad(f"R-x-independent-{fl}", str(bad), "[]", f"R^({bad[0]}) depends on x"))
    if curve is not None and curve.E_infinity is not None:
        # both sides are brought to the Lax field through the q0 form
        E = lax.field.from_q0(curve.field.to_q0(curve.E_infinity))
        out.append(compare(f"E-infinity-{fl}", minus_det_d0(lax), E))
    return out


def parity_check(flavor: str, theta, K: int = 6) -> IdentityReport:
    """Gamma D^T Gamma^-1 = D^dagger through hbar^K."""
    lax = build_lax(flavor, theta, K)
    return _series_report(f"parity-gamma-{flavor}", parity_residual(lax))


# -- pole structure -------------------------------------------------------------

def _allowed_factors(curve: SpectralCurve, lax: LaxMatrixSeries) -> list[RationalFunction]:
    z = var("z")
    allowed = [z - b for b in curve.branch_points]
    allowed += [z - p for p in curve.punctures if p is not INFINITY]
    # poles of D in x, pulled back to z
    for e in lax.D[0].entries():
        for f, _ in e.factor_denominator():
            if "x" in f.variables():
                allowed += [g for g, _ in f.subs({"x": curve.x}).factor_numerator() if "z" in g.variables()]
    return allowed


def _associated(f: RationalFunction, g: RationalFunction) -> bool:
    q = f / g
    return "z" not in q.variables()


def pole_structure_check(curve: SpectralCurve, K: int = 5, proj: Optional[ProjectorSeries] = None,
                         lax: Optional[LaxMatrixSeries] = None) -> IdentityReport:
    """M^(k) has poles only at branch points, punctures and poles of D; none over the even zero."""
    lax = lax or build_lax(flavor_of(curve), K=K, field=curve.field)
    proj = proj or projector_recursion(curve, K, lax=lax)
    allowed = _allowed_factors(curve, lax)
    even = (curve.x - curve.even_zero).numerator() if curve.even_zero is not None else None
    check = f"poles-{curve.name}-K{K}"
    for k, m in enumerate(proj.M[: K + 1]):
        for name, e in zip(("11", "12", "21", "22"), m.entries()):
            for f, mult in e.factor_denominator():
                if "z" not in f.variables():
                    continue
                if not any(_associated(f, a) for a in allowed):
                    return _bad(check, f"M^({k})_{name}", "poles at branch points/punctures",
                                f"pole of order {mult} at the roots of {f}")
                if even is not None and (even / f).is_polynomial():
                    return _bad(check, f"M^({k})_{name}", "regular at the even zero",
                                f"pole at a root of {f}, over x = {curve.even_zero}")
    return _ok(check, f"M^(0..{K}) poles only at allowed points")


# -- loop equations -----------------------------------------------------------------

def p2_series(lax: LaxMatrixSeries, proj: ProjectorSeries) -> HbarSeries:
    """P_2(x; x(z1)) from its definition; x stays free."""
    X = var("x")
    x1 = proj.curve.x.swap("z", "z1")
    M1 = proj.in_variable("z1")
    K = min(lax.K, proj.K)
    out = []
    for k in range(K + 1):
        acc = RationalFunction()
        for i in range(k + 1):
            Di = lax.D[i]
            num = Di - Di.subs({"x": x1}) - Di.derivative("x").subs({"x": x1}) * (X - x1)
            acc = acc + (num * M1[k - i]).trace()
        out.append(acc / (X - x1) ** 2)
    return HbarSeries(-1, out, K - 1)


def loop_check(curve: SpectralCurve, K: int = 6, orders_n1: int = 1) -> list[IdentityReport]:
    """First loop equation through hbar^(K-2), P_2 shape, and the n = 1 equation through hbar^orders_n1."""
    name = curve.name
    lax = build_lax(flavor_of(curve), K=K, field=curve.field)
    proj = projector_recursion(curve, K, lax=lax)
    W1 = w1(lax, proj).W
    W1z = W1.map(lambda f: f.swap("z1", "z"))
    P1 = (-series_det(lax.at(curve.x, "D"))).shift(-2)
    reports = [_series_report(f"loop-P1-{name}", P1 - w2_diagonal(proj) - W1z * W1z)]

    P2 = p2_series(lax, proj)
    X = var("x")
    if name == "jm":
        bad = [k for k in P2.powers() if "x" in P2[k].variables()]
        label = "P2 free of x"
        s3 = Matrix2.diag(1, -1)
        sig = HbarSeries(-1, [(s3 * m).trace() for m in proj.in_variable("z1")], P2.order)
        reports.append(_series_report(f"loop-P2-sigma3-{name}", P2 - sig))
    else:
        bad = [k for k in P2.powers() if "x" in (P2[k] * X).variables()]
        label = "x P2 free of x"
    check = f"loop-P2-shape-{name}"
    reports.append(_ok(check, label) if not bad else _bad(check, f"orders {bad}", label, str(P2[bad[0]])))

    # 0 = P_2(x; x1) + W_3(x, x, x1) + 2 W_1(x) W_2(x, x1) + d/dx1 (W_1(x) - W_1(x1))/(x - x1)
    top = orders_n1
    x1 = curve.x.swap("z", "z1")
    P2z = P2.map(lambda f: f.subs({"x": curve.x})).truncate(top)
    W2 = w2(proj, top + 1).W.map(lambda f: f.swap("z2", "z"))
    W3 = w3(proj, max(top, 0)).W.map(lambda f: f.swap("z3", "z"))
    W3d = HbarSeries(0, [diagonal(W3[k], "z", "z2") for k in W3.powers()], W3.order)
    dt = []
    for k in range(-1, top + 1):
        f = (W1z[k] - W1[k]) / (curve.x - x1)
        dt.append(f.derivative("z1") / x1.derivative("z1"))
    DT = HbarSeries(-1, dt, top)
    res = (P2z + W3d + 2 * (W1z * W2) + DT).truncate(top)
    reports.append(_series_report(f"loop-n1-{name}", res))
    return reports


# -- TT property -------------------------------------------------------------------

def tt_suite(curve: SpectralCurve, K: int = 6, n3_order: int = 2) -> list[IdentityReport]:
    """Parity, leading order, pole structure and W_n^(g) = omega_n^(g) for 2g - 2 + n <= K - 1."""
    lax = build_lax(flavor_of(curve), K=K, field=curve.field)
    proj = projector_recursion(curve, K, lax=lax)
    name = curve.name
    reports = []
    defects = projector_defects(proj)
    reports.append(_ok(f"projector-{name}") if not defects else _bad(f"projector-{name}", defects[0], "0", defects[0]))
    reports.append(pole_structure_check(curve, min(K, 5), proj, lax))
    W = {1: w1(lax, proj), 2: w2(proj, K - 2 if K >= 2 else K), 3: w3(proj, n3_order)}
    sign = sheet_sign(curve, W[1].W[-1].swap("z1", "z"))
    reports.append(_ok(f"sheet-{name}", "identity" if sign == 1 else "iota"))
    for n, w in W.items():
        wrong, low = w.wrong_parity(), w.below_leading()
        check = f"tt-parity-{name}-n{n}"
        reports.append(_ok(check) if not wrong else _bad(check, f"hbar^{wrong[0]}", "0", str(w.W[wrong[0]])))
        check = f"tt-order-{name}-n{n}"
        reports.append(_ok(check) if not low else _bad(check, f"hbar^{low[0]}", "0", str(w.W[low[0]])))
        g = 0
        while 2 * g - 2 + n <= w.W.order:
            reports.append(tt_compare(w, g, sign))
            g += 1
    return reports


# -- the t-derivative residue ---------------------------------------------------------

@dataclass
class ResidueReport:
    check: str
    status: str
    value: RationalFunction
    dF: RationalFunction
    ratio: Optional[RationalFunction]
    per_puncture: dict

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _leading(s: LaurentSeries):
    return s.valuation, s.coefficient(s.valuation)


def appendix_d_residue(curve: SpectralCurve, g: int) -> ResidueReport:
    """sum over punctures of Res(d_t s_inf W_1^(g) dx) against D_t F^(g).

    At each puncture the branch of s_inf is the one whose x-derivative has
    the leading behaviour of W_1^(-1) there; the residue is taken in z, which
    counts a ramified point over x = infinity with its ramification index.
    """
    flavor = flavor_of(curve)
    if not curve.field.is_symbolic:
        raise ValueError("D_t F^(g) needs a symbolic field")
    sign = sheet_sign(curve)
    lead = w1_leading(curve)
    body = omega(curve, g, 1).body(["z"])
    if sign == -1:
        body = pullback(curve, body, ["z"])
    N = 6 * g + 6
    x = curve.x
    t = curve.field.t
    total = RationalFunction()
    per = {}
    for p in curve.punctures:
        if flavor == "jm":
            ds = laurent_expand(x * x + t / 2, "z", p, N)
            lam = laurent_expand(x / 2, "z", p, N)
        else:
            root = sqrt_series(x / 2, "z", p, N)  # x^(1/2)/sqrt(2), one branch
            ds = root
            lam = -root
        w_lead = _leading(laurent_expand(lead, "z", p, N))
        d_lead = _leading(ds)
        if w_lead == d_lead:
            branch = 1
        elif (w_lead[0], -w_lead[1]) == d_lead:
            branch = -1
        else:
            raise ArithmeticError(f"no branch of d s_inf/dx matches W_1^(-1) at z = {p}")
        r = (lam.scale(branch) * laurent_expand(body, "z", p, N)).residue()
        per[str(p)] = r
        total = total + r
    dF = dfg_dt(curve, g)
    ratio = None if dF.is_zero() else total / dF
    status = "pass" if (total - dF).is_zero() else "fail"
    return ResidueReport(f"appendix-d-{curve.name}-g{g}", status, total, dF, ratio, per)
