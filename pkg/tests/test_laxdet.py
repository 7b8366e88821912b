from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from painleve_tr.curves import build_bessel, build_htw, build_jm
from painleve_tr.exactcore import Matrix2, RationalFunction, var
from painleve_tr.laxdet import (
    ProjectorConsistencyError,
    ProjectorSeries,
    build_lax,
    correlators,
    jm_s,
    lax_checks,
    minus_det_d0,
    omega_body,
    p2_series,
    parity_check,
    pole_structure_check,
    projector_defects,
    projector_m0,
    projector_recursion,
    sheet_sign,
    solve_order,
    tt_compare,
    w1_leading,
    x_dependence,
)

z = var("z")
X = var("x")


def rf(c):
    return RationalFunction.constant_of(c)


def jm_desk():
    return build_jm(1, q0="-1/4")


def htw_desk():
    return build_htw(1, q0=1)


# -- Lax pairs ---------------------------------------------------------------------------

@pytest.mark.parametrize("flavor", ["jm", "htw"])
def test_lax_checks(flavor):
    curve = build_jm(1) if flavor == "jm" else build_htw(1)
    lax = build_lax(flavor, K=5, field=curve.field)
    for r in lax_checks(lax, curve):
        assert r.passed, (r.check, r.first_diff)


def test_e_infinity_is_minus_det():
    c = htw_desk()
    lax = build_lax("htw", K=0, field=c.field)
    assert (minus_det_d0(lax) - c.E_infinity).is_zero()


def test_only_r_is_x_free():
    lax = build_lax("jm", 1, K=4)
    assert x_dependence(lax, "R") == []
    assert x_dependence(lax, "D")  # D^(k) keeps x at even k


@pytest.mark.parametrize("flavor", ["jm", "htw"])
def test_gamma_parity(flavor):
    r = parity_check(flavor, 1, 6)
    assert r.passed, r.first_diff


def test_gamma_parity_order0_by_hand():
    lax = build_lax("jm", 2, K=0)
    D0, G0 = lax.D[0], lax.Gamma[0]
    # order 0 of D^dagger is D^(0) itself
    assert (G0 * D0.transpose() * G0.inverse() - D0).is_zero()


def test_unknown_flavor():
    with pytest.raises(ValueError):
        build_lax("bessel", 1)


# -- the projector -------------------------------------------------------------------------

def test_m0_jm_entry():
    c = jm_desk()
    s = jm_s(c)
    assert s == rf(2)
    assert (projector_m0(c).b - 1 / (s * (z - 1 / z))).is_zero()


def test_m1_cramer_oracle():
    c = jm_desk()
    lax = build_lax("jm", K=1, field=c.field)
    proj = projector_recursion(c, 1, lax=lax)
    point = {"z": 3}
    D = lax.at(c.x, "D")
    M0 = proj[0]
    rhs = M0.derivative("z") * c.dx.inverse() - D[1].commutator(M0)
    al, be, ga = (e.subs(point).constant() for e in (D[0].a, D[0].b, D[0].c))
    m11, m12, m21, m22 = (e.subs(point).constant() for e in M0.entries())
    r11, r12 = rhs.a.subs(point).constant(), rhs.b.subs(point).constant()
    # unknowns (a, b, c) of M^(1) = [[a, b], [c, -a]]
    A = [
        [Fraction(0), -ga, be],          # [D0, X]_11
        [-2 * be, 2 * al, Fraction(0)],  # [D0, X]_12
        [m22 - m11, -m21, -m12],         # det M linear in M^(1)
    ]
    b = [r11, r12, Fraction(0)]

    def det3(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    d = det3(A)
    sol = []
    for j in range(3):
        Aj = [row[:j] + [b[i]] + row[j + 1:] for i, row in enumerate(A)]
        sol.append(det3(Aj) / d)
    M1 = proj[1]
    assert [M1.a.subs(point).constant(), M1.b.subs(point).constant(), M1.c.subs(point).constant()] == sol
    assert M1.d.subs(point).constant() == -sol[0]


@pytest.mark.parametrize("make", [jm_desk, htw_desk])
def test_projector_identities(make):
    assert projector_defects(projector_recursion(make(), 4)) == []


def test_t_driver_agrees_with_x_driver():
    c = build_htw(1)
    a = projector_recursion(c, 3, "x_system")
    b = projector_recursion(c, 3, "t_system")
    for k in range(4):
        assert (a[k] - b[k]).is_zero()


def test_t_driver_needs_symbolic_field():
    with pytest.raises(ValueError):
        projector_recursion(htw_desk(), 2, "t_system")


def test_solver_rejects_inconsistent_data():
    M0 = Matrix2.of([[1, 0], [0, 0]])
    A0 = Matrix2.of([[1, 0], [0, -1]])
    with pytest.raises(ProjectorConsistencyError):
        solve_order(M0, A0, Matrix2.of([[1, 0], [0, 0]]), Matrix2.zero())


@settings(max_examples=10)
@given(st.sampled_from([(1, 1), (2, -1), (1, Fraction(1, 2))]), st.integers(1, 4))
def test_solver_on_random_block_data(point, seed):
    # pick X, build B = [A0, X] and C = M0 X + X M0 - X, then recover X
    M0 = projector_m0(build_htw(point[0], q0=point[1]))
    A0 = 3 * (2 * M0 - Matrix2.identity())
    P, Q = M0, Matrix2.identity() - M0
    Y = Matrix2.of([[seed, 1], [z, -seed]])
    X = P * Y * Q + Q * Y * P  # off-diagonal blocks, so C = 0
    B = A0.commutator(X)
    C = M0 * X + X * M0 - X
    assert (solve_order(M0, A0, B, C) - X).is_zero()


# -- pole structure ------------------------------------------------------------------------

@pytest.mark.parametrize("make", [jm_desk, htw_desk])
def test_pole_structure(make):
    r = pole_structure_check(make(), 5)
    assert r.passed, r.first_diff


def test_pole_perturbation_at_even_zero_detected():
    c = jm_desk()
    proj = projector_recursion(c, 3)
    bump = 1 / (c.x - c.even_zero)
    M = list(proj.M)
    M[2] = M[2] + Matrix2(bump, rf(0), rf(0), -bump)
    r = pole_structure_check(c, 3, ProjectorSeries(c, M, proj.driver))
    assert not r.passed
    # the rejected factor is the fibre over x = q0
    even = (c.x - c.even_zero).numerator()
    assert r.lhs == "M^(2)_11"
    assert any((even / f).is_polynomial() for f, _ in bump.factor_denominator() if f.variables())
    assert "2*z^2+z+2" in r.first_diff or "z^2+1/2*z+1" in r.first_diff


def test_pole_perturbation_at_stray_point_detected():
    c = htw_desk()
    proj = projector_recursion(c, 3)
    M = list(proj.M)
    M[1] = M[1] + Matrix2(rf(0), 1 / (z - 5), rf(0), rf(0))
    r = pole_structure_check(c, 3, ProjectorSeries(c, M, proj.driver))
    assert not r.passed


# -- correlators and the sheet map --------------------------------------------------------

def test_sheet_signs():
    assert sheet_sign(jm_desk()) == -1
    assert sheet_sign(htw_desk()) == 1
    assert w1_leading(htw_desk()) == htw_desk().y


def test_w1_g1_jm_desk():
    c = jm_desk()
    W = correlators(c, 1, K=3)
    assert tt_compare(W, 1, sheet_sign(c)).passed


def test_w3_g0_both():
    for c in (jm_desk(), htw_desk()):
        W = correlators(c, 3, K=2)
        assert W.below_leading() == [] and W.wrong_parity() == []
        assert tt_compare(W, 0, sheet_sign(c)).passed


def test_w1_parity():
    W = correlators(htw_desk(), 1, K=6)
    assert W.wrong_parity() == []


def test_p2_leading_is_sigma3_trace():
    c = jm_desk()
    lax = build_lax("jm", K=2, field=c.field)
    proj = projector_recursion(c, 2, lax=lax)
    z1 = var("z1")
    root = jm_s(c) / 2 * (z1 - 1 / z1)
    expected = (c.x.swap("z", "z1") + c.field.q0) / root
    assert (p2_series(lax, proj)[-1] - expected).is_zero()


def test_no_lax_for_bessel():
    with pytest.raises(ValueError):
        projector_recursion(build_bessel(1), 1)


def test_omega_body_base_case():
    c = htw_desk()
    assert omega_body(c, 0, 1) == c.y.swap("z", "z1") * c.dx.swap("z", "z1")
