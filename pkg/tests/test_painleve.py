from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from painleve_tr.exactcore import HbarSeries, RationalFunction, ScalarField, derive
from painleve_tr.painleve import (
    SigmaSeries,
    check_tau_derivative,
    dagger_parity,
    expand_qp,
    hamiltonian_residual,
    order_matrix_det,
    painleve_residual,
    sigma_form_residual,
    sigma_relations,
    sigma_series,
    sigma_table,
)

thetas = st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(lambda q: q != 0)


def rf(c):
    return RationalFunction.constant_of(c)


def test_q1_direct_substitution_oracle():
    F = ScalarField.symbolic_q0(1)
    q0, t = F.q0, F.t
    sol = expand_qp(F, 1)
    # hbar^0: 2 q0^3 + t q0 - theta = 0; hbar^1: (6 q0^2 + t) q1 + 1/2 = 0
    assert (2 * q0 ** 3 + t * q0 - 1).is_zero()
    q1 = -1 / (2 * (6 * q0 * q0 + t))
    assert (sol.q[1] - q1).is_zero()


@settings(max_examples=10)
@given(thetas)
def test_painleve_residual_vanishes(theta):
    sol = expand_qp(ScalarField.symbolic_q0(theta), 6)
    assert painleve_residual(sol).first_nonzero() is None
    r1, r2 = hamiltonian_residual(sol)
    assert r1.first_nonzero() is None and r2.first_nonzero() is None


def test_order_matrix_det():
    F = ScalarField.symbolic_q0(2)
    q0 = F.q0
    assert (order_matrix_det(F) - (4 * q0 ** 3 + 2) / q0).is_zero()


def test_turning_point_rejected():
    with pytest.raises((ValueError, ZeroDivisionError)):
        expand_qp(ScalarField.numeric(4, -1), 2)


def test_sigma_form_through_hbar10():
    sig = sigma_series(expand_qp(ScalarField.symbolic_q0(1), 10))
    assert sigma_form_residual(sig, 10).first_nonzero() is None


def test_sigma_form_order0_with_closed_form():
    sig = sigma_series(expand_qp(ScalarField.symbolic_q0(3), 2))
    assert sigma_form_residual(sig, 0)[0].is_zero()


def test_sigma_form_perturbation_detected():
    F = ScalarField.symbolic_q0(1)
    sig = sigma_series(expand_qp(F, 4))
    bumped = HbarSeries(0, [c + (1 if k == 2 else 0) for k, c in sig.sigma.items()], sig.sigma.order)
    res = sigma_form_residual(SigmaSeries(bumped, "jm", F), 4)
    k, _ = res.first_nonzero()
    assert k == 2


@settings(max_examples=8)
@given(thetas)
def test_sigma_relations(theta):
    r1, r2 = sigma_relations(expand_qp(ScalarField.symbolic_q0(theta), 5))
    assert r1.first_nonzero() is None and r2.first_nonzero() is None


def test_sigma_table_and_tau():
    assert all(row.ok for row in sigma_table(2))
    assert check_tau_derivative(2, 1).ok and check_tau_derivative(3, 2).ok


def test_sigma2_at_desk_point():
    F = ScalarField.symbolic_q0(1)
    sig = sigma_series(expand_qp(F, 2))
    assert F.evaluate(sig.coefficient(1), Fraction(-1, 4)) == rf(Fraction(8, 225))


def test_odd_sigma_coefficients_vanish():
    sig = sigma_series(expand_qp(ScalarField.symbolic_q0(1), 7))
    assert all(sig.sigma[k].is_zero() for k in (1, 3, 5, 7))


def test_dagger_parity_through_hbar6():
    rep = dagger_parity(expand_qp(ScalarField.symbolic_q0(1), 6))
    assert rep.ok, rep.detail


def test_dagger_low_order_oracle():
    theta = 2
    sol = expand_qp(ScalarField.symbolic_q0(theta), 2)
    q, p = sol.q, sol.p
    # -q - theta/p by hand: 1/p = 1/p0 - p1/p0^2 h + (p1^2/p0^3 - p2/p0^2) h^2
    h0 = -q[0] - theta / p[0]
    h1 = -q[1] + theta * p[1] / p[0] ** 2
    h2 = -q[2] - theta * (p[1] ** 2 / p[0] ** 3 - p[2] / p[0] ** 2)
    assert (h0 - q[0]).is_zero()
    assert (h1 + q[1]).is_zero()
    assert (h2 - q[2]).is_zero()


def test_htw_hamiltonian_shift():
    F = ScalarField.symbolic_q0(1)
    sol = expand_qp(F, 2)
    jm, htw = sigma_series(sol, "jm"), sigma_series(sol, "htw")
    diff = htw.hamiltonian() - jm.hamiltonian()
    assert (diff[0] - F.t ** 2 / 8).is_zero()


def test_dt_is_derivation_on_q():
    F = ScalarField.symbolic_q0(1)
    sol = expand_qp(F, 3)
    a, b = sol.q[1], sol.q[2]
    assert (derive(F.dt, a * b) - derive(F.dt, a) * b - a * derive(F.dt, b)).is_zero()
