import cmath
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from painleve_tr.curves import build_bessel, build_htw, build_jm, build_weber
from painleve_tr.exactcore import RationalFunction, ScalarField, bernoulli, derive, render, var
from painleve_tr.painleve import expand_qp, sigma_series
from painleve_tr.toprec import (
    ResourceLimitError,
    bernoulli_check,
    dfg_dt,
    fg_in_q0,
    fg_limit,
    free_energy,
    omega,
    report_form,
)

GOLDEN = Path(__file__).parent / "golden"
q0 = var("q0")
th = var("theta")


def rf(c):
    return RationalFunction.constant_of(c)


def test_base_cases():
    c = build_bessel(1)
    z1, z2 = var("z1"), var("z2")
    assert (omega(c, 0, 1) - c.y.swap("z", "z1") * c.dx.swap("z", "z1")).is_zero()
    assert (omega(c, 0, 2) - 1 / (z1 - z2) ** 2).is_zero()


# -- omega_1^(1) on Bessel: golden file with a contour-integral oracle -----------------

def _bessel_recursion_numeric(z0: complex, r=0.3, N=256) -> complex:
    # residue at z = 0 of K(z0, z) omega_2^(0)(z, -z), by the trapezoid rule on |z| = r
    def y(z):
        return z / (2 * (z * z - 1))

    def f(z):
        kernel = 0.5 * (1 / (z0 - z) - 1 / (z0 + z)) / (2 * y(z) * 2 * z)
        return kernel * (-1 / (4 * z * z))

    return sum(f(w) * w for w in (r * cmath.exp(2j * cmath.pi * j / N) for j in range(N))) / N


def test_bessel_omega11_golden():
    body = omega(build_bessel(1), 1, 1).body()
    assert render(body) == (GOLDEN / "bessel_omega_1_1_theta1.txt").read_text().strip()


@pytest.mark.parametrize("z0", [2, 1.5 + 0.5j, -3])
def test_bessel_omega11_matches_contour_oracle(z0):
    body = omega(build_bessel(1), 1, 1).body()
    num = body.numerator()
    den = body.denominator()

    def ev(p):
        # evaluate a polynomial in z1 at a complex point through its coefficients
        return sum(complex(c.constant()) * z0 ** i for i, c in enumerate(p.coefficients("z1")))

    assert abs(ev(num) / ev(den) - _bessel_recursion_numeric(z0)) < 1e-12


# -- free energies ---------------------------------------------------------------------

def test_bessel_symbolic():
    c = build_bessel()
    assert (free_energy(c, 2) + 1 / (240 * th ** 2)).is_zero()
    assert (free_energy(c, 3) - 1 / (1008 * th ** 4)).is_zero()


@pytest.mark.parametrize("g", [2, 3])
def test_weber_is_minus_bessel(g):
    assert free_energy(build_weber(1), g) == -free_energy(build_bessel(1), g)
    assert bernoulli_check(build_weber(), g).passed


@pytest.mark.parametrize("theta", [1, 2, 3])
def test_htw_g2_closed_form(theta):
    expected = theta * (700 * q0 ** 6 - 85 * theta * q0 ** 3 - 2 * theta ** 2) / (480 * (4 * q0 ** 3 + theta) ** 5)
    assert (fg_in_q0("htw", theta, 2) - expected).is_zero()


@pytest.mark.parametrize("theta", [1, 2])
def test_jm_g2_closed_form(theta):
    poly = 2048 * q0 ** 12 + 2560 * theta * q0 ** 9 + 1280 * theta ** 2 * q0 ** 6 + 1020 * theta ** 3 * q0 ** 3 - 45 * theta ** 4
    expected = poly * q0 ** 3 / (480 * theta ** 2 * (4 * q0 ** 3 + theta) ** 5)
    assert (fg_in_q0("jm", theta, 2) - expected).is_zero()


def test_numeric_point_agrees_with_symbolic():
    sym = fg_in_q0("jm", 1, 2).subs({"q0": Fraction(-1, 4)})
    num = free_energy(build_jm(1, q0="-1/4"), 2)
    assert sym == num


def test_limits():
    theta = 2
    assert fg_limit(fg_in_q0("jm", theta, 2), "0").limit.is_zero()
    assert fg_limit(fg_in_q0("jm", theta, 2), "inf").limit == rf(Fraction(1, 240 * theta ** 2))
    assert fg_limit(fg_in_q0("htw", theta, 2), "inf").limit.is_zero()
    bessel = free_energy(build_bessel(theta), 2)
    assert fg_limit(fg_in_q0("htw", theta, 2), "0").limit == bessel


def test_difference_is_q0_free():
    d = fg_in_q0("jm", 3, 3) - fg_in_q0("htw", 3, 3)
    assert d.is_constant()
    assert abs(d.constant()) == abs(bernoulli(6) / (6 * 4 * 3 ** 4))


# -- t-derivatives ---------------------------------------------------------------------

def _minus_sigma4(theta):
    return 3 * theta * q0 ** 4 * (560 * q0 ** 6 - 184 * theta * q0 ** 3 + 3 * theta ** 2) / (32 * (4 * q0 ** 3 + theta) ** 7)


@pytest.mark.parametrize("builder", [build_jm, build_htw])
def test_dfg_dt_is_minus_sigma4(builder):
    c = builder(1)
    lhs = report_form(c, dfg_dt(c, 2))
    assert (lhs - _minus_sigma4(1)).is_zero()
    F = ScalarField.symbolic_q0(1)
    sigma4 = sigma_series(expand_qp(F, 4)).coefficient(2)
    assert (lhs + sigma4).is_zero()


def test_dt_of_constant_curve_quantity():
    c = build_jm(1)
    assert derive(c.field.dt, rf(5)).is_zero()


# -- structure of omega_n^(g) ------------------------------------------------------------

@pytest.mark.parametrize("g, n", [(0, 3), (1, 2), (0, 4)])
def test_symmetry(g, n):
    w = omega(build_jm(1, q0="-1/4"), g, n)
    assert w.symmetry_defects() == []


@settings(max_examples=15)
@given(st.sampled_from([(0, 3), (1, 2)]), st.permutations([0, 1, 2]))
def test_body_symmetric_under_relabelling(gn, perm):
    g, n = gn
    c = build_htw(1, q0=1)
    names = ["z1", "z2", "z3"][:n]
    w = omega(c, g, n)
    relabelled = [names[i] for i in perm if i < n]
    assert (w.body(names) - w.body(relabelled)).is_zero()


def test_poles_only_at_branch_points():
    c = build_jm(1, q0="-1/4")
    body = omega(c, 1, 1).body(["z"])
    for factor, _ in body.factor_denominator():
        root = factor.coefficients("z")
        # monic linear factors z - b with b a branch point
        assert len(root) == 2
        b = -root[0] / root[1]
        assert b in c.branch_points


def test_resource_bound():
    with pytest.raises(ResourceLimitError):
        omega(build_bessel(1), 4, 1, max_weight=6)
