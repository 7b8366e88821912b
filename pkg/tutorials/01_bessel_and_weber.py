"""
Free energies of the two limit curves
=====================================

Bessel and Weber carry F^(g) that are pure Bernoulli numbers.
"""

from painleve_tr.curves import build_bessel, build_weber
from painleve_tr.exactcore import bernoulli, render
from painleve_tr.toprec import free_energy, omega, report_form

# theta stays a free symbol on the Bessel curve
bessel = build_bessel()
for g in (2, 3, 4):
    print(f"F_bessel^({g}) =", render(free_energy(bessel, g)))

# the same numbers from B_2g directly
for g in (2, 3, 4):
    print(f"B_{2 * g}/(2g(2g-2)) =", bernoulli(2 * g) / (2 * g * (2 * g - 2)))

# Weber lives over w = sqrt(theta); report_form rewrites it in theta
weber = build_weber()
for g in (2, 3):
    print(f"F_weber^({g}) =", render(report_form(weber, free_energy(weber, g))))

# one correlator, as a rational function of z1
print("omega_1^(1) on Bessel, theta = 1:", render(omega(build_bessel(1), 1, 1).body()))
