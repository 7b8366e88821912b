"""
Free energies along the Painleve 2 family
=========================================

F_JM and F_HTW as functions of q0, their limits, and D_t F = -sigma.
"""

from painleve_tr.curves import build_htw, build_jm
from painleve_tr.exactcore import ScalarField, render
from painleve_tr.painleve import expand_qp, sigma_series
from painleve_tr.toprec import dfg_dt, fg_in_q0, fg_limit, report_form

theta = 1
F_jm = fg_in_q0("jm", theta, 2)
F_htw = fg_in_q0("htw", theta, 2)
print("F_jm^(2)  =", render(F_jm))
print("F_htw^(2) =", render(F_htw))

# the two differ by a constant
print("F_jm - F_htw =", render(F_jm - F_htw))

for at in ("0", "inf"):
    print(f"q0 -> {at}:  jm {fg_limit(F_jm, at)}   htw {fg_limit(F_htw, at)}")

# sigma from the Hamiltonian, order by order in hbar
F = ScalarField.symbolic_q0(theta)
sigma = sigma_series(expand_qp(F, 4))
print("sigma_4 =", render(sigma.coefficient(2)))

for c in (build_jm(theta), build_htw(theta)):
    d = report_form(c, dfg_dt(c, 2))
    print(c.name, "D_t F^(2) + sigma_4 =", render(d + sigma.coefficient(2)))
