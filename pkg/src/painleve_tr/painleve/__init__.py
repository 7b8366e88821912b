"""Painleve 2 hbar-expansion: q, p, sigma and the sigma-form."""

from .checks import Comparison, check_tau_derivative, sigma_table
from .expansion import (
    PainleveSeriesSolution,
    ParityReport,
    SigmaSeries,
    dagger_parity,
    expand_qp,
    hamiltonian_residual,
    order_matrix_det,
    painleve_residual,
    sigma_form_residual,
    sigma_relations,
    sigma_series,
)
from .tables import fg_bessel_reference, fg_htw_reference, fg_jm_reference, sigma_reference, tau_reference
