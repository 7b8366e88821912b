"""Determinantal side: Lax pairs, the projector, correlators W_n and their checks."""

from .checks import (
    ResidueReport,
    appendix_d_residue,
    lax_checks,
    loop_check,
    p2_series,
    parity_check,
    pole_structure_check,
    tt_suite,
)
from .correlators import (
    CorrelatorSeries,
    correlators,
    diagonal,
    omega_body,
    pullback,
    sheet_sign,
    taylor,
    tt_compare,
    w1,
    w1_leading,
    w2,
    w2_diagonal,
    w3,
)
from .lax import (
    FLAVORS,
    LaxMatrixSeries,
    build_lax,
    minus_det_d0,
    parity_residual,
    x_dependence,
    zero_curvature_residual,
)
from .projector import (
    DRIVERS,
    ProjectorConsistencyError,
    ProjectorSeries,
    flavor_of,
    jm_s,
    projector_defects,
    projector_m0,
    projector_recursion,
    solve_order,
)
