"""Topological recursion: omega_n^(g), free energies and their identities."""

from .invariants import (
    IdentityReport,
    Limit,
    bernoulli_check,
    bernoulli_value,
    compare,
    dfg_dt,
    fg_difference,
    fg_in_q0,
    fg_limit,
    free_energy,
    is_even_in,
    limit_of,
    report_form,
)
from .recursion import (
    DEFAULT_MAX_WEIGHT,
    KERNEL_FACTOR,
    MultiDifferential,
    RecursionEngine,
    ResourceLimitError,
    clear_memo,
    engine_for,
    omega,
    pole_bound,
)
