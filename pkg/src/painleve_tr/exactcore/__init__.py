"""Exact arithmetic: rationals, rational functions, series, residues, derivations."""

from .bernoulli import bernoulli, bernoulli_free_energy
from .derivation import Derivation, derive
from .field import ScalarField, deflate_even
from .hbar import HbarSeries, Matrix2, matrix_entry, matrix_series, series_det, series_trace
from .ratfunc import (
    PARAMETERS,
    VARIABLES,
    BigRational,
    RationalFunction,
    as_fraction,
    parse_rational,
    var,
)
from .render import render, render_rational
from .series import INFINITY, LaurentSeries, laurent_expand, residue, sqrt_series

__all__ = [
    "BigRational", "Derivation", "HbarSeries", "INFINITY", "LaurentSeries", "Matrix2",
    "PARAMETERS", "RationalFunction", "ScalarField", "VARIABLES", "as_fraction",
    "bernoulli", "bernoulli_free_energy", "deflate_even", "derive", "laurent_expand",
    "matrix_entry", "matrix_series", "parse_rational", "render", "render_rational",
    "residue", "series_det", "series_trace", "sqrt_series", "var",
]
