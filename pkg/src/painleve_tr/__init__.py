"""Exact topological recursion on the Painleve 2 spectral curves and the determinantal checks."""

from .curves import SpectralCurve, build_curve, load_curve
from .exactcore import HbarSeries, Matrix2, RationalFunction, ScalarField, render
from .toprec import bernoulli_check, fg_difference, free_energy, omega
from .painleve import expand_qp, sigma_form_residual, sigma_series
from .laxdet import appendix_d_residue, build_lax, loop_check, projector_recursion, tt_suite

__version__ = "0.1.0"
