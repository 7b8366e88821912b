"""Spectral curves: data model, built-in catalog, JSON documents."""

from .catalog import BUILDERS, build_bessel, build_curve, build_htw, build_jm, build_weber, rational_sqrt
from .document import curve_from_document, curve_to_document, dump_curve, load_curve, same_curve
from .spectral import CurveValidationError, Mobius, SpectralCurve, rational_roots

__all__ = [
    "BUILDERS", "CurveValidationError", "Mobius", "SpectralCurve", "build_bessel",
    "build_curve", "build_htw", "build_jm", "build_weber", "curve_from_document",
    "curve_to_document", "dump_curve", "load_curve", "rational_roots", "rational_sqrt",
    "same_curve",
]
