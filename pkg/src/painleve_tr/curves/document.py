"""JSON curve-definition documents.

Layout::

    {"name": "bessel", "parameter": null, "theta": "1", "q0": null,
     "x": {"num": [...], "den": [...]}, "y": {...},
     "involution": {"a": ..., "b": ..., "c": ..., "d": ...},
     "report_substitution": "..."}

``num``/``den`` list coefficients by ascending power of z.  Each coefficient
is a ``"p/q"`` string, or a list of ``"p/q"`` strings giving a polynomial in
the parameter (ascending powers).
"""

from __future__ import annotations

import json
from pathlib import Path

from ..exactcore import RationalFunction, ScalarField, parse_rational, render_rational
from .spectral import CurveValidationError, Mobius, SpectralCurve

_FIELD_KINDS = {"s", "q0", "w", "theta"}


def _field(doc: dict) -> ScalarField:
    parameter = doc.get("parameter")
    theta = doc.get("theta")
    if parameter in (None, "", "none"):
        if theta is None:
            raise ValueError("numeric curve document needs theta")
        return ScalarField.numeric(parse_rational(theta), doc.get("q0"))
    if parameter not in _FIELD_KINDS:
        raise ValueError(f"unknown parameter {parameter!r}")
    if parameter in ("s", "q0"):
        if theta is None:
            raise ValueError(f"parameter {parameter} needs a numeric theta")
        return ScalarField(parameter, parse_rational(theta))
    return ScalarField(parameter)


def _coefficient(entry, parameter) -> RationalFunction:
    if isinstance(entry, list):
        if parameter is None:
            raise ValueError("parameter-dependent coefficient in a numeric curve")
        return RationalFunction.from_coefficients([parse_rational(c) for c in entry], parameter)
    return RationalFunction.constant_of(parse_rational(entry))


def _poly(entries, parameter) -> RationalFunction:
    if not isinstance(entries, list) or not entries:
        raise ValueError("coefficient array must be a nonempty list")
    return RationalFunction.from_coefficients([_coefficient(e, parameter) for e in entries], "z")


def _ratfunc(obj, parameter) -> RationalFunction:
    num = _poly(obj["num"], parameter)
    den = _poly(obj.get("den", ["1"]), parameter)
    if den.is_zero():
        raise ValueError("zero denominator in curve document")
    return num / den


def curve_from_document(doc: dict) -> SpectralCurve:
    F = _field(doc)
    p = F.parameter
    x = _ratfunc(doc["x"], p)
    y = _ratfunc(doc["y"], p)
    inv = doc["involution"]
    mob = Mobius(*(_coefficient(inv[k], p) for k in "abcd"))
    curve = SpectralCurve(
        name=str(doc.get("name", "custom")),
        field=F,
        x=x,
        y=y,
        involution=mob,
        report_substitution=str(doc.get("report_substitution", "")),
    )
    failures = []
    try:
        curve.branch_points = curve.computed_branch_points()
    except ValueError as exc:
        failures.append(f"branch points of dx/dz = {curve.dx}: {exc}")
    try:
        curve.punctures = curve.computed_punctures()
    except ValueError as exc:
        failures.append(f"poles of x(z) = {x}: {exc}")
    failures += curve.check()
    if failures:
        raise CurveValidationError(failures)
    return curve


def load_curve(path) -> SpectralCurve:
    with open(Path(path), encoding="utf-8") as fh:
        doc = json.load(fh)
    return curve_from_document(doc)


def _encode_coefficient(c: RationalFunction, parameter):
    if c.is_constant():
        return render_rational(c.constant())
    if not c.is_polynomial() or parameter is None:
        raise ValueError(f"cannot encode coefficient {c}")
    return [render_rational(k.constant()) for k in c.coefficients(parameter)]


def _encode_poly(f: RationalFunction, parameter) -> list:
    return [_encode_coefficient(c, parameter) for c in f.coefficients("z")]


def _encode(f: RationalFunction, parameter) -> dict:
    return {"num": _encode_poly(f.numerator(), parameter), "den": _encode_poly(f.denominator(), parameter)}


def curve_to_document(curve: SpectralCurve) -> dict:
    p = curve.field.parameter
    doc = {
        "name": curve.name,
        "parameter": p,
        "theta": None if p in ("w", "theta") else render_rational(curve.field.theta.constant()),
        "x": _encode(curve.x, p),
        "y": _encode(curve.y, p),
        "involution": {k: _encode_coefficient(getattr(curve.involution, k), p) for k in "abcd"},
        "report_substitution": curve.report_substitution,
    }
    if p is None and curve.field.q0 is not None:
        doc["q0"] = render_rational(curve.field.q0.constant())
    return doc


def dump_curve(curve: SpectralCurve, path) -> None:
    Path(path).write_text(json.dumps(curve_to_document(curve), indent=2) + "\n", encoding="utf-8")


def same_curve(a: SpectralCurve, b: SpectralCurve) -> bool:
    return (
        a.x == b.x and a.y == b.y
        and a.involution.as_function() == b.involution.as_function()
        and sorted(map(str, a.branch_points)) == sorted(map(str, b.branch_points))
        and a.field.theta == b.field.theta
    )
