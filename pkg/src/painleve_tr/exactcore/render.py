"""Canonical text for exact values: ``p/q`` rationals, ``(num)/(den)`` rational functions."""

from __future__ import annotations

from fractions import Fraction

from .ratfunc import VARIABLES


def render_rational(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render_poly(poly) -> str:
    terms = list(poly.to_dict().items())
    if not terms:
        return "0"
    # descending total degree, then descending exponents in variable order
    terms.sort(key=lambda t: (sum(t[0]), t[0]), reverse=True)
    out = []
    for exps, c in terms:
        c = Fraction(int(c.p), int(c.q))
        mono = "*".join(
            VARIABLES[i] if e == 1 else f"{VARIABLES[i]}^{e}"
            for i, e in enumerate(exps) if e
        )
        if not mono:
            body = render_rational(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{render_rational(abs(c))}*{mono}"
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += sign + body
    return text


def render(f) -> str:
    """Bit-stable text of a rational function (no whitespace)."""
    if f.den.is_one():
        if f.num.is_constant():
            return render_rational(f.constant())
        return _render_poly(f.num)
    return f"({_render_poly(f.num)})/({_render_poly(f.den)})"
