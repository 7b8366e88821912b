"""Derivations of the scalar field: d/dt acting through the free parameter."""

from __future__ import annotations

from dataclasses import dataclass

from .ratfunc import PARAMETERS, RationalFunction, _coerce


@dataclass(frozen=True)
class Derivation:
    """``D f = (df/d parameter) * image``; other variables (z, x, ...) are held fixed."""

    name: str
    parameter: str
    image: RationalFunction

    def __call__(self, f):
        return derive(self, f)


def derive(d: Derivation, f) -> RationalFunction:
    f = _coerce(f)
    if f is NotImplemented:
        raise TypeError("derive expects a rational function or a rational number")
    stray = (f.variables() & set(PARAMETERS)) - {d.parameter}
    if stray:
        raise ValueError(
            f"derivation {d.name} acts through {d.parameter!r}, "
            f"but the argument depends on {sorted(stray)}"
        )
    if f.is_constant():
        return RationalFunction()
    return f.derivative(d.parameter) * d.image
