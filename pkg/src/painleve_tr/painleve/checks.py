"""Comparisons of computed sigma coefficients against the reference closed forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..exactcore import RationalFunction, ScalarField, derive
from .expansion import expand_qp, sigma_series
from .tables import sigma_reference, tau_reference


@dataclass
class Comparison:
    name: str
    lhs: RationalFunction
    rhs: RationalFunction

    @property
    def ok(self) -> bool:
        return (self.lhs - self.rhs).is_zero()

    @property
    def first_diff(self) -> Optional[str]:
        return None if self.ok else str(self.lhs - self.rhs)


def sigma_table(theta, kmax: int = 3) -> list[Comparison]:
    """sigma_0 .. sigma_2kmax from the Hamiltonian route against the closed forms."""
    F = ScalarField.symbolic_q0(theta)
    sig = sigma_series(expand_qp(F, 2 * kmax), "jm")
    return [Comparison(f"sigma_{2 * k}", sig.coefficient(k), F.from_q0(sigma_reference(k))) for k in range(kmax + 1)]


def check_tau_derivative(k: int, theta) -> Comparison:
    """D_t tau_2k (closed form) against -sigma_2k (closed form), k in {2, 3}."""
    if k not in (2, 3):
        raise ValueError("k must be 2 or 3")
    F = ScalarField.symbolic_q0(theta)
    lhs = derive(F.dt, F.from_q0(tau_reference(k)))
    return Comparison(f"d/dt tau_{2 * k} = -sigma_{2 * k}", lhs, -F.from_q0(sigma_reference(k)))
