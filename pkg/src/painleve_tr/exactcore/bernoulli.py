"""Bernoulli numbers from the binomial recurrence."""

from __future__ import annotations

from fractions import Fraction
from math import comb

_TABLE: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def _extend(m: int) -> None:
    for n in range(len(_TABLE), m + 1):
        # sum_{j=0}^{n} C(n+1, j) B_j = 0
        acc = sum((comb(n + 1, j) * _TABLE[j] for j in range(n)), Fraction(0))
        _TABLE.append(-acc / (n + 1))


def bernoulli(m: int) -> Fraction:
    """B_m for even m >= 2 (B_2 = 1/6, B_4 = -1/30, ...)."""
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError("bernoulli index must be an integer")
    if m < 2 or m % 2:
        raise ValueError(f"bernoulli({m}): index must be even and at least 2")
    _extend(m)
    return _TABLE[m]


def bernoulli_free_energy(g: int, theta) -> Fraction:
    """``B_2g / (2g (2g-2) theta^(2g-2))`` for numeric theta."""
    if g < 2:
        raise ValueError("defined here for g >= 2")
    theta = Fraction(theta)
    return bernoulli(2 * g) / (2 * g * (2 * g - 2) * theta ** (2 * g - 2))
