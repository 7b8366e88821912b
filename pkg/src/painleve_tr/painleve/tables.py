"""Reference closed forms in q0 and theta, used for table comparisons.

All expressions are rational functions in the variables ``q0`` and ``theta``;
evaluate them in a concrete field with ``ScalarField.from_q0``.
"""

from __future__ import annotations

from ..exactcore import RationalFunction, var

q0 = var("q0")
th = var("theta")
_turn = 4 * q0 ** 3 + th


def sigma_reference(k: int) -> RationalFunction:
    """sigma_2k for k = 0..3."""
    if k == 0:
        return th * (8 * q0 ** 3 - th) / (8 * q0 ** 2)
    if k == 1:
        return -th * q0 / (8 * _turn ** 2)
    if k == 2:
        return -3 * th * q0 ** 4 * (560 * q0 ** 6 - 184 * th * q0 ** 3 + 3 * th ** 2) / (32 * _turn ** 7)
    if k == 3:
        poly = (
            3203200 * q0 ** 12 - 3668064 * th * q0 ** 9 + 838632 * th ** 2 * q0 ** 6
            - 39482 * th ** 3 * q0 ** 3 + 189 * th ** 4
        )
        return -th * q0 ** 7 * poly / (32 * _turn ** 12)
    raise ValueError("closed forms exist for k = 0..3")


def tau_reference(k: int) -> RationalFunction:
    """Rational part of tau_2k for k = 2, 3 (defined up to an additive constant)."""
    if k == 2:
        return th * (700 * q0 ** 6 - 85 * th * q0 ** 3 - 2 * th ** 2) / (480 * _turn ** 5)
    if k == 3:
        poly = (
            6726720 * q0 ** 15 - 5017712 * th * q0 ** 12 + 541132 * th ** 2 * q0 ** 9
            - 1089 * th ** 3 * q0 ** 6 + 160 * th ** 4 * q0 ** 3 + 4 * th ** 5
        )
        return th * poly / (4032 * _turn ** 10)
    raise ValueError("closed forms exist for k = 2, 3")


def fg_jm_reference(g: int) -> RationalFunction:
    if g == 2:
        poly = (
            2048 * q0 ** 12 + 2560 * th * q0 ** 9 + 1280 * th ** 2 * q0 ** 6
            + 1020 * th ** 3 * q0 ** 3 - 45 * th ** 4
        )
        return poly * q0 ** 3 / (480 * th ** 2 * _turn ** 5)
    if g == 3:
        poly = (
            4194304 * q0 ** 24 + 10485760 * th * q0 ** 21 + 11796480 * th ** 2 * q0 ** 18
            + 7864320 * th ** 3 * q0 ** 15 + 3440640 * th ** 4 * q0 ** 12
            - 5694528 * th ** 5 * q0 ** 9 + 5232752 * th ** 6 * q0 ** 6
            - 510412 * th ** 7 * q0 ** 3 + 3969 * th ** 8
        )
        return -q0 ** 6 * poly / (4032 * th ** 4 * _turn ** 10)
    raise ValueError("closed forms exist for g = 2, 3")


def fg_htw_reference(g: int) -> RationalFunction:
    if g == 2:
        return th * (700 * q0 ** 6 - 85 * th * q0 ** 3 - 2 * th ** 2) / (480 * _turn ** 5)
    if g == 3:
        poly = (
            6726720 * q0 ** 15 - 5017712 * th * q0 ** 12 + 541132 * th ** 2 * q0 ** 9
            - 1089 * th ** 3 * q0 ** 6 + 160 * th ** 4 * q0 ** 3 + 4 * th ** 5
        )
        return th * poly / (4032 * _turn ** 10)
    raise ValueError("closed forms exist for g = 2, 3")


def fg_bessel_reference(g: int) -> RationalFunction:
    if g == 2:
        return -1 / (240 * th ** 2)
    if g == 3:
        return 1 / (1008 * th ** 4)
    raise ValueError("closed forms exist for g = 2, 3")
