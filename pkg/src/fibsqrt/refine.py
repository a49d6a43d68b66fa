"""Fractional part of a square root from its integer part.

Starting from ``a`` with residual ``r = N - a*a`` the first correction gives
``a1 = a + r/(2a)``. Its residual is minus the square of that correction, so
the next approximation ``a2 = a1 - (r/(2a))**2 / (2*a1)`` needs no new
squaring of ``a1``. The iterates coincide with Heron's and Newton's.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .digitmethod import root_with_audits

__all__ = [
    "RefinementStep",
    "StartChoice",
    "heron_step",
    "newton_step",
    "refine_once",
    "refine_second",
    "refine_sequence",
    "round_unit_fraction",
    "start_value",
]


class StartChoice(str, enum.Enum):
    FLOOR = "floor"
    CEIL = "ceil"


@dataclass(frozen=True)
class RefinementStep:
    approx: Fraction
    residual: Fraction  # N - approx**2
    correction: Fraction  # signed amount added to the previous approximation


def refine_once(a: int, r: int, n: int) -> RefinementStep:
    if a == 0:
        raise ValueError("cannot refine from a zero approximation")
    if r != n - a * a:
        raise ValueError(f"residual {r} does not match {n} - {a}^2")
    correction = Fraction(r, 2 * a)
    return RefinementStep(a + correction, -(correction**2), correction)


def refine_second(a1: Fraction, n: int) -> RefinementStep:
    a1 = Fraction(a1)
    excess = a1 * a1 - n
    if a1 <= 0 or excess < 0:
        raise ValueError("the second refinement needs a positive overestimate")
    correction = -excess / (2 * a1)
    return RefinementStep(a1 + correction, -(correction**2), correction)


def heron_step(x: Fraction, n: int) -> Fraction:
    x = Fraction(x)
    if x <= 0:
        raise ValueError("Heron's step needs a positive iterate")
    return (x + n / x) / 2


def newton_step(x: Fraction, n: int) -> Fraction:
    """One Newton step on ``p(x) = x**2 - n``."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("Newton's step needs a positive iterate")
    p = x * x - n
    dp = 2 * x
    return x - p / dp


def round_unit_fraction(r: int, d: int) -> Fraction:
    """Round ``r/d`` down to the unit fraction ``1/ceil(d/r)``."""
    if d < 1:
        raise ValueError("denominator must be positive")
    if r < 0:
        raise ValueError("numerator must be nonnegative")
    if r == 0:
        return Fraction(0)
    return Fraction(1, -(-d // r))


def start_value(n: int, start: StartChoice = StartChoice.FLOOR) -> int:
    root = root_with_audits(n)[0].root
    return root if start is StartChoice.FLOOR else root + 1


def refine_sequence(n: int, start: StartChoice = StartChoice.FLOOR, count: int = 1) -> list[RefinementStep]:
    if n < 1:
        raise ValueError("refinement needs a positive radicand")
    if count < 1:
        raise ValueError("count must be at least 1")
    a = start_value(n, start)
    steps = [refine_once(a, n - a * a, n)]
    while len(steps) < count:
        steps.append(refine_second(steps[-1].approx, n))
    return steps
