"""Exact natural-number and rational arithmetic used throughout the package.

Python integers are already unbounded, and :class:`fractions.Fraction` keeps
every value in lowest terms with the sign on the numerator, so both are used
directly. This module adds the decimal decomposition, the hundreds partition
of a radicand and an independent floor-square-root oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

Rational = Fraction

__all__ = [
    "Digits",
    "Partition",
    "Rational",
    "RootResult",
    "digits_of",
    "from_digits",
    "partition",
    "isqrt_oracle",
    "rational_arith",
    "mixed",
    "unit_fraction_sum",
]


@dataclass(frozen=True)
class Digits:
    """Base-10 digits, least significant first."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("a digit sequence needs at least one digit")
        if any(not 0 <= d <= 9 for d in self.values):
            raise ValueError(f"digits must lie in 0..9: {self.values}")
        if len(self.values) > 1 and self.values[-1] == 0:
            raise ValueError("most significant digit must be nonzero")

    @property
    def length(self) -> int:
        return len(self.values)

    @property
    def value(self) -> int:
        return from_digits(self.values)

    def __getitem__(self, power: int) -> int:
        """Digit at ``10**power``; zero beyond the top."""
        return self.values[power] if 0 <= power < len(self.values) else 0

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Partition:
    """``N = head * 100 + tens * 10 + ones``."""

    head: int
    tens: int
    ones: int

    @property
    def value(self) -> int:
        return self.head * 100 + self.tens * 10 + self.ones


@dataclass(frozen=True)
class RootResult:
    radicand: int
    root: int
    remainder: int

    def __post_init__(self) -> None:
        n, a, r = self.radicand, self.root, self.remainder
        if n < 0 or a < 0:
            raise ValueError("radicand and root must be natural numbers")
        if r != n - a * a:
            raise ValueError(f"remainder {r} != {n} - {a}^2")
        if not 0 <= r <= 2 * a:
            raise ValueError(f"{a} is not the floor square root of {n}")


def _check_natural(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"negative radicand {n}")


def digits_of(n: int) -> Digits:
    _check_natural(n)
    out = []
    while True:
        n, d = divmod(n, 10)
        out.append(d)
        if n == 0:
            return Digits(tuple(out))


def from_digits(values) -> int:
    """Positional value of least-significant-first digits."""
    total = 0
    for d in reversed(tuple(values)):
        total = total * 10 + d
    return total


def partition(n: int) -> Partition:
    _check_natural(n)
    head, low = divmod(n, 100)
    return Partition(head, low // 10, low % 10)


def isqrt_oracle(n: int) -> RootResult:
    """Floor square root by bisection on ``[0, n + 1)``.

    Kept deliberately unrelated to the digit method it is used to check.
    """
    _check_natural(n)
    lo, hi = 0, n + 1  # lo*lo <= n < hi*hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid * mid <= n:
            lo = mid
        else:
            hi = mid
    return RootResult(n, lo, n - lo * lo)


Op = Literal["add", "sub", "mul", "div"]


def rational_arith(lhs: Fraction, rhs: Fraction, kind: Op) -> Fraction:
    """Exact ``lhs <kind> rhs``; ``div`` by zero raises ZeroDivisionError."""
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    if kind == "div":
        if rhs == 0:
            raise ZeroDivisionError("rational division by zero")
        return lhs / rhs
    raise ValueError(f"unknown operation {kind!r}")


def mixed(q: Fraction, fibonacci_order: bool = False) -> str:
    """Mixed-number text, ``27 7/27``; fraction first when ``fibonacci_order``."""
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q.numerator, q.denominator)
    if frac == 0:
        return f"{sign}{whole}"
    part = f"{frac}/{q.denominator}"
    if whole == 0:
        return f"{sign}{part}"
    if fibonacci_order:
        return f"{sign}{part} {whole}"
    return f"{sign}{whole} {part}"


def unit_fraction_sum(q: Fraction) -> str:
    """Whole part followed by a greedy unit-fraction expansion.

    ``85 + 21/400`` prints as ``85 1/20 1/400``.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError("only nonnegative values have a unit-fraction form")
    whole, frac = divmod(q.numerator, q.denominator)
    parts = [str(whole)]
    rest = Fraction(frac, q.denominator)
    while rest:
        unit = Fraction(1, -(-rest.denominator // rest.numerator))
        parts.append(f"1/{unit.denominator}")
        rest -= unit
    return " ".join(parts)
