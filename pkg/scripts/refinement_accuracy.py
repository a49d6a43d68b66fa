"""Correct decimal digits gained by each refinement step, for both starts.

    python scripts/refinement_accuracy.py [N ...]
"""

import sys
from decimal import Decimal, getcontext
from fractions import Fraction

from fibsqrt.refine import StartChoice, refine_sequence

getcontext().prec = 200


def correct_digits(q: Fraction, n: int) -> float:
    err = abs(Decimal(q.numerator) / Decimal(q.denominator) - Decimal(n).sqrt())
    return float("inf") if err == 0 else float(-err.log10())


def main(values: list[int]) -> None:
    print(f"{'N':>9} {'start':>5}  correct digits after steps 1..4")
    for n in values:
        for start in StartChoice:
            steps = refine_sequence(n, start, 4)
            digits = "  ".join(f"{correct_digits(s.approx, n):6.1f}" for s in steps)
            print(f"{n:>9} {start.value:>5}  {digits}")


if __name__ == "__main__":
    main([int(a) for a in sys.argv[1:]] or [10, 743, 8754, 12345, 927435, 7234])
