"""How far each quotient rule's first guess lands from the final digit.

For every digit selection over N in [100, LIMIT) the script tallies the number
of corrections each rule needs and how often a coarse rule has to fall back to
the exact search because its divisor vanishes.

    python scripts/rule_effort.py [LIMIT]
"""

import sys
from collections import Counter

from fibsqrt.digitmethod import DigitRule, root_with_audits


def main(limit: int) -> None:
    print(f"digit selections for N in [100, {limit})")
    print(f"{'rule':<12} {'selections':>10} {'fallbacks':>9}  corrections (count)")
    for rule in DigitRule:
        if not rule.is_quotient:
            continue
        moves: Counter[int] = Counter()
        fallbacks = selections = 0
        for n in range(100, limit):
            for audit in root_with_audits(n, rule)[1]:
                selections += 1
                if audit.fallback:
                    fallbacks += 1
                else:
                    moves[audit.adjustments] += 1
        spread = ", ".join(f"{k:+d}: {v}" for k, v in sorted(moves.items()))
        print(f"{rule.value:<12} {selections:>10} {fallbacks:>9}  {spread}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 100_000)
