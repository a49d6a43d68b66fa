"""Regenerate src/fibsqrt/_boards.py from the current renderer.

Fixtures hold the board as visible at each step: erased doubled-root rows
hidden, step subscripts shown. Run this only after checking the new renders
against the manuscript figures by hand, since the tests treat the frozen text
as ground truth.
"""

from pathlib import Path

from fibsqrt.digitmethod import DigitRule, TableauStyle, isqrt_fibonacci
from fibsqrt.tableau import build_tableau, render_text, snapshots

# name, radicand, rule, style, evolve, snapshot steps (None = final)
BOARDS = [
    ("LA_743", 743, DigitRule.EXACT_SMALLEST, TableauStyle.LA1228, False, [2, None]),
    ("LA_8754", 8754, DigitRule.EXACT_SMALLEST, TableauStyle.LA1228, False, [None]),
    ("LA_12345", 12345, DigitRule.EXACT_SMALLEST, TableauStyle.LA1228, False, [None]),
    ("LA_927435", 927435, DigitRule.EXACT_SMALLEST, TableauStyle.LA1228, False, [None]),
    ("LA_72340000", 72340000, DigitRule.EXACT_SMALLEST, TableauStyle.LA1228, True, [7, 13, None]),
    ("DPG_864", 864, DigitRule.QUOTIENT_TENS, TableauStyle.PG, False, [None]),
]

ROOT = Path(__file__).resolve().parents[1]
TARGET = ROOT / "src" / "fibsqrt" / "_boards.py"
COMPLETE = ROOT / "tests" / "fixtures" / "la_72340000_complete.txt"


def main() -> None:
    out = ['"""Frozen board renders, keyed by snapshot step. Generated by scripts/freeze_boards.py."""', ""]
    for name, n, rule, style, evolve, steps in BOARDS:
        stages = snapshots(build_tableau(isqrt_fibonacci(n, rule, style, evolve)[1]))
        out.append(f"{name} = {{")
        for step in steps:
            step = len(stages) - 1 if step is None else step
            out.append(f"    {step}: (")
            for line in render_text(stages[step], show_overwritten=False).lines:
                out.append(f"        {line + chr(10)!r}")
            out.append("    ),")
        out.append("}")
        out.append("")
    TARGET.write_text("\n".join(out), encoding="utf-8")
    print(f"wrote {TARGET}")
    complete = build_tableau(isqrt_fibonacci(72340000, DigitRule.EXACT_SMALLEST, TableauStyle.LA1228, True)[1])
    COMPLETE.write_text(render_text(complete).text, encoding="utf-8")
    print(f"wrote {COMPLETE}")


if __name__ == "__main__":
    main()
