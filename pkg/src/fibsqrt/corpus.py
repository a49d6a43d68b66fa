"""The sixteen worked square roots of Liber Abaci (LA) and De Practica Geometrie (DPG).

Every entry carries the root and remainder stated in the manuscript. Some also
carry the fractional approximation Fibonacci derived and frozen text renders of
the board. Fraction checks sit in a separate table because the root of 10 is
worked out without a board.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import _boards
from .digitmethod import DigitRule, TableauStyle, isqrt_fibonacci, scale_and_root
from .refine import refine_sequence, round_unit_fraction
from .tableau import build_tableau, diff_tableau, manuscript_view, parse_board, render_text, snapshots, visible_view

__all__ = [
    "CorpusEntry",
    "ENTRIES",
    "FRACTIONS",
    "FractionCase",
    "by_id",
    "check_entry",
    "check_fraction",
    "diff_entry",
    "export_lines",
    "render_stages",
    "run_corpus",
]


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    source: str  # "LA" or "DPG"
    radicand: int
    expected_root: int
    expected_remainder: int
    figure_ref: str
    expected_fraction: Fraction | None = None
    worked_rule: DigitRule = DigitRule.EXACT_LARGEST  # rule the worked text follows
    evolve: bool = False
    # snapshot step -> rendered board (with step subscripts)
    expected_boards: dict[int, str] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.expected_root**2 + self.expected_remainder != self.radicand:
            raise ValueError(f"{self.id}: root and remainder do not rebuild the radicand")

    @property
    def style(self) -> TableauStyle:
        return TableauStyle.LA1228 if self.source == "LA" else TableauStyle.PG


@dataclass(frozen=True)
class FractionCase:
    id: str
    radicand: int
    expected: tuple[Fraction, ...]
    pairs: int | None = None  # scaled computation when set, refinement steps otherwise


_LA = "Liber Abaci, ch. 14"
_DPG = "De Practica Geometrie, ch. 2"
F = Fraction

ENTRIES: tuple[CorpusEntry, ...] = (
    CorpusEntry("la-743", "LA", 743, 27, 14, f"{_LA}: root of 743", 27 + F(7, 27),
                DigitRule.EXACT_SMALLEST, expected_boards=_boards.LA_743),
    CorpusEntry("la-8754", "LA", 8754, 93, 105, f"{_LA}: root of 8754", 93 + F(35, 62),
                DigitRule.EXACT_SMALLEST, expected_boards=_boards.LA_8754),
    CorpusEntry("la-12345", "LA", 12345, 111, 24, f"{_LA}: root of 12345", 111 + F(4, 37),
                DigitRule.EXACT_SMALLEST, expected_boards=_boards.LA_12345),
    CorpusEntry("la-927435", "LA", 927435, 963, 66, f"{_LA}: root of 927435", 963 + F(11, 321),
                DigitRule.EXACT_SMALLEST, expected_boards=_boards.LA_927435),
    CorpusEntry("la-72340000", "LA", 72340000, 8505, 4975, f"{_LA}: root of 7234 by another method",
                85 + F(1, 20) + F(1, 400), DigitRule.EXACT_SMALLEST, evolve=True,
                expected_boards=_boards.LA_72340000),
    CorpusEntry("dpg-153", "DPG", 153, 12, 9, f"{_DPG}: root of 153"),
    CorpusEntry("dpg-864", "DPG", 864, 29, 23, f"{_DPG}: root of 864", worked_rule=DigitRule.QUOTIENT_TENS,
                expected_boards=_boards.DPG_864),
    CorpusEntry("dpg-960", "DPG", 960, 30, 60, f"{_DPG}: root of 960", worked_rule=DigitRule.EXACT_SMALLEST),
    CorpusEntry("dpg-1234", "DPG", 1234, 35, 9, f"{_DPG}: root of 1234", worked_rule=DigitRule.QUOTIENT_TENS),
    CorpusEntry("dpg-6142", "DPG", 6142, 78, 58, f"{_DPG}: root of 6142"),
    CorpusEntry("dpg-8172", "DPG", 8172, 90, 72, f"{_DPG}: root of 8172"),
    CorpusEntry("dpg-12345", "DPG", 12345, 111, 24, f"{_DPG}: root of 12345"),
    CorpusEntry("dpg-98765", "DPG", 98765, 314, 169, f"{_DPG}: root of 98765", worked_rule=DigitRule.QUOTIENT_COARSE),
    CorpusEntry("dpg-123456", "DPG", 123456, 351, 255, f"{_DPG}: root of 123456",
                worked_rule=DigitRule.QUOTIENT_COARSE),
    CorpusEntry("dpg-987654", "DPG", 987654, 993, 1605, f"{_DPG}: root of 987654", worked_rule=DigitRule.QUOTIENT_FULL),
    CorpusEntry("dpg-9876543", "DPG", 9876543, 3142, 4379, f"{_DPG}: root of 9876543",
                worked_rule=DigitRule.QUOTIENT_COARSEST),
)

FRACTIONS: tuple[FractionCase, ...] = (
    FractionCase("frac-10", 10, (3 + F(1, 6), 3 + F(1, 6) - F(1, 228))),
    FractionCase("frac-743", 743, (27 + F(7, 27),)),
    FractionCase("frac-8754", 8754, (93 + F(35, 62),)),
    FractionCase("frac-12345", 12345, (111 + F(4, 37),)),
    FractionCase("frac-927435", 927435, (
        963 + F(11, 321),
        963 + F(11, 321) - F(11, 321) ** 2 / (2 * (963 + F(11, 321))),
    )),
    FractionCase("frac-7234", 7234, (85 + F(1, 20) + F(1, 400),), pairs=2),
)


def by_id(entry_id: str) -> CorpusEntry:
    for entry in ENTRIES:
        if entry.id == entry_id:
            return entry
    raise KeyError(entry_id)


def compute_fractions(case: FractionCase) -> tuple[Fraction, ...]:
    if case.pairs is not None:
        return (scale_and_root(case.radicand, case.pairs)[1],)
    return tuple(s.approx for s in refine_sequence(case.radicand, count=len(case.expected)))


def render_stages(entry: CorpusEntry, rule: DigitRule | None = None) -> dict[int, str]:
    """Boards as visible at the snapshot steps the entry keeps fixtures for."""
    _, trace = isqrt_fibonacci(entry.radicand, rule or entry.worked_rule, entry.style, entry.evolve)
    stages = snapshots(build_tableau(trace))
    steps = entry.expected_boards or {len(stages) - 1: ""}
    return {step: render_text(stages[step], show_overwritten=False).text for step in steps}


def _fraction_text(q: Fraction | None) -> str:
    return "" if q is None else f"{q.numerator}/{q.denominator}"


def export_lines(entries=ENTRIES) -> list[str]:
    """One ``id|source|radicand|root|remainder|fraction|figure_ref`` record per entry."""
    return [
        "|".join((e.id, e.source, str(e.radicand), str(e.expected_root), str(e.expected_remainder),
                  _fraction_text(e.expected_fraction), e.figure_ref))
        for e in entries
    ]


def entry_fraction(entry: CorpusEntry, root: int, remainder: int) -> Fraction:
    """Fraction the manuscript derives from a computed root and remainder."""
    if entry.evolve:
        # radicand was scaled by 100**2; correction rounded to a unit fraction
        return (root + round_unit_fraction(remainder, 2 * root)) / 100
    return root + Fraction(remainder, 2 * root)


def check_entry(entry: CorpusEntry) -> tuple[bool, str]:
    """Every digit rule must reproduce the stated root, remainder and fraction."""
    problems = []
    for rule in DigitRule:
        result, _ = isqrt_fibonacci(entry.radicand, rule, entry.style, entry.evolve)
        if (result.root, result.remainder) != (entry.expected_root, entry.expected_remainder):
            problems.append(f"{rule.value} gives root {result.root} remainder {result.remainder}")
    if entry.expected_fraction is not None:
        got = entry_fraction(entry, entry.expected_root, entry.expected_remainder)
        if got != entry.expected_fraction:
            problems.append(f"fraction {got} != {entry.expected_fraction}")
    head = f"{entry.id} root {entry.expected_root} remainder {entry.expected_remainder}"
    return not problems, head if not problems else f"{head}: {'; '.join(problems)}"


def check_fraction(case: FractionCase) -> tuple[bool, str]:
    got = compute_fractions(case)
    text = ", ".join(str(q) for q in got)
    if got == case.expected:
        return True, f"{case.id} {text}"
    return False, f"{case.id} got {text}, expected {', '.join(str(q) for q in case.expected)}"


def run_corpus(entries=None, fractions=None) -> tuple[list[str], int]:
    """Report lines (one per entry and fraction case) and the failure count."""
    entries = ENTRIES if entries is None else entries
    fractions = FRACTIONS if fractions is None else fractions
    lines, failures = [], 0
    for ok, text in [check_entry(e) for e in entries] + [check_fraction(c) for c in fractions]:
        failures += not ok
        lines.append(("PASS " if ok else "FAIL ") + text)
    return lines, failures


def diff_entry(entry: CorpusEntry) -> tuple[bool, list[str]]:
    """Compare the entry's boards with their fixtures and list inserted digits.

    Inserted digits are digits the method needs but the manuscript leaves out;
    they are informational and never fail the comparison.
    """
    _, trace = isqrt_fibonacci(entry.radicand, entry.worked_rule, entry.style, entry.evolve)
    stages = snapshots(build_tableau(trace))
    ok, lines = True, []
    for step, fixture in sorted(entry.expected_boards.items()):
        actual = visible_view(stages[step])
        text = render_text(actual).text
        found = diff_tableau(actual, parse_board(fixture, entry.style))
        if text == fixture and not found:
            lines.append(f"MATCH {entry.id} step {step}")
            continue
        ok = False
        lines.append(f"DIFF {entry.id} step {step}")
        lines.extend(f"  {d}" for d in found)
        if not found:
            lines.append("  layout differs (same cells)")
    for d in diff_tableau(manuscript_view(stages[-1]), stages[-1]):
        lines.append(f"  inserted, absent from manuscript: {d}")
    return ok, lines
