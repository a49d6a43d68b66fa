"""Fibonacci's digit-by-digit integer square root.

The root of ``N = n*100 + b1*10 + b0`` is obtained from the root ``a`` of the
head ``n`` and its residual ``r = n - a*a``: only the last digit ``d`` has to
be found, and it is characterised by

    bound1(d) = r*100 + b1*10 + b0 - 20*a*d - d*d >= 0        (largest such d)
    bound1(d) <= 2*(10*a + d)                                 (smallest such d)

Quotient rules guess ``d`` from a truncated division and then adjust the guess
until both inequalities hold.

Besides the root, :func:`isqrt_fibonacci` records a :class:`Trace`: every digit
written on the calculation board, with the step number it was written in.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .exactnum import RootResult, digits_of

__all__ = [
    "Band",
    "Cell",
    "CellFlag",
    "DigitAudit",
    "DigitRule",
    "Fallback",
    "PartialRoot",
    "TableauStyle",
    "Trace",
    "TraceEvent",
    "bound1_value",
    "bound2_holds",
    "first_digit",
    "isqrt_fibonacci",
    "last_digit",
    "quotient_estimate",
    "root_with_audits",
    "scale_and_root",
]


class DigitRule(str, enum.Enum):
    EXACT_LARGEST = "exact-largest"
    EXACT_SMALLEST = "exact-smallest"
    QUOTIENT_FULL = "q-full"
    QUOTIENT_TENS = "q-tens"
    QUOTIENT_COARSE = "q-coarse"
    QUOTIENT_COARSEST = "q-coarsest"

    @property
    def is_quotient(self) -> bool:
        return self.value.startswith("q-")


class TableauStyle(str, enum.Enum):
    """Board conventions of the two Liber Abaci editions and De Practica Geometrie."""

    LA1202 = "la1202"
    LA1228 = "la1228"
    PG = "pg"

    @property
    def liber_abaci(self) -> bool:
        return self is not TableauStyle.PG


class Band(str, enum.Enum):
    RESIDUAL = "residual"
    RADICAND = "radicand"
    ROOT = "root"
    DOUBLED_ROOT = "doubled-root"
    REMAINDER = "remainder"


class CellFlag(str, enum.Enum):
    NORMAL = "normal"
    INSERTED = "inserted"
    OVERWRITTEN = "overwritten"


class Cell(NamedTuple):
    """One digit on the board; ``column`` is its power of ten."""

    column: int
    band: Band
    digit: int
    step: int
    flag: CellFlag = CellFlag.NORMAL


class TraceEvent(NamedTuple):
    step: int
    label: str
    cells: tuple[Cell, ...]
    note: str


@dataclass(frozen=True)
class DigitAudit:
    """How the last digit was reached: raw estimate, corrections, bound values."""

    chosen: int
    estimate: int | None
    adjustments: int
    bound1_value: int
    bound2_slack: int
    fallback: bool = False
    inputs: tuple[int, int, int, int] = (0, 0, 0, 0)  # partial root, residual, tens, ones


@dataclass(frozen=True)
class PartialRoot:
    root_so_far: int
    residual: int
    depth: int


@dataclass(frozen=True)
class Trace:
    radicand: int
    rule: DigitRule
    style: TableauStyle
    evolve: bool
    events: tuple[TraceEvent, ...]
    result: RootResult
    audits: tuple[DigitAudit, ...] = field(default=(), compare=False)

    def cells(self) -> list[Cell]:
        return [c for e in self.events for c in e.cells]


class Fallback(Exception):
    """A coarse quotient rule has a zero divisor for this partial root."""


def first_digit(leading: int) -> int:
    """Largest digit whose square does not exceed a leading group in 1..99."""
    if not 1 <= leading <= 99:
        raise ValueError(f"leading group must be in 1..99, got {leading}")
    d = 9
    while d * d > leading:
        d -= 1
    return d


def bound1_value(a: int, r: int, b1: int, b0: int, d: int) -> int:
    return r * 100 + b1 * 10 + b0 - 20 * a * d - d * d


def bound2_holds(a: int, r: int, b1: int, b0: int, d: int) -> bool:
    return bound1_value(a, r, b1, b0, d) <= 2 * (10 * a + d)


def quotient_estimate(a: int, r: int, b1: int, b0: int, rule: DigitRule) -> int:
    if a < 1:
        raise ValueError("quotient estimates need a partial root of at least 1")
    if rule is DigitRule.QUOTIENT_FULL:
        return (r * 100 + b1 * 10 + b0) // (20 * a)
    if rule is DigitRule.QUOTIENT_TENS:
        return (r * 10 + b1) // (2 * a)
    if rule is DigitRule.QUOTIENT_COARSE:
        div = 2 * a // 10
        if div == 0:
            raise Fallback(rule)
        return r // div
    if rule is DigitRule.QUOTIENT_COARSEST:
        div = 2 * a // 100
        if div == 0:
            raise Fallback(rule)
        return (r // 10) // div
    raise ValueError(f"{rule} is not a quotient rule")


def _audit(a, r, b1, b0, d, estimate, adjustments, fallback=False) -> DigitAudit:
    value = bound1_value(a, r, b1, b0, d)
    return DigitAudit(d, estimate, adjustments, value, 2 * (10 * a + d) - value, fallback, (a, r, b1, b0))


def last_digit(
    a: int, r: int, b1: int, b0: int, rule: DigitRule = DigitRule.EXACT_LARGEST
) -> tuple[int, DigitAudit]:
    if a < 1:
        raise ValueError("the head of the radicand must have a nonzero root")
    if not 0 <= r <= 2 * a:
        raise ValueError(f"residual {r} is outside 0..{2 * a}")

    if rule is DigitRule.EXACT_LARGEST:
        d = 9
        while bound1_value(a, r, b1, b0, d) < 0:
            d -= 1
        return d, _audit(a, r, b1, b0, d, None, 0)

    fallback = False
    if rule.is_quotient:
        try:
            estimate = quotient_estimate(a, r, b1, b0, rule)
        except Fallback:
            fallback = True
    if rule is DigitRule.EXACT_SMALLEST or fallback:
        d = 0
        while not bound2_holds(a, r, b1, b0, d):
            d += 1
        return d, _audit(a, r, b1, b0, d, None, 0, fallback)

    d = min(estimate, 9)
    adjustments = 0
    while bound1_value(a, r, b1, b0, d) < 0:
        d -= 1
        adjustments -= 1
    while not bound2_holds(a, r, b1, b0, d):
        d += 1
        adjustments += 1
    return d, _audit(a, r, b1, b0, d, estimate, adjustments)


def root_with_audits(n: int, rule: DigitRule = DigitRule.EXACT_LARGEST) -> tuple[RootResult, list[DigitAudit]]:
    """Recursive root of ``n`` together with one audit per digit selection."""
    audits: list[DigitAudit] = []
    partial = _partial_root(n, rule, audits)
    return RootResult(n, partial.root_so_far, partial.residual), audits


def _partial_root(n: int, rule: DigitRule, audits: list[DigitAudit]) -> PartialRoot:
    if n < 100:
        d = first_digit(n) if n else 0
        return PartialRoot(d, n - d * d, 1)
    head, low = divmod(n, 100)
    inner = _partial_root(head, rule, audits)
    d, audit = last_digit(inner.root_so_far, inner.residual, low // 10, low % 10, rule)
    audits.append(audit)
    return PartialRoot(10 * inner.root_so_far + d, audit.bound1_value, inner.depth + 1)


class _Board:
    """Accumulates trace events and remembers what is visible in each column.

    Cell helpers stamp the step of the event about to be emitted.
    """

    def __init__(self, n: int):
        self.n = n
        self.radicand = _low_first(n)
        self.events: list[TraceEvent] = []
        self.step = 1
        self.visible = dict(enumerate(self.radicand))
        self.doubled: tuple[int, int] | None = None  # (value, lowest column)

    def emit(self, cells: list[Cell], note: str) -> None:
        step = self.step
        self.events.append(TraceEvent(step, f"L:{step}", tuple(cells), note))
        self.step = step + 1

    def cell(self, column: int, band: Band, digit: int) -> list[Cell]:
        return [Cell(column, band, digit, self.step)]

    def spread(self, value: int, lowest: int, band: Band) -> list[Cell]:
        step = self.step
        return [Cell(lowest + i, band, d, step) for i, d in enumerate(_low_first(value))]

    def residual(self, value: int, lowest: int) -> list[Cell]:
        # A lone digit equal to what its column already shows is not written by
        # hand (the column is reused); it is kept but marked as an insertion.
        values = _low_first(value)
        step, visible = self.step, self.visible
        if len(values) == 1:
            flag = CellFlag.INSERTED if visible.get(lowest) == values[0] else CellFlag.NORMAL
            visible[lowest] = values[0]
            return [Cell(lowest, Band.RESIDUAL, values[0], step, flag)]
        out = []
        for i, d in enumerate(values):
            visible[lowest + i] = d
            out.append(Cell(lowest + i, Band.RESIDUAL, d, step))
        return out

    def remainder(self, value: int) -> list[Cell]:
        return self.spread(value, 0, Band.REMAINDER)

    def double(self, root: int, lowest: int) -> list[Cell]:
        value = 2 * root
        previous = self.doubled
        self.doubled = (value, lowest)
        if previous and previous[1] == lowest + 1 and value // 10 == previous[0]:
            return self.cell(lowest, Band.DOUBLED_ROOT, value % 10)
        return self.spread(value, lowest, Band.DOUBLED_ROOT)


def _low_first(value: int) -> list[int]:
    return list(map(int, str(value)[::-1]))


def _doubled_digits(value: int, lowest: int) -> list[tuple[int, int]]:
    """``(column, digit)`` pairs of a doubled root, most significant first."""
    return [(lowest + i, d) for i, d in reversed(list(enumerate(_low_first(value))))]


def isqrt_fibonacci(
    n: int,
    rule: DigitRule = DigitRule.EXACT_LARGEST,
    style: TableauStyle = TableauStyle.PG,
    evolve: bool = False,
) -> tuple[RootResult, Trace]:
    """Integer square root with a board trace.

    By default the root of the head ``n // 100`` is written in one step and only
    the last digit is worked out on the board. With ``evolve`` every digit is
    developed on the board in turn, keeping a doubled-root row that is rewritten
    as the root grows.
    """
    result, audits = root_with_audits(n, rule)
    board = _Board(n)
    if n < 100:
        _trace_single(board, result)
    elif evolve:
        _trace_evolve(board, rule)
    else:
        _trace_recursive(board, style, result, audits[-1])
    trace = Trace(n, rule, style, evolve, tuple(board.events), result, tuple(audits))
    return result, trace


def _trace_single(board: _Board, result: RootResult) -> None:
    board.emit(
        board.spread(result.root, 0, Band.ROOT) + board.remainder(result.remainder),
        f"{result.root} is the root of {result.radicand}, {result.remainder} remains",
    )


def _trace_recursive(board: _Board, style: TableauStyle, result: RootResult, audit: DigitAudit) -> None:
    n = board.n
    head, low = divmod(n, 100)
    a = result.root // 10
    r = head - a * a
    board.emit(board.spread(a, 1, Band.ROOT), f"root of {head} is {a}")
    if r:
        board.emit(board.residual(r, 2), f"{head} - {a}^2 = {r} (in hundreds)")
    doubled = 2 * a
    if not style.liber_abaci:
        board.emit(board.double(a, 1), f"2*{a} = {doubled} (in tens)")

    d = audit.chosen
    how = f"estimate {audit.estimate}, " if audit.estimate is not None else ""
    board.emit(board.cell(0, Band.ROOT, d), f"{how}last digit {d}")

    m = n - a * a * 100
    if style.liber_abaci:
        if d:
            before = m // 10
            m -= doubled * d * 10
            if m // 10:
                board.emit(board.residual(m // 10, 1), f"{before} - {doubled}*{d} = {m // 10} (in tens)")
    else:
        for col, digit in _doubled_digits(doubled, 1):
            if d * digit == 0:
                continue
            before = m // 10**col
            m -= d * digit * 10**col
            if m // 10**col:
                board.emit(
                    board.residual(m // 10**col, col),
                    f"{before} - {digit}*{d} = {m // 10**col}",
                )
    before = m
    m -= d * d
    board.emit(board.remainder(m), f"{before} - {d}^2 = {m}")


def _trace_evolve(board: _Board, rule: DigitRule) -> None:
    n = board.n
    radicand = digits_of(n)
    k = (len(radicand) + 1) // 2
    p = k - 1
    top = n // 100**p
    a = first_digit(top)
    board.emit(board.cell(p, Band.ROOT, a), f"root of {top} is {a}")
    m = n - a * a * 100**p
    if top - a * a:
        board.emit(board.residual(top - a * a, 2 * p), f"{top} - {a}^2 = {top - a * a}")
    board.emit(board.double(a, p), f"2*{a} = {2 * a}")

    for p in range(k - 2, -1, -1):
        prefix = n // 100 ** (p + 1)
        d, audit = last_digit(a, prefix - a * a, radicand[2 * p + 1], radicand[2 * p], rule)
        board.emit(board.cell(p, Band.ROOT, d), f"next digit {d}")
        doubled, lowest = board.doubled
        for col, digit in _doubled_digits(doubled, lowest):
            if d * digit == 0:
                continue
            place = p + col
            before = m // 10**place
            m -= d * digit * 10**place
            if m // 10**place:
                board.emit(board.residual(m // 10**place, place), f"{before} - {digit}*{d} = {m // 10**place}")
        before = m // 100**p
        m -= d * d * 100**p
        cells = []
        if d and m // 100**p:
            cells = board.residual(m // 100**p, 2 * p)
        if p == 0:
            cells += board.remainder(m)
        if cells:
            board.emit(cells, f"{before} - {d}^2 = {m // 100**p}")
        a = 10 * a + d
        board.emit(board.double(a, p), f"2*{a} = {2 * a}")


def scale_and_root(n: int, pairs: int) -> tuple[RootResult, Fraction]:
    """Root of ``n * 100**pairs`` and the approximation of sqrt(n) it yields.

    With ``pairs == 0`` the exact correction ``remainder / (2 * root)`` is added;
    otherwise the correction is rounded to a unit fraction before dividing by
    ``10**pairs``.
    """
    from .refine import round_unit_fraction

    if pairs < 0:
        raise ValueError("pairs must be nonnegative")
    result, _ = root_with_audits(n * 100**pairs)
    if result.root == 0:
        return result, Fraction(0)
    if pairs == 0:
        correction = Fraction(result.remainder, 2 * result.root)
    else:
        correction = round_unit_fraction(result.remainder, 2 * result.root)
    return result, (result.root + correction) / 10**pairs
