"""The calculation board: a sparse place-value grid of digits.

Rows above the radicand hold the running residuals, stacked per column in the
order they were written. Below it sit the root (written twice in the Liber
Abaci editions) and, in De Practica Geometrie, the doubled root. The final
remainder is an annotation in the upper right corner.

Boards render to plain text. A grid token is ``d``, ``d_s`` (digit with its
step subscript), ``*d*`` (a radicand digit) or ``(r`` / ``(r_s`` for the
remainder. Every column is as wide as its widest token, tokens are right
aligned and columns are separated by one space.
"""

from __future__ import annotations

import difflib
import enum
from dataclasses import dataclass, replace

from .digitmethod import Band, Cell, CellFlag, TableauStyle, Trace, isqrt_fibonacci
from .exactnum import digits_of, from_digits

__all__ = [
    "Discrepancy",
    "DiscrepancyKind",
    "RadicandMismatch",
    "RenderedBoard",
    "Tableau",
    "TableauStyle",
    "build_tableau",
    "diff_tableau",
    "manuscript_view",
    "parse_board",
    "render_text",
    "snapshots",
    "visible_view",
]


@dataclass(frozen=True)
class Tableau:
    radicand: int
    style: TableauStyle
    cells: tuple[Cell, ...]

    def __post_init__(self) -> None:
        spelled = {c.column: c.digit for c in self.band(Band.RADICAND)}
        if [spelled.get(i) for i in range(len(spelled))] != list(digits_of(self.radicand).values):
            raise ValueError("radicand band does not spell the radicand")
        seen = set()
        for c in self.cells:
            if c.band is Band.RADICAND and c.step != 0:
                raise ValueError("radicand digits belong to step 0")
            key = (c.column, c.band, c.step)
            if key in seen and c.band is not Band.REMAINDER:
                raise ValueError(f"two cells share column, band and step: {key}")
            seen.add(key)

    def band(self, band: Band) -> list[Cell]:
        return [c for c in self.cells if c.band is band]

    @property
    def root(self) -> int:
        digits = {c.column: c.digit for c in self.band(Band.ROOT)}
        return from_digits(digits.get(i, 0) for i in range(max(digits, default=-1) + 1))

    @property
    def remainder(self) -> int | None:
        cells = self.band(Band.REMAINDER)
        if not cells:
            return None
        return sum(c.digit * 10**c.column for c in cells)

    @property
    def last_step(self) -> int:
        return max(c.step for c in self.cells)

    @property
    def root_written_twice(self) -> bool:
        return self.style.liber_abaci and not self.band(Band.DOUBLED_ROOT)


def _mark_overwritten(cells) -> tuple[Cell, ...]:
    cells = list(cells)
    newest: dict[int, int] = {}
    for c in cells:
        if c.band is Band.DOUBLED_ROOT:
            newest[c.column] = max(newest.get(c.column, -1), c.step)
    out = []
    for c in cells:
        if c.band is Band.DOUBLED_ROOT:
            flag = CellFlag.OVERWRITTEN if c.step < newest[c.column] else CellFlag.NORMAL
            c = c._replace(flag=flag)
        out.append(c)
    return tuple(sorted(out, key=_cell_order))


def _cell_order(c: Cell):
    return (c.step, list(Band).index(c.band), -c.column)


def _radicand_cells(n: int) -> list[Cell]:
    return [Cell(i, Band.RADICAND, d, 0) for i, d in enumerate(digits_of(n).values)]


def build_tableau(trace: Trace, style: TableauStyle | None = None) -> Tableau:
    """Project a trace onto a board in the given style (default: the trace's)."""
    style = trace.style if style is None else TableauStyle(style)
    if style is not trace.style:
        _, trace = isqrt_fibonacci(trace.radicand, trace.rule, style, trace.evolve)
    cells = _radicand_cells(trace.radicand)
    for event in trace.events:
        residual = [c for c in event.cells if c.band is Band.RESIDUAL]
        if style is TableauStyle.LA1202 and len(residual) > 1:
            # the first edition writes a multi-digit value in its lowest column
            low = min(c.column for c in residual)
            value = sum(c.digit * 10 ** (c.column - low) for c in residual)
            flag = CellFlag.INSERTED if all(c.flag is CellFlag.INSERTED for c in residual) else CellFlag.NORMAL
            residual = [Cell(low, Band.RESIDUAL, value, event.step, flag)]
        cells.extend(residual)
        cells.extend(c for c in event.cells if c.band is not Band.RESIDUAL)
    return Tableau(trace.radicand, style, _mark_overwritten(cells))


def snapshots(tableau: Tableau) -> list[Tableau]:
    """The board after each step, from the bare radicand to the final state."""
    return [
        replace(tableau, cells=_mark_overwritten(c for c in tableau.cells if c.step <= i))
        for i in range(tableau.last_step + 1)
    ]


def visible_view(tableau: Tableau) -> Tableau:
    """The board without erased doubled-root cells."""
    return replace(tableau, cells=tuple(c for c in tableau.cells if c.flag is not CellFlag.OVERWRITTEN))


def manuscript_view(tableau: Tableau) -> Tableau:
    """The board without the digits marked as insertions."""
    return replace(tableau, cells=tuple(c for c in tableau.cells if c.flag is not CellFlag.INSERTED))


@dataclass(frozen=True)
class RenderedBoard:
    lines: tuple[str, ...]

    @property
    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)

    def __str__(self) -> str:
        return self.text


def _token(c: Cell, show_steps: bool) -> str:
    return f"{c.digit}_{c.step}" if show_steps else str(c.digit)


def _stack(cells: list[Cell], compress: bool) -> list[Cell]:
    cells = sorted(cells, key=lambda c: c.step)
    if not compress:
        return cells
    out: list[Cell] = []
    for c in cells:
        if not out or out[-1].digit != c.digit:
            out.append(c)
    return out


def _doubled_rows(cells: list[Cell]) -> list[dict[int, Cell]]:
    """Group doubled-root cells into rows; a rewrite that reuses a column opens a new row."""
    rows: list[dict[int, Cell]] = []
    by_step: dict[int, list[Cell]] = {}
    for c in sorted(cells, key=lambda c: c.step):
        by_step.setdefault(c.step, []).append(c)
    for group in by_step.values():
        if not rows or any(c.column in rows[-1] for c in group):
            rows.append({})
        rows[-1].update({c.column: c for c in group})
    return rows


def render_text(tableau: Tableau, show_steps: bool = True, show_overwritten: bool | None = None) -> RenderedBoard:
    """Fixed-width text board.

    Without step subscripts equal consecutive residual digits in a column are
    compressed and overwritten doubled-root rows are dropped.
    """
    if show_overwritten is None:
        show_overwritten = show_steps
    width = max(c.column for c in tableau.cells) + 1
    columns = list(range(width - 1, -1, -1))

    grid_rows: list[dict[int, str]] = []
    annotation: list[str] = []

    remainder = tableau.band(Band.REMAINDER)
    if remainder:
        value = from_digits(c.digit for c in sorted(remainder, key=lambda c: c.column))
        step = remainder[0].step
        grid_rows.append({})
        annotation.append(f"({value}_{step}" if show_steps else f"({value}")

    stacks = {}
    for col in columns:
        stacks[col] = _stack([c for c in tableau.band(Band.RESIDUAL) if c.column == col], not show_steps)
    height = max((len(s) for s in stacks.values()), default=0)
    for level in range(height - 1, -1, -1):
        grid_rows.append({col: _token(s[level], show_steps) for col, s in stacks.items() if len(s) > level})
        annotation.append("")

    grid_rows.append({c.column: f"*{c.digit}*" for c in tableau.band(Band.RADICAND)})
    annotation.append("")

    root_row = {c.column: _token(c, show_steps) for c in tableau.band(Band.ROOT)}
    for _ in range(2 if tableau.root_written_twice else 1):
        grid_rows.append(dict(root_row))
        annotation.append("")

    doubled = tableau.band(Band.DOUBLED_ROOT)
    if not show_overwritten:
        doubled = [c for c in doubled if c.flag is not CellFlag.OVERWRITTEN]
    for row in _doubled_rows(doubled):
        grid_rows.append({col: _token(c, show_steps) for col, c in row.items()})
        annotation.append("")

    widths = {col: max(len(r.get(col, "")) for r in grid_rows) for col in columns}
    lines = []
    for row, note in zip(grid_rows, annotation):
        fields = [row.get(col, "").rjust(widths[col]) for col in columns]
        if remainder:
            fields.append(note)
        lines.append(" ".join(fields).rstrip())
    return RenderedBoard(tuple(lines))


def _parse_token(token: str) -> tuple[int, int | None]:
    digit, _, step = token.partition("_")
    return int(digit), int(step) if step else None


def parse_board(text: str, style: TableauStyle) -> Tableau:
    """Read a rendered board back into cells.

    Flags are not recoverable from text; every parsed cell is ``NORMAL``.
    Tokens without a subscript get synthetic steps in top-to-bottom order.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    rad_index = next(i for i, line in enumerate(lines) if line.split() and all(
        t.startswith("*") and t.endswith("*") for t in line.split()))
    rad_line = lines[rad_index]
    ends = [i for i, ch in enumerate(rad_line) if ch == "*" and i > 0 and rad_line[i - 1].isdigit()]
    spans, start = [], 0
    for end in ends:
        spans.append((start, end + 1))
        start = end + 2
    width = len(spans)

    def fields(line: str) -> list[str]:
        return [line[a:b].strip() for a, b in spans]

    cells: list[Cell] = []
    radicand_digits = [int(t.strip("*")) for t in fields(rad_line)]
    radicand = from_digits(reversed(radicand_digits))
    cells += _radicand_cells(radicand)

    synthetic = iter(range(1, 10**6))
    above = lines[:rad_index]
    if above and not any(fields(above[0])):
        token = above[0][start:].strip()
        value, step = _parse_token(token.lstrip("("))
        step = step if step is not None else next(synthetic)
        cells += [Cell(i, Band.REMAINDER, d, step) for i, d in enumerate(digits_of(value).values)]
        above = above[1:]
    for line in reversed(above):
        for pos, token in enumerate(fields(line)):
            if token:
                digit, step = _parse_token(token)
                cells.append(Cell(width - 1 - pos, Band.RESIDUAL, digit, step if step is not None else next(synthetic)))

    below = [fields(line) for line in lines[rad_index + 1:]]
    if below:
        root_tokens = below[0]
        for pos, token in enumerate(root_tokens):
            if token:
                digit, step = _parse_token(token)
                cells.append(Cell(width - 1 - pos, Band.ROOT, digit, step if step is not None else next(synthetic)))
        rest = below[1:]
        if style.liber_abaci and rest and rest[0] == root_tokens:
            rest = rest[1:]
        for row in rest:
            for pos, token in enumerate(row):
                if token:
                    digit, step = _parse_token(token)
                    cells.append(
                        Cell(width - 1 - pos, Band.DOUBLED_ROOT, digit, step if step is not None else next(synthetic))
                    )
    return Tableau(radicand, style, _mark_overwritten(cells))


class RadicandMismatch(ValueError):
    pass


class DiscrepancyKind(str, enum.Enum):
    MISSING_CELL = "MissingCell"
    EXTRA_CELL = "ExtraCell"
    COLUMN_SHIFT = "ColumnShift"
    DIGIT_MISMATCH = "DigitMismatch"


@dataclass(frozen=True)
class Discrepancy:
    kind: DiscrepancyKind
    band: Band
    column: int | None = None
    digit: int | None = None
    expected: int | None = None
    delta: int | None = None

    def __str__(self) -> str:
        if self.kind is DiscrepancyKind.COLUMN_SHIFT:
            return f"ColumnShift({self.delta:+d}) in {self.band.value}"
        where = f"(10^{self.column}, {self.band.value}"
        if self.kind is DiscrepancyKind.DIGIT_MISMATCH:
            return f"DigitMismatch at {where}): expected {self.expected}, found {self.digit}"
        return f"{self.kind.value} at {where}, {self.digit})"


_DIFF_BANDS = (Band.RESIDUAL, Band.ROOT, Band.DOUBLED_ROOT, Band.REMAINDER)


def _columns(cells: list[Cell], shift: int = 0) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for c in sorted(cells, key=lambda c: c.step):
        out.setdefault(c.column + shift, []).append(c.digit)
    return out


def diff_tableau(actual: Tableau, expected: Tableau) -> list[Discrepancy]:
    """Cell-level differences, ignoring step numbers and flags.

    A band whose cells all sit ``delta`` columns away from the expected ones is
    reported as a single column shift.
    """
    if actual.radicand != expected.radicand:
        raise RadicandMismatch(f"radicands differ: {actual.radicand} vs {expected.radicand}")
    out: list[Discrepancy] = []
    for band in _DIFF_BANDS:
        got, want = _columns(actual.band(band)), _columns(expected.band(band))
        if got == want:
            continue
        span = max([0, *got, *want]) + 1
        shift = next((d for d in range(-span, span + 1) if d and _columns(expected.band(band), d) == got), None)
        if shift is not None:
            out.append(Discrepancy(DiscrepancyKind.COLUMN_SHIFT, band, delta=shift))
            continue
        for col in sorted(set(got) | set(want), reverse=True):
            a, e = got.get(col, []), want.get(col, [])
            for op, i1, i2, j1, j2 in difflib.SequenceMatcher(None, e, a, autojunk=False).get_opcodes():
                if op == "equal":
                    continue
                paired = min(i2 - i1, j2 - j1) if op == "replace" else 0
                for k in range(paired):
                    out.append(Discrepancy(DiscrepancyKind.DIGIT_MISMATCH, band, col, a[j1 + k], e[i1 + k]))
                for k in range(i1 + paired, i2):
                    out.append(Discrepancy(DiscrepancyKind.MISSING_CELL, band, col, e[k]))
                for k in range(j1 + paired, j2):
                    out.append(Discrepancy(DiscrepancyKind.EXTRA_CELL, band, col, a[k]))
    return out
