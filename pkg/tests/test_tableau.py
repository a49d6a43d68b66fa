from pathlib import Path

import pytest
from figures import FIGURES, figure_board, transcribed_cells
from hypothesis import given, settings
from hypothesis import strategies as st

from fibsqrt.digitmethod import Band, Cell, CellFlag, DigitRule, TableauStyle, isqrt_fibonacci
from fibsqrt.exactnum import isqrt_oracle
from fibsqrt.tableau import (
    DiscrepancyKind,
    RadicandMismatch,
    Tableau,
    build_tableau,
    diff_tableau,
    manuscript_view,
    parse_board,
    render_text,
    snapshots,
)

FIXTURES = Path(__file__).parent / "fixtures"
LA, PG = TableauStyle.LA1228, TableauStyle.PG
RES, ROOT, DBL = Band.RESIDUAL, Band.ROOT, Band.DOUBLED_ROOT


def _board(n, rule, style, evolve, step):
    stages = snapshots(build_tableau(isqrt_fibonacci(n, rule, style, evolve)[1]))
    return stages[-1 if step is None else step]


@pytest.mark.parametrize("name", list(FIGURES))
def test_board_matches_transcribed_figure(name):
    board, remainder = figure_board(name)
    assert transcribed_cells(board) == FIGURES[name][5]
    assert remainder == FIGURES[name][6]


def test_inserted_three_is_flagged():
    board = _board(72340000, DigitRule.EXACT_SMALLEST, LA, True, None)
    inserted = [c for c in board.cells if c.flag is CellFlag.INSERTED]
    assert inserted == [Cell(5, RES, 3, 6, CellFlag.INSERTED)]


def test_erased_doubled_rows_are_flagged_overwritten():
    board = _board(72340000, DigitRule.EXACT_SMALLEST, LA, True, None)
    erased = {(c.column, c.step) for c in board.band(DBL) if c.flag is CellFlag.OVERWRITTEN}
    assert erased == {(4, 3), (3, 3), (4, 8), (3, 8), (2, 8), (1, 10)}


def test_complete_illustration_golden_file():
    board = _board(72340000, DigitRule.EXACT_SMALLEST, LA, True, None)
    assert render_text(board).text == (FIXTURES / "la_72340000_complete.txt").read_text(encoding="utf-8")


def test_editions_differ_only_in_the_split_residual():
    _, trace = isqrt_fibonacci(8754, DigitRule.EXACT_SMALLEST, TableauStyle.LA1228)
    old, new = build_tableau(trace, TableauStyle.LA1202), build_tableau(trace)
    only_old = set(old.cells) - set(new.cells)
    only_new = set(new.cells) - set(old.cells)
    assert only_old == {Cell(1, RES, 11, 4)}
    assert only_new == {Cell(2, RES, 1, 4), Cell(1, RES, 1, 4)}
    assert render_text(old).lines[1] == "    6_2 11_4"


def test_zero_radicand_board():
    for style in TableauStyle:
        board = build_tableau(isqrt_fibonacci(0, style=style)[1])
        assert [c.digit for c in board.band(Band.RADICAND)] == [0]
        assert (board.root, board.remainder) == (0, 0)


def test_snapshot_counts():
    assert len(snapshots(build_tableau(isqrt_fibonacci(864, DigitRule.QUOTIENT_TENS)[1]))) == 7
    assert len(snapshots(build_tableau(isqrt_fibonacci(4)[1]))) == 2
    stages = snapshots(build_tableau(isqrt_fibonacci(12345, DigitRule.EXACT_SMALLEST, LA)[1]))
    assert len(stages) == 6
    assert [s.last_step for s in stages] == list(range(6))


def test_8172_leaves_residuals_untouched():
    board = build_tableau(isqrt_fibonacci(8172)[1])
    assert [c.digit for c in sorted(board.band(ROOT), key=lambda c: -c.column)] == [9, 0]
    assert board.band(RES) == []
    assert board.remainder == 72


def test_no_remainder_column_before_the_last_step():
    board = _board(743, DigitRule.EXACT_SMALLEST, LA, False, 2)
    assert render_text(board).lines[0] == "3_2"


def test_la_root_written_twice():
    board = build_tableau(isqrt_fibonacci(743, style=LA)[1])
    assert board.root_written_twice
    lines = render_text(board).lines
    assert lines[-1] == lines[-2] == "    2_1 7_3"


def test_plain_render_compresses_and_hides_erased_rows():
    board = _board(72340000, DigitRule.EXACT_SMALLEST, LA, True, None)
    plain = render_text(board, show_steps=False).text
    assert "_" not in plain
    assert plain.count("\n") == 6  # annotation, two residual rows, radicand, root, one doubled row
    assert plain.splitlines()[-1].split() == ["1", "7", "0", "1", "0"]


def test_render_is_deterministic():
    board = build_tableau(isqrt_fibonacci(987654)[1])
    assert render_text(board).text == render_text(board).text


def test_tableau_validation():
    with pytest.raises(ValueError):
        Tableau(12, PG, (Cell(0, Band.RADICAND, 2, 0),))
    with pytest.raises(ValueError):
        Tableau(2, PG, (Cell(0, Band.RADICAND, 2, 1),))


def test_diff_of_identical_boards_is_empty():
    board = build_tableau(isqrt_fibonacci(864)[1])
    assert diff_tableau(board, board) == []


def test_diff_reports_the_inserted_digit():
    board = _board(72340000, DigitRule.EXACT_SMALLEST, LA, True, None)
    found = diff_tableau(manuscript_view(board), board)
    assert [(d.kind, d.band, d.column, d.digit) for d in found] == [(DiscrepancyKind.MISSING_CELL, RES, 5, 3)]
    assert str(found[0]) == "MissingCell at (10^5, residual, 3)"


def test_diff_detects_a_transposed_residual_band():
    board = build_tableau(isqrt_fibonacci(927435, DigitRule.EXACT_SMALLEST, LA)[1])
    shifted = Tableau(board.radicand, board.style, tuple(
        c._replace(column=c.column + 1) if c.band is RES else c for c in board.cells
    ))
    found = diff_tableau(shifted, board)
    assert [(d.kind, d.band, d.delta) for d in found] == [(DiscrepancyKind.COLUMN_SHIFT, RES, 1)]
    assert str(found[0]) == "ColumnShift(+1) in residual"


def test_diff_reports_digit_and_extra_cells():
    board = build_tableau(isqrt_fibonacci(864)[1])
    changed = Tableau(864, PG, tuple(
        c._replace(digit=8) if (c.band, c.step) == (ROOT, 4) else c for c in board.cells
    ) + (Cell(0, RES, 7, 9),))
    kinds = sorted(d.kind.value for d in diff_tableau(changed, board))
    assert kinds == ["DigitMismatch", "ExtraCell"]


def test_diff_requires_same_radicand():
    with pytest.raises(RadicandMismatch):
        diff_tableau(build_tableau(isqrt_fibonacci(864)[1]), build_tableau(isqrt_fibonacci(865)[1]))


@pytest.mark.parametrize("n, style, evolve", [
    (864, PG, False), (743, LA, False), (8754, TableauStyle.LA1202, False), (72340000, LA, True), (9876543, PG, False),
])
def test_parse_recovers_rendered_cells(n, style, evolve):
    board = build_tableau(isqrt_fibonacci(n, DigitRule.EXACT_SMALLEST, style, evolve)[1])
    parsed = parse_board(render_text(board).text, style)
    assert diff_tableau(parsed, board) == []
    assert {(c.band, c.column, c.digit, c.step) for c in parsed.cells} == {
        (c.band, c.column, c.digit, c.step) for c in board.cells
    }


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=0, max_value=10**14), st.sampled_from(list(TableauStyle)), st.booleans())
def test_board_properties(n, style, evolve):
    board = build_tableau(isqrt_fibonacci(n, DigitRule.EXACT_LARGEST, style, evolve)[1])
    oracle = isqrt_oracle(n)
    assert (board.root, board.remainder) == (oracle.root, oracle.remainder)
    stages = snapshots(board)
    for before, after in zip(stages, stages[1:]):
        assert {c[:4] for c in before.cells} <= {c[:4] for c in after.cells}
    assert diff_tableau(parse_board(render_text(board).text, style), board) == []


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10**12))
def test_styles_share_the_root_band(n):
    _, trace = isqrt_fibonacci(n)
    roots = [{(c.column, c.digit) for c in build_tableau(trace, s).band(ROOT)} for s in TableauStyle]
    assert roots[0] == roots[1] == roots[2]
