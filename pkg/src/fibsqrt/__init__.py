"""Fibonacci's digit-by-digit square roots, their refinements and board renders."""

from .digitmethod import DigitRule, TableauStyle, isqrt_fibonacci, root_with_audits, scale_and_root
from .exactnum import Rational, RootResult, isqrt_oracle
from .refine import refine_once, refine_second, refine_sequence, round_unit_fraction
from .tableau import build_tableau, diff_tableau, parse_board, render_text, snapshots

__all__ = [
    "DigitRule",
    "Rational",
    "RootResult",
    "TableauStyle",
    "build_tableau",
    "diff_tableau",
    "isqrt_fibonacci",
    "isqrt_oracle",
    "parse_board",
    "refine_once",
    "refine_second",
    "refine_sequence",
    "render_text",
    "root_with_audits",
    "round_unit_fraction",
    "scale_and_root",
    "snapshots",
]
