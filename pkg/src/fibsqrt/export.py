"""JSON form of a trace, stable enough to diff and to parse back."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .digitmethod import Band, Cell, CellFlag, DigitRule, TableauStyle, Trace, TraceEvent

__all__ = ["TraceExport"]


@dataclass(frozen=True)
class TraceExport:
    radicand: int
    rule: DigitRule
    style: TableauStyle
    events: tuple[TraceEvent, ...]
    root: int
    remainder: int

    @classmethod
    def from_trace(cls, trace: Trace) -> "TraceExport":
        return cls(trace.radicand, trace.rule, trace.style, trace.events, trace.result.root, trace.result.remainder)

    def to_dict(self) -> dict:
        return {
            "radicand": self.radicand,
            "rule": self.rule.value,
            "style": self.style.value,
            "events": [
                {
                    "step": e.step,
                    "label": e.label,
                    "cells": [
                        {"column": c.column, "band": c.band.value, "digit": c.digit, "flag": c.flag.value}
                        for c in e.cells
                    ],
                    "note": e.note,
                }
                for e in self.events
            ],
            "result": {"root": self.root, "remainder": self.remainder},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "TraceExport":
        events = tuple(
            TraceEvent(
                e["step"],
                e["label"],
                tuple(
                    Cell(c["column"], Band(c["band"]), c["digit"], e["step"], CellFlag(c["flag"]))
                    for c in e["cells"]
                ),
                e["note"],
            )
            for e in data["events"]
        )
        result = data["result"]
        return cls(data["radicand"], DigitRule(data["rule"]), TableauStyle(data["style"]), events,
                   result["root"], result["remainder"])

    @classmethod
    def from_json(cls, text: str) -> "TraceExport":
        return cls.from_dict(json.loads(text))
