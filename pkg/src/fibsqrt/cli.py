"""Command line: ``fibsqrt {isqrt,refine,compare,corpus,scale}``.

Exit codes: 0 success, 1 a check or internal invariant failed, 2 bad usage.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import corpus
from .digitmethod import DigitRule, TableauStyle, isqrt_fibonacci, scale_and_root
from .exactnum import isqrt_oracle, mixed, unit_fraction_sum
from .export import TraceExport
from .refine import StartChoice, heron_step, newton_step, refine_sequence
from .tableau import build_tableau, render_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def natural(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return int(text)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fibsqrt", description="Fibonacci's square-root method, step by step.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("isqrt", help="integer square root with remainder")
    s.add_argument("n", type=natural)
    s.add_argument("--rule", type=DigitRule, choices=list(DigitRule), default=DigitRule.EXACT_LARGEST,
                   metavar="{" + ",".join(r.value for r in DigitRule) + "}")
    s.add_argument("--style", type=TableauStyle, choices=list(TableauStyle), default=TableauStyle.PG,
                   metavar="{" + ",".join(t.value for t in TableauStyle) + "}")
    s.add_argument("--evolve", action="store_true", help="develop every digit on the board")
    s.add_argument("--trace", action="store_true", help="print the final board")
    s.add_argument("--plain", action="store_true", help="board without step subscripts")
    s.add_argument("--json", action="store_true", help="print the trace as JSON")

    s = sub.add_parser("refine", help="fractional refinements of the root")
    s.add_argument("n", type=natural)
    s.add_argument("--steps", type=int, default=1)
    s.add_argument("--start", type=StartChoice, choices=list(StartChoice), default=StartChoice.FLOOR,
                   metavar="{floor,ceil}")
    s.add_argument("--fibonacci-order", action="store_true", help="write the fraction before the integer")

    s = sub.add_parser("compare", help="refinements next to Heron's and Newton's iterates")
    s.add_argument("n", type=natural)
    s.add_argument("--steps", type=int, default=2)

    s = sub.add_parser("corpus", help="the worked examples of the manuscripts")
    s.add_argument("action", nargs="?", choices=("run", "list", "diff"), default="run")
    s.add_argument("--id", help="restrict diff to one entry")
    s.add_argument("--export-corpus", type=Path, metavar="FILE", help="write the corpus as pipe-separated text")

    s = sub.add_parser("scale", help="root of N * 100**pairs and the fraction it gives")
    s.add_argument("n", type=natural)
    s.add_argument("--pairs", type=int, default=2)
    return p


def cmd_isqrt(args) -> int:
    result, trace = isqrt_fibonacci(args.n, args.rule, args.style, args.evolve)
    oracle = isqrt_oracle(args.n)
    if (result.root, result.remainder) != (oracle.root, oracle.remainder):
        print(f"internal error: digit method gives {result.root}, oracle {oracle.root}", file=sys.stderr)
        return EXIT_FAIL
    if args.json:
        sys.stdout.write(TraceExport.from_trace(trace).to_json())
        return EXIT_OK
    print(f"root {result.root} remainder {result.remainder}")
    if args.trace:
        sys.stdout.write(render_text(build_tableau(trace), show_steps=not args.plain).text)
    return EXIT_OK


def cmd_refine(args) -> int:
    if args.n == 0 or args.steps < 1:
        print("refine needs N >= 1 and at least one step", file=sys.stderr)
        return EXIT_USAGE
    oracle = isqrt_oracle(args.n)
    if oracle.remainder == 0 and args.start is StartChoice.FLOOR:
        print(f"{oracle.root} (exact)")
        return EXIT_OK
    show = lambda q: mixed(q, args.fibonacci_order)  # noqa: E731
    previous = None
    for i, step in enumerate(refine_sequence(args.n, args.start, args.steps), 1):
        if previous is None:
            shown = show(step.approx)
        else:
            sign = "+" if step.correction >= 0 else "-"
            shown = f"{show(previous)} {sign} {show(abs(step.correction))}"
        print(f"{i}: {shown} = {step.approx}  residual {step.residual}")
        previous = step.approx
    return EXIT_OK


def cmd_compare(args) -> int:
    if args.n < 2 or args.steps < 1:
        print("compare needs N >= 2 and at least one step", file=sys.stderr)
        return EXIT_USAGE
    fib = [s.approx for s in refine_sequence(args.n, count=args.steps)]
    heron, newton = [], []
    x = y = Fraction(isqrt_oracle(args.n).root)
    for _ in range(args.steps):
        x, y = heron_step(x, args.n), newton_step(y, args.n)
        heron.append(x)
        newton.append(y)
    print("step  fibonacci  heron  newton")
    for i, row in enumerate(zip(fib, heron, newton), 1):
        print(f"{i}  " + "  ".join(str(q) for q in row))
    equal = fib == heron == newton
    print("EQUAL" if equal else "DIFFERENT")
    return EXIT_OK if equal else EXIT_FAIL


def cmd_corpus(args) -> int:
    if args.export_corpus is not None:
        with open(args.export_corpus, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("".join(line + "\n" for line in corpus.export_lines()))
        print(f"wrote {args.export_corpus}")
        return EXIT_OK
    if args.action == "list":
        for line in corpus.export_lines():
            print(line)
        return EXIT_OK
    if args.action == "diff":
        chosen = [e for e in corpus.ENTRIES if e.expected_boards and args.id in (None, e.id)]
        if args.id and not chosen:
            print(f"no boards for {args.id!r}", file=sys.stderr)
            return EXIT_USAGE
        ok = True
        for entry in chosen:
            entry_ok, lines = corpus.diff_entry(entry)
            ok &= entry_ok
            print("\n".join(lines))
        return EXIT_OK if ok else EXIT_FAIL
    lines, failures = corpus.run_corpus()
    print("\n".join(lines))
    print(f"{len(lines) - failures} passed, {failures} failed")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_scale(args) -> int:
    if args.pairs < 0:
        print("pairs must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    if args.n == 0:
        print("scale needs N >= 1", file=sys.stderr)
        return EXIT_USAGE
    result, approx = scale_and_root(args.n, args.pairs)
    if args.pairs:
        print(f"root {result.root} remainder {result.remainder}")
    print(unit_fraction_sum(approx))
    return EXIT_OK


COMMANDS = {"isqrt": cmd_isqrt, "refine": cmd_refine, "compare": cmd_compare, "corpus": cmd_corpus, "scale": cmd_scale}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
