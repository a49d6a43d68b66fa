"""Print the final board of every corpus entry, with and without step numbers.

    python scripts/render_corpus.py [--plain]
"""

import sys

from fibsqrt.corpus import ENTRIES
from fibsqrt.digitmethod import isqrt_fibonacci
from fibsqrt.tableau import build_tableau, render_text


def main(show_steps: bool) -> None:
    for entry in ENTRIES:
        _, trace = isqrt_fibonacci(entry.radicand, entry.worked_rule, entry.style, entry.evolve)
        print(f"== {entry.id}  ({entry.figure_ref}; rule {entry.worked_rule.value})")
        print(render_text(build_tableau(trace), show_steps=show_steps).text)


if __name__ == "__main__":
    main(show_steps="--plain" not in sys.argv[1:])
