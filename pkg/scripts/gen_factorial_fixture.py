#!/usr/bin/env python3
"""Regenerate the CSV data for fixtures/factorial (truncated at 24)."""

import pathlib

LIMIT = 24
HERE = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "factorial"


def write(name: str, header: list[str], rows) -> None:
    path = HERE / name
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(str(v) for v in row) + "\n")
    print(f"wrote {path}")


def main() -> None:
    values = range(LIMIT + 1)
    write(
        "decrement.csv",
        ["A", "A'"],
        ((a, a - 1 if a > 0 else 0) for a in values),
    )
    write(
        "multiply.csv",
        ["A", "B'", "C"],
        ((a, b, a * b) for a in values for b in values if a * b <= LIMIT),
    )
    write(
        "conditional.csv",
        ["A", "C", "B"],
        ((a, c, 1 if a == 0 else c) for a in values for c in values),
    )


if __name__ == "__main__":
    main()
