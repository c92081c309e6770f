"""Reading relations from CSV files and writing results back out.

Dialect: comma separator, first line is the header, values are atomic
tokens with no quoting.  Integer-shaped tokens are read as integers,
everything else as text.  The header must name exactly the star's wires,
in any order; duplicate data rows collapse.
"""

from __future__ import annotations

import os
from typing import IO, Iterable

from .errors import CsvFormatError
from .relations import Relation
from .typed import TypedStar, Value


def _parse_token(token: str) -> Value:
    token = token.strip()
    if token and (token.isdigit() or (token[0] == "-" and token[1:].isdigit())):
        return int(token)
    return token


def load_csv_relation(path: str | os.PathLike, star: TypedStar) -> Relation:
    """Load the relation on ``star`` stored at ``path``.

    Rows are checked against the wire domains; errors carry the 1-based
    data row number and the offending column.
    """
    with open(path, "r", encoding="utf-8") as handle:
        lines = [line.rstrip("\n") for line in handle]
    lines = [line for line in lines if line.strip()]
    if not lines:
        raise CsvFormatError(f"{path}: missing header row")
    header = [h.strip() for h in lines[0].split(",")]
    if len(set(header)) != len(header):
        raise CsvFormatError(f"{path}: header repeats a column")
    if set(header) != set(star.wires):
        missing = sorted(set(star.wires) - set(header))
        extra = sorted(set(header) - set(star.wires))
        detail = []
        if missing:
            detail.append(f"missing columns {missing}")
        if extra:
            detail.append(f"unexpected columns {extra}")
        raise CsvFormatError(f"{path}: {'; '.join(detail)}")

    column_of = {w: header.index(w) for w in star.wires}
    tuples = []
    for row_number, line in enumerate(lines[1:], start=1):
        cells = [c for c in line.split(",")]
        if len(cells) != len(header):
            raise CsvFormatError(
                f"{path}: row {row_number} has {len(cells)} cells, expected {len(header)}"
            )
        values = []
        for w in star.wires:
            v = _parse_token(cells[column_of[w]])
            if v not in star.domain(w):
                raise CsvFormatError(
                    f"{path}: row {row_number}, column {w!r}: value {v!r} is "
                    f"outside domain {star.domain(w).name!r}"
                )
            values.append(v)
        tuples.append(tuple(values))
    return Relation(star, tuples)


def write_relation_csv(relation: Relation, handle: IO[str]) -> None:
    """Header in wire order, rows sorted lexicographically for determinism."""
    handle.write(",".join(relation.star.wires) + "\n")
    rows: Iterable[tuple] = sorted(
        relation.tuples, key=lambda t: tuple(str(v) for v in t)
    )
    for row in rows:
        handle.write(",".join(str(v) for v in row) + "\n")
