"""Wiring local partitions of stars into a global one.

A partition of a star's wires is wired through a diagram by merging, for
each block of each inner partition, the cables those wires are soldered to;
two outer wires end up in the same block exactly when their cables land in
the same merged class.  :func:`connectivity_oracle` recomputes the same
answer by reachability in the wire-cable graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InterfaceError, ValidationError
from .stars import Star, WiringDiagram, _UnionFind


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering a star's wires.

    Stored canonically: blocks of sorted wires, sorted by first wire.
    """

    star: Star
    blocks: tuple[tuple[str, ...], ...]

    def __init__(self, star: Star, blocks: Iterable[Iterable[str]]):
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        blocks = tuple(sorted((b for b in blocks if b), key=lambda b: b[0]))
        seen: set[str] = set()
        for block in blocks:
            for w in block:
                if w not in star:
                    raise ValidationError(f"block wire {w!r} is not in the star")
                if w in seen:
                    raise ValidationError(f"wire {w!r} appears in two blocks")
                seen.add(w)
        if seen != star.wire_set:
            missing = sorted(star.wire_set - seen)
            raise ValidationError(f"wires {missing} are not covered by any block")
        object.__setattr__(self, "star", star)
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def discrete(cls, star: Star) -> "Partition":
        return cls(star, ((w,) for w in star.wires))

    @classmethod
    def indiscrete(cls, star: Star) -> "Partition":
        blocks = (tuple(sorted(star.wires)),) if len(star) else ()
        return cls(star, blocks)

    def same_block(self, a: str, b: str) -> bool:
        for block in self.blocks:
            if a in block:
                return b in block
        raise ValidationError(f"wire {a!r} is not in the star")

    def refines(self, other: "Partition") -> bool:
        """True when every block of ``self`` sits inside a block of ``other``."""
        if self.star != other.star:
            raise InterfaceError("cannot compare partitions of different stars")
        lookup = {w: i for i, block in enumerate(other.blocks) for w in block}
        return all(len({lookup[w] for w in block}) == 1 for block in self.blocks)

    def __repr__(self) -> str:
        body = " | ".join(",".join(b) for b in self.blocks)
        return f"Partition({body})"


def _check_parts(wd: WiringDiagram, parts: Sequence[Partition]) -> None:
    if len(parts) != wd.arity:
        raise InterfaceError(f"expected {wd.arity} partitions, got {len(parts)}")
    for i, part in enumerate(parts):
        if part.star != wd.inner[i]:
            raise InterfaceError(f"partition {i} does not match inner star {i}")


def evaluate(wd: WiringDiagram, parts: Sequence[Partition]) -> Partition:
    """Merge cables along inner blocks; group outer wires by cable class."""
    parts = tuple(parts)
    _check_parts(wd, parts)
    uf = _UnionFind()
    for c in wd.cables:
        uf.add(c)
    for i, part in enumerate(parts):
        for block in part.blocks:
            first = wd.inner_map[(i, block[0])]
            for w in block[1:]:
                uf.union(first, wd.inner_map[(i, w)])
    groups: dict = {}
    for y in wd.outer.wires:
        groups.setdefault(uf.find(wd.outer_map[y]), []).append(y)
    return Partition(wd.outer, groups.values())


def connectivity_oracle(wd: WiringDiagram, parts: Sequence[Partition]) -> Partition:
    """Group outer wires by reachability in the wire-cable graph.

    Nodes are wires and cables; every wire touches its cable, and wires
    sharing an inner block are linked.  Independent of the union-find path.
    """
    parts = tuple(parts)
    _check_parts(wd, parts)
    adjacency: dict = {("c", c): set() for c in wd.cables}

    def link(a, b):
        adjacency.setdefault(a, set()).add(b)
        adjacency.setdefault(b, set()).add(a)

    for (i, w), c in wd.inner_map.items():
        link(("w", i, w), ("c", c))
    for y, c in wd.outer_map.items():
        link(("y", y), ("c", c))
    for i, part in enumerate(parts):
        for block in part.blocks:
            for w in block[1:]:
                link(("w", i, block[0]), ("w", i, w))

    component: dict = {}
    for start in adjacency:
        if start in component:
            continue
        stack = [start]
        component[start] = start
        while stack:
            node = stack.pop()
            for nxt in adjacency[node]:
                if nxt not in component:
                    component[nxt] = start
                    stack.append(nxt)

    groups: dict = {}
    for y in wd.outer.wires:
        groups.setdefault(component[("y", y)], []).append(y)
    return Partition(wd.outer, groups.values())
