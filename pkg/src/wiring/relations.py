"""Relations on typed stars and their evaluation through wiring diagrams.

A relation on a typed star is a finite set of well-typed assignments of its
wires.  Feeding relations through a typed wiring diagram produces the
relation on the outer star consisting of every outer readout ``c . g`` of a
cable assignment ``c`` whose restriction ``c . f_i`` lies in the i-th input
relation.

:func:`evaluate` computes this with an incremental indexed join plus
enumeration of outer-only cables; :func:`evaluate_naive` transcribes the
definition literally, enumerating every cable assignment, and serves as the
oracle the fast path must agree with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import EnumerationLimitError, InterfaceError, ValidationError
from .typed import TypedStar, TypedWiringDiagram, Value


@dataclass(frozen=True, eq=False)
class Relation:
    """A finite set of assignments of a typed star's wires.

    Tuples are stored aligned with ``star.wires``; the empty star carries
    exactly two relations, the empty one and ``{()}``, so relations on it
    are boolean valued.
    """

    star: TypedStar
    tuples: frozenset[tuple[Value, ...]]

    def __init__(self, star: TypedStar, tuples: Iterable[tuple[Value, ...]] = ()):
        tuples = frozenset(tuple(t) for t in tuples)
        width = len(star.wires)
        for t in tuples:
            if len(t) != width:
                raise ValidationError(
                    f"tuple {t!r} has {len(t)} entries, star has {width} wires"
                )
            for w, v in zip(star.wires, t):
                if v not in star.domain(w):
                    raise ValidationError(
                        f"value {v!r} is outside domain {star.domain(w).name!r} "
                        f"of wire {w!r}"
                    )
        object.__setattr__(self, "star", star)
        object.__setattr__(self, "tuples", tuples)

    @classmethod
    def from_maps(cls, star: TypedStar, maps: Iterable[Mapping[str, Value]]) -> "Relation":
        return cls(star, (tuple(m[w] for w in star.wires) for m in maps))

    @classmethod
    def empty(cls, star: TypedStar) -> "Relation":
        return cls(star, ())

    @classmethod
    def complete(cls, star: TypedStar) -> "Relation":
        """Every well-typed assignment of the star's wires."""
        return cls(star, product(*(star.domain(w).values for w in star.wires)))

    def assignments(self) -> list[dict[str, Value]]:
        return [dict(zip(self.star.wires, t)) for t in self.tuples]

    def aligned_tuples(self, wire_order: Sequence[str]) -> frozenset[tuple[Value, ...]]:
        """The tuple set re-expressed in the given wire order."""
        if tuple(wire_order) == self.star.wires:
            return self.tuples
        idx = [self.star.wires.index(w) for w in wire_order]
        return frozenset(tuple(t[i] for i in idx) for t in self.tuples)

    @property
    def is_empty(self) -> bool:
        return not self.tuples

    def __len__(self) -> int:
        return len(self.tuples)

    def __contains__(self, t) -> bool:
        return tuple(t) in self.tuples

    def __eq__(self, other) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        if self.star != other.star:
            return False
        return self.tuples == other.aligned_tuples(self.star.wires)

    def __hash__(self) -> int:
        order = tuple(sorted(self.star.wires))
        return hash((self.star, self.aligned_tuples(order)))

    def __le__(self, other: "Relation") -> bool:
        if self.star != other.star:
            raise InterfaceError("cannot compare relations on different stars")
        return self.tuples <= other.aligned_tuples(self.star.wires)

    def __repr__(self) -> str:
        return f"Relation({self.star!r}, {len(self.tuples)} tuples)"


def union(a: Relation, b: Relation) -> Relation:
    """Set union of two relations on the same typed star."""
    if a.star != b.star:
        raise InterfaceError("union requires relations on the same typed star")
    return Relation(a.star, a.tuples | b.aligned_tuples(a.star.wires))


def _check_inputs(twd: TypedWiringDiagram, rels: Sequence[Relation]) -> None:
    if len(rels) != twd.arity:
        raise InterfaceError(f"expected {twd.arity} relations, got {len(rels)}")
    for i, rel in enumerate(rels):
        if rel.star != twd.inner[i]:
            raise InterfaceError(f"relation {i} does not match inner star {i}")


def evaluate(twd: TypedWiringDiagram, rels: Sequence[Relation]) -> Relation:
    """Feed ``rels`` through ``twd`` and collect the outer relation.

    Joins the inputs smallest-first, pruning partial cable assignments on
    the first conflict, then extends over cables no inner wire constrains.
    Agrees with :func:`evaluate_naive` everywhere.
    """
    rels = tuple(rels)
    _check_inputs(twd, rels)
    wd = twd.diagram

    if any(len(dom) == 0 for dom in twd.cable_types.values()):
        return Relation.empty(twd.outer)

    order = sorted(range(twd.arity), key=lambda i: len(rels[i]))
    out_cables = [wd.outer_map[y] for y in twd.outer.wires]

    # Cables some later star or the output still cares about, per join step.
    needed_after: list[set] = []
    needed = set(out_cables)
    for i in reversed(order):
        needed_after.insert(0, set(needed))
        needed.update(wd.inner_map[(i, w)] for w in twd.inner[i].wires)

    partials: list[dict] = [{}]
    bound: set = set()
    for step, i in enumerate(order):
        star_wires = rels[i].star.wires
        cables_i = [wd.inner_map[(i, w)] for w in star_wires]
        key_cables = sorted(
            {c for c in cables_i if c in bound}, key=lambda c: str(c)
        )

        index: dict[tuple, list[dict]] = {}
        for t in rels[i].tuples:
            assign: dict = {}
            consistent = True
            for c, v in zip(cables_i, t):
                if assign.get(c, v) != v:
                    consistent = False
                    break
                assign[c] = v
            if not consistent:
                continue
            key = tuple(assign[c] for c in key_cables)
            index.setdefault(key, []).append(assign)

        keep = needed_after[step]
        merged: set[tuple] = set()
        for p in partials:
            key = tuple(p[c] for c in key_cables)
            for assign in index.get(key, ()):
                q = {c: v for c, v in p.items() if c in keep}
                q.update((c, v) for c, v in assign.items() if c in keep)
                merged.add(tuple(sorted(q.items(), key=lambda cv: str(cv[0]))))
        partials = [dict(t) for t in merged]
        if not partials:
            return Relation.empty(twd.outer)
        bound.update(cables_i)

    free = []
    seen = set()
    for c in out_cables:
        if c not in bound and c not in seen:
            free.append(c)
            seen.add(c)
    free_values = [twd.cable_types[c].values for c in free]

    results: set[tuple] = set()
    for p in partials:
        for combo in product(*free_values):
            c_assign = dict(zip(free, combo))
            c_assign.update(p)
            results.add(tuple(c_assign[c] for c in out_cables))
    return Relation(twd.outer, results)


def evaluate_naive(
    twd: TypedWiringDiagram, rels: Sequence[Relation], max_product: int = 10_000_000
) -> Relation:
    """Literal transcription of the definition, used as an oracle.

    Enumerates every assignment of every cable; refuses when the assignment
    space exceeds ``max_product``.
    """
    rels = tuple(rels)
    _check_inputs(twd, rels)
    wd = twd.diagram

    space = math.prod(len(twd.cable_types[c]) for c in wd.cables)
    if space > max_product:
        raise EnumerationLimitError(
            f"cable assignment space has {space} elements, bound is {max_product}"
        )

    cable_order = list(wd.cables)
    wire_cables = [
        [cable_order.index(wd.inner_map[(i, w)]) for w in rels[i].star.wires]
        for i in range(twd.arity)
    ]
    out_idx = [cable_order.index(wd.outer_map[y]) for y in twd.outer.wires]
    tuple_sets = [rel.tuples for rel in rels]

    results: set[tuple] = set()
    for c in product(*(twd.cable_types[cb].values for cb in cable_order)):
        if all(
            tuple(c[k] for k in wire_cables[i]) in tuple_sets[i]
            for i in range(twd.arity)
        ):
            results.add(tuple(c[k] for k in out_idx))
    return Relation(twd.outer, results)
