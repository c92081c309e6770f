"""Stars, cables, and cospan composition.

A star is a finite set of named wires.  A wiring diagram from inner stars
``X1, ..., Xn`` to an outer star ``Y`` is a cospan: a finite set of cables
``C`` together with total solder maps ``f : X1 + ... + Xn -> C`` and
``g : Y -> C``.  Two diagrams are the same morphism when they differ only
by a renaming of cables, so semantic equality always goes through
:func:`canonicalize`.

Composition substitutes a diagram into each inner star of another and is
computed as a quotient of the union of the cable sets (a pushout),
implemented with union-find.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InterfaceError, ValidationError

Cable = Hashable
InnerWire = tuple[int, str]


@dataclass(frozen=True, eq=False)
class Star:
    """A finite set of distinct wire names; the order is presentational only."""

    wires: tuple[str, ...]

    def __init__(self, wires: Iterable[str] = ()):
        wires = tuple(wires)
        seen = set()
        for w in wires:
            if not isinstance(w, str) or not w:
                raise ValidationError(f"wire names must be nonempty strings, got {w!r}")
            if w in seen:
                raise ValidationError(f"duplicate wire name {w!r}")
            seen.add(w)
        object.__setattr__(self, "wires", wires)

    @property
    def wire_set(self) -> frozenset[str]:
        return frozenset(self.wires)

    def __contains__(self, wire: str) -> bool:
        return wire in self.wire_set

    def __len__(self) -> int:
        return len(self.wires)

    def __iter__(self):
        return iter(self.wires)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Star):
            return NotImplemented
        return self.wire_set == other.wire_set

    def __hash__(self) -> int:
        return hash(self.wire_set)

    def __repr__(self) -> str:
        return f"Star({{{', '.join(self.wires)}}})"


@dataclass(frozen=True, eq=False)
class WiringDiagram:
    """A cospan from the disjoint union of ``inner`` stars to ``outer``.

    ``inner_map`` sends every inner wire, keyed ``(star_index, wire)``, to a
    cable; ``outer_map`` sends every outer wire to a cable.  Cables carried
    by no wire ("floating" cables) are legal.  Cable identities are opaque:
    use :func:`diagrams_equal` to compare diagrams as morphisms.
    """

    inner: tuple[Star, ...]
    outer: Star
    cables: tuple[Cable, ...]
    inner_map: dict[InnerWire, Cable]
    outer_map: dict[str, Cable]

    def __init__(
        self,
        inner: Sequence[Star],
        outer: Star,
        cables: Iterable[Cable],
        inner_map: Mapping[InnerWire, Cable],
        outer_map: Mapping[str, Cable],
    ):
        inner = tuple(inner)
        cables = tuple(cables)
        if len(set(cables)) != len(cables):
            raise ValidationError("duplicate cable identifier")
        cable_set = set(cables)
        inner_map = dict(inner_map)
        outer_map = dict(outer_map)

        expected = {(i, w) for i, star in enumerate(inner) for w in star.wires}
        for key in inner_map:
            if key not in expected:
                raise ValidationError(f"solder entry for unknown inner wire {key!r}")
        for key in expected:
            if key not in inner_map:
                i, w = key
                raise ValidationError(f"inner wire {w!r} of star {i} is not soldered")
        for key, cable in inner_map.items():
            if cable not in cable_set:
                raise ValidationError(
                    f"inner wire {key!r} soldered to unknown cable {cable!r}"
                )
        for w in outer_map:
            if w not in outer:
                raise ValidationError(f"solder entry for unknown outer wire {w!r}")
        for w in outer.wires:
            if w not in outer_map:
                raise ValidationError(f"outer wire {w!r} is not soldered")
        for w, cable in outer_map.items():
            if cable not in cable_set:
                raise ValidationError(
                    f"outer wire {w!r} soldered to unknown cable {cable!r}"
                )

        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "cables", cables)
        object.__setattr__(self, "inner_map", inner_map)
        object.__setattr__(self, "outer_map", outer_map)

    @property
    def arity(self) -> int:
        return len(self.inner)

    def attached_cables(self) -> set[Cable]:
        return set(self.inner_map.values()) | set(self.outer_map.values())

    def floating_cables(self) -> tuple[Cable, ...]:
        attached = self.attached_cables()
        return tuple(c for c in self.cables if c not in attached)

    def __repr__(self) -> str:
        inner = ", ".join(repr(s) for s in self.inner)
        return (
            f"WiringDiagram([{inner}] -> {self.outer!r}, "
            f"cables={len(self.cables)})"
        )


def identity_diagram(star: Star) -> WiringDiagram:
    """The identity morphism on ``star``: one cable per wire, all maps identity."""
    return WiringDiagram(
        inner=(star,),
        outer=star,
        cables=tuple(star.wires),
        inner_map={(0, w): w for w in star.wires},
        outer_map={w: w for w in star.wires},
    )


class _UnionFind:
    """Union-find with path compression over arbitrary hashable keys."""

    def __init__(self):
        self.parent: dict = {}

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def compose_with_classes(
    outer_wd: WiringDiagram, inner_wds: Sequence[WiringDiagram]
) -> tuple[WiringDiagram, dict[tuple, int]]:
    """As :func:`compose`, also returning the cable quotient.

    The second component maps every source cable, keyed ``("i", i, cable)``
    for cables of ``inner_wds[i]`` and ``("o", cable)`` for cables of
    ``outer_wd``, to its cable in the composite.
    """
    inner_wds = tuple(inner_wds)
    if len(inner_wds) != outer_wd.arity:
        raise InterfaceError(
            f"expected {outer_wd.arity} inner diagrams, got {len(inner_wds)}"
        )
    for i, wd in enumerate(inner_wds):
        if wd.outer != outer_wd.inner[i]:
            raise InterfaceError(
                f"inner diagram {i} has outer star {sorted(wd.outer.wire_set)}, "
                f"expected {sorted(outer_wd.inner[i].wire_set)}"
            )

    uf = _UnionFind()
    for i, wd in enumerate(inner_wds):
        for c in wd.cables:
            uf.add(("i", i, c))
    for c in outer_wd.cables:
        uf.add(("o", c))
    for i, wd in enumerate(inner_wds):
        for y in wd.outer.wires:
            uf.union(("i", i, wd.outer_map[y]), ("o", outer_wd.inner_map[(i, y)]))

    cable_ids: dict = {}

    def cable_of(node) -> int:
        root = uf.find(node)
        if root not in cable_ids:
            cable_ids[root] = len(cable_ids)
        return cable_ids[root]

    new_inner: list[Star] = []
    new_inner_map: dict[InnerWire, Cable] = {}
    for i, wd in enumerate(inner_wds):
        offset = len(new_inner)
        new_inner.extend(wd.inner)
        for (j, w), c in wd.inner_map.items():
            new_inner_map[(offset + j, w)] = cable_of(("i", i, c))
    new_outer_map = {y: cable_of(("o", outer_wd.outer_map[y])) for y in outer_wd.outer.wires}

    class_of: dict[tuple, int] = {}
    for i, wd in enumerate(inner_wds):
        for c in wd.cables:
            class_of[("i", i, c)] = cable_of(("i", i, c))
    for c in outer_wd.cables:
        class_of[("o", c)] = cable_of(("o", c))

    composite = WiringDiagram(
        inner=new_inner,
        outer=outer_wd.outer,
        cables=tuple(range(len(cable_ids))),
        inner_map=new_inner_map,
        outer_map=new_outer_map,
    )
    return composite, class_of


def compose(outer_wd: WiringDiagram, inner_wds: Sequence[WiringDiagram]) -> WiringDiagram:
    """Substitute ``inner_wds[i]`` into the i-th inner star of ``outer_wd``.

    The cables of the composite are the disjoint union of all cable sets,
    quotiented by identifying, for every intermediary wire ``y`` of the i-th
    interface star, the cable ``inner_wds[i]`` solders ``y`` to with the
    cable ``outer_wd`` solders it to.  Intermediary stars vanish; floating
    cables survive the quotient.
    """
    composite, _ = compose_with_classes(outer_wd, inner_wds)
    return composite


def _attachment_keys(wd: WiringDiagram) -> dict[Cable, tuple]:
    """Key each attached cable by the sorted list of wires soldered to it."""
    points: dict[Cable, list[tuple[int, int, str]]] = {}
    for (i, w), c in wd.inner_map.items():
        points.setdefault(c, []).append((0, i, w))
    for w, c in wd.outer_map.items():
        points.setdefault(c, []).append((1, 0, w))
    return {c: tuple(sorted(ps)) for c, ps in points.items()}


def canonicalize(wd: WiringDiagram) -> WiringDiagram:
    """Rename cables deterministically so equal morphisms coincide on the nose.

    Attached cables are sorted by their attachment key and numbered from 1;
    floating cables are indistinguishable and receive the remaining indices,
    so only their count matters.
    """
    keys = _attachment_keys(wd)
    renamed: dict[Cable, int] = {}
    for rank, cable in enumerate(sorted(keys, key=keys.__getitem__), start=1):
        renamed[cable] = rank
    next_id = len(renamed) + 1
    for c in wd.cables:
        if c not in renamed:
            renamed[c] = next_id
            next_id += 1
    return WiringDiagram(
        inner=wd.inner,
        outer=wd.outer,
        cables=tuple(range(1, len(wd.cables) + 1)),
        inner_map={k: renamed[c] for k, c in wd.inner_map.items()},
        outer_map={w: renamed[c] for w, c in wd.outer_map.items()},
    )


def diagrams_equal(a: WiringDiagram, b: WiringDiagram) -> bool:
    """True when ``a`` and ``b`` are the same morphism (equal canonical forms)."""
    if a.arity != b.arity or len(a.cables) != len(b.cables):
        return False
    if a.outer != b.outer or any(x != y for x, y in zip(a.inner, b.inner)):
        return False
    ca, cb = canonicalize(a), canonicalize(b)
    return ca.inner_map == cb.inner_map and ca.outer_map == cb.outer_map


def reindex_inner(wd: WiringDiagram, perm: Sequence[int]) -> WiringDiagram:
    """Permute the inner stars: position ``k`` of the result holds inner star
    ``perm[k]`` of the input.  Reindexing by a permutation and then by its
    inverse is the identity."""
    perm = tuple(perm)
    if sorted(perm) != list(range(wd.arity)):
        raise ValidationError(f"{perm!r} is not a permutation of 0..{wd.arity - 1}")
    inner = tuple(wd.inner[p] for p in perm)
    position = {p: k for k, p in enumerate(perm)}
    inner_map = {(position[i], w): c for (i, w), c in wd.inner_map.items()}
    return WiringDiagram(inner, wd.outer, wd.cables, inner_map, dict(wd.outer_map))
