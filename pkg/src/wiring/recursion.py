"""Fixed-point recursion over finite domains.

A recursive setup is a relation on the hom star ``[Z => Z]``, usually
obtained by feeding chosen relations through a diagram whose codomain is
that hom star.  Applying the setup relation to a candidate (via
:func:`wiring.closed.apply_hom`) gives a monotone step function on
relations over ``Z``; its extreme fixed points are found by iterating from
the empty and from the complete relation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .closed import HomStar, internal_hom
from .errors import BudgetExceededError, InterfaceError, ValidationError
from .relations import Relation, evaluate
from .stars import WiringDiagram
from .typed import TypedStar, TypedWiringDiagram, ValueDomain


@dataclass(frozen=True, eq=False)
class RecursiveSetup:
    """A step function on relations over ``z``, packaged with its source.

    ``transition`` indexes the setup relation by its argument-copy readout,
    so repeated stepping does not re-join the setup relation each time.
    """

    z: TypedStar
    hom: HomStar
    relation: Relation
    max_steps: int | None = None
    transition: dict[tuple, frozenset[tuple]] = field(init=False, repr=False)

    def __post_init__(self):
        if self.hom != internal_hom([self.z], self.z):
            raise InterfaceError("hom star is not [z => z] for the stated z")
        if self.relation.star != self.hom.star:
            raise InterfaceError("setup relation does not live on [z => z]")
        n = len(self.z.wires)
        index: dict[tuple, set[tuple]] = {}
        for t in self.relation.tuples:
            index.setdefault(t[:n], set()).add(t[n:])
        object.__setattr__(
            self, "transition", {k: frozenset(v) for k, v in index.items()}
        )

    @property
    def state_count(self) -> int:
        """Size of the complete relation on ``z``."""
        return math.prod(len(self.z.domain(w)) for w in self.z.wires)

    def budget(self) -> int:
        return self.max_steps if self.max_steps is not None else self.state_count + 1


@dataclass(frozen=True)
class FixedPointResult:
    relation: Relation
    trace: tuple[Relation, ...]
    mode: str

    @property
    def iterations(self) -> int:
        return len(self.trace) - 1


def build_setup(
    z: TypedStar,
    phi: TypedWiringDiagram,
    rels: Sequence[Relation],
    max_steps: int | None = None,
) -> RecursiveSetup:
    """Feed ``rels`` through ``phi : (X1..Xn) -> [z => z]`` into a setup."""
    hom = internal_hom([z], z)
    if phi.outer != hom.star:
        raise InterfaceError("diagram's codomain is not the recursive star [z => z]")
    relation = evaluate(phi, rels)
    return RecursiveSetup(z=z, hom=hom, relation=relation, max_steps=max_steps)


def setup_from_relation(
    z: TypedStar, relation: Relation, max_steps: int | None = None
) -> RecursiveSetup:
    """Wrap an already-computed relation on ``[z => z]`` as a setup."""
    hom = internal_hom([z], z)
    return RecursiveSetup(z=z, hom=hom, relation=relation, max_steps=max_steps)


def step(setup: RecursiveSetup, rel: Relation) -> Relation:
    """One application of the setup to a candidate relation on ``z``."""
    if rel.star != setup.z:
        raise InterfaceError("candidate relation does not live on z")
    out: set[tuple] = set()
    for arg in rel.aligned_tuples(setup.z.wires):
        out.update(setup.transition.get(arg, ()))
    return Relation(setup.z, out)


def is_fixed_point(setup: RecursiveSetup, rel: Relation) -> bool:
    return step(setup, rel) == rel


def _image(power: dict[tuple, frozenset[tuple]], states: frozenset[tuple]) -> frozenset:
    out: set[tuple] = set()
    for s in states:
        out.update(power.get(s, ()))
    return frozenset(out)


def _square(power: dict[tuple, frozenset[tuple]]) -> dict[tuple, frozenset[tuple]]:
    return {src: _image(power, targets) for src, targets in power.items()}


def fixed_point(setup: RecursiveSetup, mode: str = "greatest") -> FixedPointResult:
    """Iterate the step function to its extreme fixed point.

    ``mode="least"`` iterates from the empty relation, ``mode="greatest"``
    from the complete one.  Both chains are monotone by step-monotonicity.
    Iteration is accelerated by repeated squaring of the transition
    relation, so the k-th trace entry is the step function applied
    ``2**(k-1)`` times; once two consecutive iterates coincide the chain is
    constant in between, hence a fixed point.  Convergence therefore takes
    logarithmically many iterations in the size of the complete relation;
    running out of budget means the step function is not the one this
    module constructs.
    """
    if mode not in ("least", "greatest"):
        raise ValidationError(f"unknown mode {mode!r}, expected 'least' or 'greatest'")
    wires = setup.z.wires
    start = (
        Relation.empty(setup.z) if mode == "least" else Relation.complete(setup.z)
    )
    current = start.aligned_tuples(wires)
    trace = [current]
    power = dict(setup.transition)
    for k in range(setup.budget()):
        nxt = _image(power, current)
        trace.append(nxt)
        if nxt == current:
            relations = tuple(Relation(setup.z, t) for t in trace)
            return FixedPointResult(relation=relations[-1], trace=relations, mode=mode)
        current = nxt
        if k >= 1:
            power = _square(power)
    raise BudgetExceededError(
        f"no fixed point within {setup.budget()} iterations (mode={mode})"
    )


@dataclass(frozen=True)
class FactorialFixture:
    """The classic recursive example: decrement, multiply, branch on zero."""

    domain: ValueDomain
    z: TypedStar
    phi: TypedWiringDiagram
    decrement: Relation
    multiplication: Relation
    conditional: Relation
    setup: RecursiveSetup


def factorial_fixture(limit: int) -> FactorialFixture:
    """The recursive setup whose greatest fixed point is the factorial graph
    truncated to values at most ``limit``.

    Three relations over ``{0..limit}`` feed a diagram into ``[F => F]``
    with ``F = {A, B}``:

    * decrement: ``A' = A - 1``, clamped to ``0`` at ``A = 0``;
    * multiplication: ``C = A * B'``, keeping only products within range;
    * conditional: ``B = 1`` when ``A = 0``, otherwise ``B = C``.

    The argument copy of ``F`` reads the primed cables (the inner call),
    the result copy reads ``A`` and ``B``.
    """
    if limit < 1:
        raise ValidationError("limit must be at least 1")
    dom = ValueDomain.int_range("N", 0, limit)
    values = dom.values

    x1 = TypedStar.uniform(["A", "A'"], dom)
    x2 = TypedStar.uniform(["A", "B'", "C"], dom)
    x3 = TypedStar.uniform(["A", "C", "B"], dom)
    z = TypedStar.uniform(["A", "B"], dom)
    hom = internal_hom([z], z)

    decrement = Relation(x1, ((a, a - 1 if a > 0 else 0) for a in values))
    multiplication = Relation(
        x2,
        ((a, b, a * b) for a in values for b in values if a * b <= limit),
    )
    conditional = Relation(
        x3,
        ((a, c, 1 if a == 0 else c) for a in values for c in values),
    )

    cables = ("A", "A'", "B", "B'", "C")
    diagram_inner_map = {
        (0, "A"): "A",
        (0, "A'"): "A'",
        (1, "A"): "A",
        (1, "B'"): "B'",
        (1, "C"): "C",
        (2, "A"): "A",
        (2, "C"): "C",
        (2, "B"): "B",
    }
    outer_map = {
        "ret.A": "A",
        "ret.B": "B",
        "arg1.A": "A'",
        "arg1.B": "B'",
    }
    phi = TypedWiringDiagram(
        diagram=WiringDiagram(
            inner=(x1.star, x2.star, x3.star),
            outer=hom.star.star,
            cables=cables,
            inner_map=diagram_inner_map,
            outer_map=outer_map,
        ),
        inner=(x1, x2, x3),
        outer=hom.star,
        cable_types={c: dom for c in cables},
    )
    setup = build_setup(z, phi, [decrement, multiplication, conditional])
    return FactorialFixture(
        domain=dom,
        z=z,
        phi=phi,
        decrement=decrement,
        multiplication=multiplication,
        conditional=conditional,
        setup=setup,
    )
