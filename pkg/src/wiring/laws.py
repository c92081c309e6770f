"""Seeded random generators and executable law checks.

The suites here exercise the identity, associativity, and equivariance laws
of diagram composition, the naturality of the relation and partition
algebras, and the concrete witness computations behind the triviality
results for algebra morphisms out of the relational algebra.  All of these
encode theorems: a failure indicates an implementation bug, and each
failure is greedily shrunk to a minimal case that still fails.

Checks call :mod:`wiring.stars` and :mod:`wiring.relations` through their
modules, so tests can corrupt an operation to confirm the harness notices.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Sequence

from . import partitions as partitions_mod
from . import relations as relations_mod
from . import stars as stars_mod
from . import typed as typed_mod
from .errors import WiringError
from .partitions import Partition
from .relations import Relation
from .stars import Star, WiringDiagram
from .typed import TypedStar, TypedWiringDiagram, ValueDomain


@dataclass(frozen=True)
class GeneratorConfig:
    """Bounds for the random instance generators; same seed, same sequence."""

    seed: int = 0
    max_stars: int = 4
    max_wires: int = 5
    max_cables: int = 6
    max_domain: int = 3
    cases: int = 100

    def __post_init__(self):
        for name in ("max_stars", "max_wires", "max_cables", "max_domain", "cases"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


@dataclass(frozen=True)
class LawFailure:
    law: str
    case_index: int
    description: str


@dataclass(frozen=True)
class SuiteReport:
    name: str
    cases: int
    failures: tuple[LawFailure, ...] = ()
    skipped: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def format(self) -> str:
        line = f"{self.name}: {self.cases} cases, {len(self.failures)} failures"
        if self.skipped:
            line += f", {len(self.skipped)} skipped"
        parts = [line]
        for f in self.failures:
            parts.append(f"  FAIL case {f.case_index}: {f.description}")
        for s in self.skipped:
            parts.append(f"  skip: {s}")
        return "\n".join(parts)


# ---------------------------------------------------------------------------
# generators

def gen_star(rng: random.Random, cfg: GeneratorConfig, min_wires: int = 0) -> Star:
    k = rng.randint(min_wires, cfg.max_wires)
    return Star(rng.sample(string.ascii_lowercase, k))


def gen_diagram(
    rng: random.Random,
    cfg: GeneratorConfig,
    inner: Sequence[Star] | None = None,
    outer: Star | None = None,
) -> WiringDiagram:
    if inner is None:
        inner = [gen_star(rng, cfg) for _ in range(rng.randint(0, cfg.max_stars))]
    if outer is None:
        outer = gen_star(rng, cfg)
    total_wires = sum(len(s) for s in inner) + len(outer)
    lo = 1 if total_wires else 0
    cables = tuple(range(rng.randint(lo, max(lo, cfg.max_cables))))
    inner_map = {
        (i, w): rng.choice(cables) for i, s in enumerate(inner) for w in s.wires
    }
    outer_map = {w: rng.choice(cables) for w in outer.wires}
    return WiringDiagram(tuple(inner), outer, cables, inner_map, outer_map)


def gen_domains(rng: random.Random, cfg: GeneratorConfig, count: int = 3) -> list[ValueDomain]:
    return [
        ValueDomain(f"D{i}", tuple(range(rng.randint(1, max(1, cfg.max_domain)))))
        for i in range(count)
    ]


def gen_typed(
    rng: random.Random,
    cfg: GeneratorConfig,
    wd: WiringDiagram | None = None,
    domains: Sequence[ValueDomain] | None = None,
) -> TypedWiringDiagram:
    """Type a diagram by assigning each cable a random domain."""
    if wd is None:
        wd = gen_diagram(rng, cfg)
    if domains is None:
        domains = gen_domains(rng, cfg)
    cable_types = {c: rng.choice(list(domains)) for c in wd.cables}
    inner = tuple(
        TypedStar(s, {w: cable_types[wd.inner_map[(i, w)]] for w in s.wires})
        for i, s in enumerate(wd.inner)
    )
    outer = TypedStar(wd.outer, {w: cable_types[wd.outer_map[w]] for w in wd.outer.wires})
    return TypedWiringDiagram(wd, inner, outer, cable_types)


def gen_relation(rng: random.Random, tstar: TypedStar, density: float = 0.4) -> Relation:
    space = 1
    for w in tstar.wires:
        space *= len(tstar.domain(w))
    if space <= 512:
        tuples = [
            t
            for t in product(*(tstar.domain(w).values for w in tstar.wires))
            if rng.random() < density
        ]
    else:
        tuples = [
            tuple(rng.choice(tstar.domain(w).values) for w in tstar.wires)
            for _ in range(32)
        ]
    return Relation(tstar, tuples)


def gen_partition(rng: random.Random, star: Star) -> Partition:
    blocks: list[list[str]] = []
    for w in star.wires:
        if blocks and rng.random() < 0.5:
            rng.choice(blocks).append(w)
        else:
            blocks.append([w])
    return Partition(star, blocks)


@dataclass(frozen=True)
class TwoLevelStack:
    """A diagram of diagrams: ``outer`` with one filler per inner star."""

    outer: WiringDiagram
    fillers: tuple[WiringDiagram, ...]

    def compose(self) -> WiringDiagram:
        return stars_mod.compose(self.outer, self.fillers)


@dataclass(frozen=True)
class ThreeLevelStack:
    top: WiringDiagram
    mids: tuple[WiringDiagram, ...]
    bottoms: tuple[tuple[WiringDiagram, ...], ...]


def gen_two_level(rng: random.Random, cfg: GeneratorConfig) -> TwoLevelStack:
    outer = gen_diagram(rng, cfg)
    fillers = tuple(gen_diagram(rng, cfg, outer=y) for y in outer.inner)
    return TwoLevelStack(outer, fillers)


def gen_three_level(rng: random.Random, cfg: GeneratorConfig) -> ThreeLevelStack:
    top = gen_diagram(rng, cfg)
    mids = tuple(gen_diagram(rng, cfg, outer=y) for y in top.inner)
    bottoms = tuple(
        tuple(gen_diagram(rng, cfg, outer=x) for x in mid.inner) for mid in mids
    )
    return ThreeLevelStack(top, mids, bottoms)


# ---------------------------------------------------------------------------
# shrinking

def _drop_inner_star(wd: WiringDiagram, drop: int) -> WiringDiagram:
    inner = tuple(s for i, s in enumerate(wd.inner) if i != drop)
    inner_map = {
        (i - (i > drop), w): c for (i, w), c in wd.inner_map.items() if i != drop
    }
    return WiringDiagram(inner, wd.outer, wd.cables, inner_map, wd.outer_map)


def _drop_floating(wd: WiringDiagram, cable) -> WiringDiagram:
    cables = tuple(c for c in wd.cables if c != cable)
    return WiringDiagram(wd.inner, wd.outer, cables, wd.inner_map, wd.outer_map)


def _drop_outer_wire(wd: WiringDiagram, wire: str) -> WiringDiagram:
    outer = Star(w for w in wd.outer.wires if w != wire)
    outer_map = {w: c for w, c in wd.outer_map.items() if w != wire}
    return WiringDiagram(wd.inner, outer, wd.cables, wd.inner_map, outer_map)


def _diagram_variants(wd: WiringDiagram) -> Iterator[WiringDiagram]:
    for i in range(wd.arity):
        yield _drop_inner_star(wd, i)
    for c in wd.floating_cables():
        yield _drop_floating(wd, c)
    for w in wd.outer.wires:
        yield _drop_outer_wire(wd, w)


def _two_level_variants(stack: TwoLevelStack) -> Iterator[TwoLevelStack]:
    for i in range(stack.outer.arity):
        yield TwoLevelStack(
            _drop_inner_star(stack.outer, i),
            stack.fillers[:i] + stack.fillers[i + 1 :],
        )
    for c in stack.outer.floating_cables():
        yield TwoLevelStack(_drop_floating(stack.outer, c), stack.fillers)
    for w in stack.outer.outer.wires:
        yield TwoLevelStack(_drop_outer_wire(stack.outer, w), stack.fillers)
    for i, filler in enumerate(stack.fillers):
        for variant in _diagram_variants(filler):
            if variant.outer != filler.outer:
                continue
            yield TwoLevelStack(
                stack.outer,
                stack.fillers[:i] + (variant,) + stack.fillers[i + 1 :],
            )


def _three_level_variants(stack: ThreeLevelStack) -> Iterator[ThreeLevelStack]:
    for i in range(stack.top.arity):
        yield ThreeLevelStack(
            _drop_inner_star(stack.top, i),
            stack.mids[:i] + stack.mids[i + 1 :],
            stack.bottoms[:i] + stack.bottoms[i + 1 :],
        )
    for c in stack.top.floating_cables():
        yield ThreeLevelStack(_drop_floating(stack.top, c), stack.mids, stack.bottoms)
    for w in stack.top.outer.wires:
        yield ThreeLevelStack(_drop_outer_wire(stack.top, w), stack.mids, stack.bottoms)
    for i, mid in enumerate(stack.mids):
        for j in range(mid.arity):
            yield ThreeLevelStack(
                stack.top,
                stack.mids[:i] + (_drop_inner_star(mid, j),) + stack.mids[i + 1 :],
                stack.bottoms[:i]
                + (stack.bottoms[i][:j] + stack.bottoms[i][j + 1 :],)
                + stack.bottoms[i + 1 :],
            )
        for c in mid.floating_cables():
            yield ThreeLevelStack(
                stack.top,
                stack.mids[:i] + (_drop_floating(mid, c),) + stack.mids[i + 1 :],
                stack.bottoms,
            )
    for i, row in enumerate(stack.bottoms):
        for j, bottom in enumerate(row):
            for variant in _diagram_variants(bottom):
                if variant.outer != bottom.outer:
                    continue
                yield ThreeLevelStack(
                    stack.top,
                    stack.mids,
                    stack.bottoms[:i]
                    + (row[:j] + (variant,) + row[j + 1 :],)
                    + stack.bottoms[i + 1 :],
                )


def _equivariance_variants(case) -> Iterator[tuple[TwoLevelStack, tuple[int, ...]]]:
    stack, perm = case
    for i in range(stack.outer.arity):
        smaller = TwoLevelStack(
            _drop_inner_star(stack.outer, i),
            stack.fillers[:i] + stack.fillers[i + 1 :],
        )
        new_perm = tuple(p - (p > i) for p in perm if p != i)
        yield smaller, new_perm
    for c in stack.outer.floating_cables():
        yield TwoLevelStack(_drop_floating(stack.outer, c), stack.fillers), perm
    for w in stack.outer.outer.wires:
        yield TwoLevelStack(_drop_outer_wire(stack.outer, w), stack.fillers), perm


def shrink(case, variants: Callable, still_fails: Callable) -> object:
    """Greedy descent: take any variant that still fails, until none does."""
    current = case
    progress = True
    while progress:
        progress = False
        for candidate in variants(current):
            try:
                failing = still_fails(candidate)
            except WiringError:
                continue
            if failing:
                current = candidate
                progress = True
                break
    return current


# ---------------------------------------------------------------------------
# law suites

def check_operad_laws(cfg: GeneratorConfig) -> list[SuiteReport]:
    """Identity, associativity, and equivariance on seeded random stacks."""
    rng = cfg.rng()
    identity_failures: list[LawFailure] = []
    assoc_failures: list[LawFailure] = []
    equiv_failures: list[LawFailure] = []

    def identity_fails(wd: WiringDiagram) -> bool:
        left = stars_mod.compose(stars_mod.identity_diagram(wd.outer), [wd])
        right = stars_mod.compose(wd, [stars_mod.identity_diagram(s) for s in wd.inner])
        return not (
            stars_mod.diagrams_equal(left, wd) and stars_mod.diagrams_equal(right, wd)
        )

    def assoc_fails(stack: ThreeLevelStack) -> bool:
        top_first = stars_mod.compose(stack.top, stack.mids)
        flat_bottoms = [b for row in stack.bottoms for b in row]
        left = stars_mod.compose(top_first, flat_bottoms)
        mids_first = [
            stars_mod.compose(mid, row) for mid, row in zip(stack.mids, stack.bottoms)
        ]
        right = stars_mod.compose(stack.top, mids_first)
        return not stars_mod.diagrams_equal(left, right)

    def equivariance_fails(case: tuple[TwoLevelStack, tuple[int, ...]]) -> bool:
        stack, perm = case
        if sorted(perm) != list(range(stack.outer.arity)):
            raise WiringError("stale permutation")
        plain = stack.compose()
        permuted = stars_mod.compose(
            stars_mod.reindex_inner(stack.outer, perm),
            [stack.fillers[p] for p in perm],
        )
        block_sizes = [f.arity for f in stack.fillers]
        starts = [sum(block_sizes[:i]) for i in range(len(block_sizes))]
        flat_perm = [starts[p] + j for p in perm for j in range(block_sizes[p])]
        return not stars_mod.diagrams_equal(
            permuted, stars_mod.reindex_inner(plain, flat_perm)
        )

    for case_index in range(cfg.cases):
        wd = gen_diagram(rng, cfg)
        if identity_fails(wd):
            small = shrink(wd, _diagram_variants, identity_fails)
            identity_failures.append(
                LawFailure("identity", case_index, repr(small))
            )

        stack3 = gen_three_level(rng, cfg)
        if assoc_fails(stack3):
            small = shrink(stack3, _three_level_variants, assoc_fails)
            assoc_failures.append(LawFailure("associativity", case_index, repr(small)))

        stack2 = gen_two_level(rng, cfg)
        perm = list(range(stack2.outer.arity))
        rng.shuffle(perm)
        case = (stack2, tuple(perm))
        if equivariance_fails(case):
            small = shrink(case, _equivariance_variants, equivariance_fails)
            equiv_failures.append(LawFailure("equivariance", case_index, repr(small)))

    return [
        SuiteReport("operad-identity", cfg.cases, tuple(identity_failures)),
        SuiteReport("operad-associativity", cfg.cases, tuple(assoc_failures)),
        SuiteReport("operad-equivariance", cfg.cases, tuple(equiv_failures)),
    ]


def check_pushout_oracle(cfg: GeneratorConfig) -> SuiteReport:
    """Composition agrees with brute-force quotient enumeration."""
    rng = cfg.rng()
    failures: list[LawFailure] = []
    for case_index in range(cfg.cases):
        stack = gen_two_level(rng, cfg)
        fast = stack.compose()
        slow = compose_by_closure(stack.outer, stack.fillers)
        if not stars_mod.diagrams_equal(fast, slow):
            small = shrink(
                stack,
                _two_level_variants,
                lambda s: not stars_mod.diagrams_equal(
                    s.compose(), compose_by_closure(s.outer, s.fillers)
                ),
            )
            failures.append(LawFailure("pushout-oracle", case_index, repr(small)))
    return SuiteReport("pushout-oracle", cfg.cases, tuple(failures))


def compose_by_closure(
    outer_wd: WiringDiagram, inner_wds: Sequence[WiringDiagram]
) -> WiringDiagram:
    """Independent composition oracle: explicit equivalence-class closure.

    Builds the identification relation on the disjoint union of all cables
    and saturates it by repeated scanning instead of union-find.
    """
    inner_wds = tuple(inner_wds)
    nodes = [("i", i, c) for i, wd in enumerate(inner_wds) for c in wd.cables]
    nodes += [("o", c) for c in outer_wd.cables]
    pairs = [
        (("i", i, wd.outer_map[y]), ("o", outer_wd.inner_map[(i, y)]))
        for i, wd in enumerate(inner_wds)
        for y in wd.outer.wires
    ]
    labels = {node: k for k, node in enumerate(nodes)}
    changed = True
    while changed:
        changed = False
        for a, b in pairs:
            la, lb = labels[a], labels[b]
            if la != lb:
                low, high = min(la, lb), max(la, lb)
                for node, l in labels.items():
                    if l == high:
                        labels[node] = low
                changed = True
    class_ids: dict[int, int] = {}
    for node in nodes:
        class_ids.setdefault(labels[node], len(class_ids))

    new_inner: list[Star] = []
    inner_map: dict = {}
    for i, wd in enumerate(inner_wds):
        offset = len(new_inner)
        new_inner.extend(wd.inner)
        for (j, w), c in wd.inner_map.items():
            inner_map[(offset + j, w)] = class_ids[labels[("i", i, c)]]
    outer_map = {
        y: class_ids[labels[("o", outer_wd.outer_map[y])]]
        for y in outer_wd.outer.wires
    }
    return WiringDiagram(
        tuple(new_inner),
        outer_wd.outer,
        tuple(range(len(class_ids))),
        inner_map,
        outer_map,
    )


def gen_typed_filler(
    rng: random.Random,
    cfg: GeneratorConfig,
    tstar: TypedStar,
    domains: Sequence[ValueDomain],
) -> TypedWiringDiagram:
    """A random typed diagram with the given outer typed star.

    Cable domains are fixed first so each outer wire can be soldered to a
    cable of its own domain; inner wires take whatever domain their cable
    carries.
    """
    inner_stars = [gen_star(rng, cfg) for _ in range(rng.randint(0, cfg.max_stars))]
    needed = []
    for w in tstar.wires:
        if tstar.domain(w) not in needed:
            needed.append(tstar.domain(w))
    count = max(len(needed), rng.randint(1 if (tstar.wires or inner_stars) else 0, cfg.max_cables))
    pool = list(domains) + needed
    cables = tuple(range(count))
    cable_types = {
        c: needed[c] if c < len(needed) else rng.choice(pool) for c in cables
    }
    by_domain: dict = {}
    for c in cables:
        by_domain.setdefault(cable_types[c], []).append(c)
    outer_map = {w: rng.choice(by_domain[tstar.domain(w)]) for w in tstar.wires}
    inner_map = {
        (i, w): rng.choice(cables)
        for i, s in enumerate(inner_stars)
        for w in s.wires
    }
    inner = tuple(
        TypedStar(s, {w: cable_types[inner_map[(i, w)]] for w in s.wires})
        for i, s in enumerate(inner_stars)
    )
    wd = WiringDiagram(tuple(inner_stars), tstar.star, cables, inner_map, outer_map)
    return TypedWiringDiagram(wd, inner, tstar, cable_types)


def _typed_stack(rng: random.Random, cfg: GeneratorConfig):
    """A two-level typed stack with matching interface typings."""
    domains = gen_domains(rng, cfg)
    top = gen_typed(rng, cfg, domains=domains)
    fillers = tuple(
        gen_typed_filler(rng, cfg, tstar, domains) for tstar in top.inner
    )
    return top, fillers


def check_algebra_naturality(cfg: GeneratorConfig, algebra: str = "rel") -> SuiteReport:
    """Evaluating a composite equals evaluating stagewise."""
    if algebra not in ("rel", "eq"):
        raise ValueError(f"unknown algebra {algebra!r}")
    rng = cfg.rng()
    failures: list[LawFailure] = []
    for case_index in range(cfg.cases):
        if algebra == "rel":
            top, fillers = _typed_stack(rng, cfg)
            rels = [
                [gen_relation(rng, tstar) for tstar in f.inner] for f in fillers
            ]
            composite = typed_mod.typed_compose(top, fillers)
            flat = [r for row in rels for r in row]
            direct = relations_mod.evaluate(composite, flat)
            staged = relations_mod.evaluate(
                top,
                [relations_mod.evaluate(f, row) for f, row in zip(fillers, rels)],
            )
            if direct != staged:
                failures.append(
                    LawFailure("rel-naturality", case_index, repr((top, fillers, rels)))
                )
        else:
            stack = gen_two_level(rng, cfg)
            parts = [
                [gen_partition(rng, s) for s in f.inner] for f in stack.fillers
            ]
            composite = stack.compose()
            flat = [p for row in parts for p in row]
            direct = partitions_mod.evaluate(composite, flat)
            staged = partitions_mod.evaluate(
                stack.outer,
                [
                    partitions_mod.evaluate(f, row)
                    for f, row in zip(stack.fillers, parts)
                ],
            )
            if direct != staged:
                failures.append(
                    LawFailure("eq-naturality", case_index, repr((stack, parts)))
                )
    return SuiteReport(f"{algebra}-naturality", cfg.cases, tuple(failures))


# ---------------------------------------------------------------------------
# witness computations behind the triviality results

def check_prop_witnesses(domain: ValueDomain, seed: int = 0) -> SuiteReport:
    """Execute the witness equalities that force algebra morphisms out of the
    relational algebra to be trivial.

    (i) the 0-ary diagram with identity outer leg produces the complete
    relation; (ii) a diagram whose outer wires are untouched by the inner
    star sends any nonempty relation to the complete one and the empty one
    to itself; (iii) two disjoint singletons conjoined on one cable produce
    the empty relation; (iv) routing one inner star straight through to the
    output alongside a completely-filled second star returns the input
    unchanged.  Checked with the naive evaluator.
    """
    if len(domain) < 2:
        return SuiteReport(
            "prop-witnesses",
            cases=0,
            skipped=("all witnesses need a domain with at least two values",),
        )
    rng = random.Random(seed)
    failures: list[LawFailure] = []

    def record(law: str, index: int, detail: str) -> None:
        failures.append(LawFailure(law, index, detail))

    # (i) complete relation out of nothing
    for index, wires in enumerate((["y"], ["y1", "y2"])):
        y = TypedStar.uniform(wires, domain)
        wd = WiringDiagram((), y.star, tuple(wires), {}, {w: w for w in wires})
        twd = TypedWiringDiagram(wd, (), y, {w: domain for w in wires})
        got = relations_mod.evaluate_naive(twd, [])
        if got != Relation.complete(y):
            record("witness-complete", index, f"outer {wires}: got {sorted(got.tuples)}")

    # (ii) nonempty input saturates a disconnected output
    x1 = TypedStar.uniform(["x1", "x2"], domain)
    y = TypedStar.uniform(["y1", "y2"], domain)
    cables = ("cx1", "cx2", "cy1", "cy2")
    wd = WiringDiagram(
        (x1.star,),
        y.star,
        cables,
        {(0, "x1"): "cx1", (0, "x2"): "cx2"},
        {"y1": "cy1", "y2": "cy2"},
    )
    twd = TypedWiringDiagram(wd, (x1,), y, {c: domain for c in cables})
    for index in range(3):
        rel = gen_relation(rng, x1)
        got = relations_mod.evaluate_naive(twd, [rel])
        expected = Relation.empty(y) if rel.is_empty else Relation.complete(y)
        if got != expected:
            record("witness-saturate", index, f"input {sorted(rel.tuples)}")
    if relations_mod.evaluate_naive(twd, [Relation.empty(x1)]) != Relation.empty(y):
        record("witness-saturate", 3, "empty input did not stay empty")

    # (iii) disjoint singletons conjoin to nothing
    pt = TypedStar.uniform(["p"], domain)
    wd = WiringDiagram(
        (pt.star, pt.star),
        pt.star,
        ("c",),
        {(0, "p"): "c", (1, "p"): "c"},
        {"p": "c"},
    )
    twd = TypedWiringDiagram(wd, (pt, pt), pt, {"c": domain})
    a1, a2 = domain.values[0], domain.values[1]
    got = relations_mod.evaluate_naive(twd, [Relation(pt, [(a1,)]), Relation(pt, [(a2,)])])
    if not got.is_empty:
        record("witness-disjoint", 0, f"got {sorted(got.tuples)}")

    # (iv) pass-through next to a complete relation returns the input
    two = TypedStar.uniform(["w1", "w2"], domain)
    cables = ("c1", "cshared", "c2")
    wd = WiringDiagram(
        (two.star, two.star),
        two.star,
        cables,
        {
            (0, "w1"): "c1",
            (0, "w2"): "cshared",
            (1, "w1"): "c2",
            (1, "w2"): "cshared",
        },
        {"w1": "c1", "w2": "cshared"},
    )
    twd = TypedWiringDiagram(wd, (two, two), two, {c: domain for c in cables})
    complete = Relation.complete(two)
    for index in range(3):
        rel = gen_relation(rng, two)
        if rel.is_empty:
            rel = Relation(two, [(a1, a2)])
        got = relations_mod.evaluate_naive(twd, [rel, complete])
        if got != rel:
            record(
                "witness-passthrough",
                index,
                f"input {sorted(rel.tuples)} gave {sorted(got.tuples)}",
            )

    cases = 2 + 4 + 1 + 3
    return SuiteReport("prop-witnesses", cases, tuple(failures))


def is_connected(wd: WiringDiagram) -> bool:
    """Exactly one connected component in the star-cable incidence graph.

    Inner stars and cables are the nodes; every soldered inner wire is an
    edge.  The empty diagram has no components, hence is not connected.
    """
    nodes: set = {("c", c) for c in wd.cables} | {("s", i) for i in range(wd.arity)}
    if not nodes:
        return False
    adjacency: dict = {n: set() for n in nodes}
    for (i, _w), c in wd.inner_map.items():
        adjacency[("s", i)].add(("c", c))
        adjacency[("c", c)].add(("s", i))
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        node = stack.pop()
        for nxt in adjacency[node]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen == nodes


def run_all(cfg: GeneratorConfig, domains: Sequence[ValueDomain] | None = None) -> list[SuiteReport]:
    """Every suite at one configuration, for the command line."""
    if domains is None:
        domains = [
            ValueDomain("A2", (0, 1)),
            ValueDomain("A3", (0, 1, 2)),
        ]
    reports = check_operad_laws(cfg)
    reports.append(check_pushout_oracle(cfg))
    reports.append(check_algebra_naturality(cfg, "rel"))
    reports.append(check_algebra_naturality(cfg, "eq"))
    for dom in domains:
        reports.append(check_prop_witnesses(dom, seed=cfg.seed))
    return reports
