import random

import pytest

import wiring.relations as relations_mod
import wiring.stars as stars_mod
from wiring.laws import (
    GeneratorConfig,
    check_algebra_naturality,
    check_operad_laws,
    check_prop_witnesses,
    check_pushout_oracle,
    gen_diagram,
    gen_relation,
    gen_two_level,
    gen_typed,
    is_connected,
    run_all,
)
from wiring.stars import Star, WiringDiagram, compose, identity_diagram
from wiring.typed import ValueDomain


class TestGenerators:
    def test_same_seed_same_sequence(self):
        cfg = GeneratorConfig(seed=77)
        a, b = cfg.rng(), cfg.rng()
        for _ in range(50):
            x, y = gen_diagram(a, cfg), gen_diagram(b, cfg)
            assert x.inner_map == y.inner_map and x.outer_map == y.outer_map

    def test_generated_diagrams_validate(self):
        # construction runs the full validator, so surviving it is the test
        cfg = GeneratorConfig(seed=78)
        rng = cfg.rng()
        for _ in range(200):
            wd = gen_diagram(rng, cfg)
            assert wd.arity <= cfg.max_stars
            assert len(wd.cables) <= cfg.max_cables

    def test_generated_relations_are_well_typed(self):
        cfg = GeneratorConfig(seed=79)
        rng = cfg.rng()
        for _ in range(100):
            twd = gen_typed(rng, cfg)
            for tstar in twd.inner:
                gen_relation(rng, tstar)  # constructor validates

    def test_negative_bounds_rejected(self):
        with pytest.raises(ValueError):
            GeneratorConfig(cases=-1)


class TestSuiteBehavior:
    def test_zero_cases_empty_report(self):
        for report in check_operad_laws(GeneratorConfig(seed=1, cases=0)):
            assert report.cases == 0 and report.ok

    def test_default_configuration_passes(self):
        for report in run_all(GeneratorConfig(seed=5, cases=60)):
            assert report.ok, report.format()

    def test_deterministic_reports(self):
        cfg = GeneratorConfig(seed=13, cases=40)
        assert run_all(cfg) == run_all(cfg)


def corrupted_compose(outer_wd, inner_wds):
    """Composition that forgets floating cables and misroutes one wire."""
    result = compose(outer_wd, inner_wds)
    floating = result.floating_cables()
    if floating:
        return WiringDiagram(
            result.inner,
            result.outer,
            tuple(c for c in result.cables if c != floating[0]),
            result.inner_map,
            result.outer_map,
        )
    if result.inner_map and len(result.cables) > 1:
        key = sorted(result.inner_map)[0]
        wrong = next(c for c in result.cables if c != result.inner_map[key])
        return WiringDiagram(
            result.inner,
            result.outer,
            result.cables,
            {**result.inner_map, key: wrong},
            result.outer_map,
        )
    return result


class TestMutationSensitivity:
    def test_corrupted_compose_detected(self, monkeypatch):
        monkeypatch.setattr(stars_mod, "compose", corrupted_compose)
        reports = check_operad_laws(GeneratorConfig(seed=2, cases=40))
        assert any(not r.ok for r in reports)

    def test_corrupted_compose_detected_by_pushout_oracle(self, monkeypatch):
        monkeypatch.setattr(stars_mod, "compose", corrupted_compose)
        report = check_pushout_oracle(GeneratorConfig(seed=2, cases=40))
        assert not report.ok

    def test_corrupted_evaluate_detected_by_witnesses(self, monkeypatch):
        real = relations_mod.evaluate_naive

        def corrupted(twd, rels, **kwargs):
            result = real(twd, rels, **kwargs)
            if result.is_empty and twd.arity:
                from wiring.relations import Relation

                return Relation.complete(result.star)
            return result

        monkeypatch.setattr(relations_mod, "evaluate_naive", corrupted)
        report = check_prop_witnesses(ValueDomain("A", (0, 1)))
        assert not report.ok

    def test_shrunk_counterexample_still_fails(self, monkeypatch):
        monkeypatch.setattr(stars_mod, "compose", corrupted_compose)
        report = check_pushout_oracle(GeneratorConfig(seed=2, cases=40))
        assert report.failures
        # minimality: the recorded case is tiny
        description = report.failures[0].description
        assert "TwoLevelStack" in description


class TestShrinker:
    def test_shrinks_to_minimal_failing_case(self):
        from wiring.laws import _two_level_variants, shrink

        rng = random.Random(3)
        cfg = GeneratorConfig(seed=3)
        # failure predicate: composite has at least one floating cable;
        # minimal such stacks cannot drop anything and stay failing
        def fails(stack):
            return bool(compose(stack.outer, stack.fillers).floating_cables())

        found = None
        for _ in range(200):
            stack = gen_two_level(rng, cfg)
            if fails(stack):
                found = stack
                break
        assert found is not None
        small = shrink(found, _two_level_variants, fails)
        assert fails(small)
        for variant in _two_level_variants(small):
            try:
                assert not fails(variant)
            except Exception:
                continue


class TestWitnesses:
    def test_all_hold_for_two_and_three_values(self):
        for values in ((0, 1), (0, 1, 2)):
            report = check_prop_witnesses(ValueDomain("A", values))
            assert report.ok and report.cases == 10

    def test_single_value_domain_skips(self):
        report = check_prop_witnesses(ValueDomain("A", (0,)))
        assert report.cases == 0
        assert report.skipped


class TestIsConnected:
    def test_identity_on_nonempty_star(self):
        assert is_connected(identity_diagram(Star(["a", "b"])))

    def test_two_disjoint_subdiagrams(self):
        wd = WiringDiagram(
            inner=(Star(["a"]), Star(["b"])),
            outer=Star([]),
            cables=("c", "d"),
            inner_map={(0, "a"): "c", (1, "b"): "d"},
            outer_map={},
        )
        assert not is_connected(wd)

    def test_floating_cable_disconnects(self):
        base = identity_diagram(Star(["a"]))
        wd = WiringDiagram(
            base.inner, base.outer, base.cables + ("f",), base.inner_map, base.outer_map
        )
        assert not is_connected(wd)

    def test_empty_diagram_is_not_connected(self):
        assert not is_connected(WiringDiagram((), Star([]), (), {}, {}))

    def test_composition_preserves_connectivity(self):
        # connected fillers in a connected outer diagram, with nonempty
        # interface stars, compose to a connected diagram
        rng = random.Random(37)
        cfg = GeneratorConfig(seed=37)
        checked = 0
        while checked < 120:
            outer = gen_diagram(rng, cfg)
            if any(len(s) == 0 for s in outer.inner) or not is_connected(outer):
                continue
            fillers = [gen_diagram(rng, cfg, outer=y) for y in outer.inner]
            if not all(is_connected(f) for f in fillers):
                continue
            assert is_connected(compose(outer, fillers))
            checked += 1
