"""The ``wd`` command line tool.

Subcommands: ``check`` validates a script and its CSV data, ``eval`` runs a
named query or union, ``query`` runs an inline SELECT expression, ``dot``
renders a diagram or compiled query, ``fixpoint`` runs a recursion setup,
``laws`` runs the random law suites.

Exit status: 0 on success, 1 for user errors (bad scripts, missing files,
unknown names), 2 for internal invariant violations (law failures or
unexpected exceptions).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import IO, Mapping

from . import csvio, dsl, relations
from .errors import WiringError
from .laws import GeneratorConfig, run_all
from .query import compile_query, evaluate_query
from .recursion import build_setup, fixed_point
from .relations import Relation


def _load_script(path: str) -> tuple[dsl.Script, str]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise WiringError(f"cannot read {path}: {exc}") from exc
    return dsl.parse_script(text), os.path.dirname(os.path.abspath(path))


def _load_relations(script: dsl.Script, base_dir: str) -> dict[str, Relation]:
    loaded: dict[str, Relation] = {}
    for name, decl in script.relations.items():
        path = os.path.join(base_dir, decl.path)
        loaded[name] = csvio.load_csv_relation(path, decl.star)
    loaded.update(script.consts)
    return loaded


def _resolve_result(
    script: dsl.Script, rels: Mapping[str, Relation], name: str
) -> Relation:
    if name in script.queries:
        return evaluate_query(compile_query(script.queries[name], script), rels)
    if name in script.unions:
        parts = [
            _resolve_result(script, rels, part)
            for part in script.unions[name].parts
        ]
        result = parts[0]
        for part in parts[1:]:
            result = relations.union(result, part)
        return result
    raise WiringError(f"no query or union named {name!r}")


def _open_out(path: str | None) -> IO[str]:
    return open(path, "w", encoding="utf-8") if path else sys.stdout


def _write_result(result: Relation, out: str | None) -> None:
    handle = _open_out(out)
    try:
        csvio.write_relation_csv(result, handle)
    finally:
        if out:
            handle.close()


def cmd_check(args) -> int:
    script, base_dir = _load_script(args.script)
    rels = _load_relations(script, base_dir)
    compiled = {
        name: compile_query(q, script) for name, q in script.queries.items()
    }
    counts = (
        f"{len(script.domains)} types, {len(script.stars)} stars, "
        f"{len(rels)} relations, {len(script.diagrams)} diagrams, "
        f"{len(compiled)} queries, {len(script.unions)} unions, "
        f"{len(script.setups)} setups"
    )
    print(f"{args.script}: ok ({counts})")
    return 0


def cmd_eval(args) -> int:
    script, base_dir = _load_script(args.script)
    rels = _load_relations(script, base_dir)
    result = _resolve_result(script, rels, args.name)
    _write_result(result, args.out)
    return 0


def cmd_query(args) -> int:
    script, base_dir = _load_script(args.script)
    rels = _load_relations(script, base_dir)
    query = dsl.parse_query_text(args.text, script)
    result = evaluate_query(compile_query(query, script), rels)
    _write_result(result, args.out)
    return 0


def cmd_dot(args) -> int:
    from .dot import emit_dot

    script, _base_dir = _load_script(args.script)
    if args.name in script.diagrams:
        diagram = script.diagrams[args.name].typed
    elif args.name in script.queries:
        diagram = compile_query(script.queries[args.name], script).diagram
    else:
        raise WiringError(f"no diagram or query named {args.name!r}")
    text = emit_dot(diagram, name=args.name)
    handle = _open_out(args.out)
    try:
        handle.write(text)
    finally:
        if args.out:
            handle.close()
    return 0


def cmd_fixpoint(args) -> int:
    script, base_dir = _load_script(args.script)
    if args.name not in script.setups:
        raise WiringError(f"no setup named {args.name!r}")
    decl = script.setups[args.name]
    rels = _load_relations(script, base_dir)
    phi = script.diagrams[decl.diagram_name].typed
    setup = build_setup(decl.z, phi, [rels[r] for r in decl.rel_names])
    mode = {"gfp": "greatest", "lfp": "least"}[args.mode]
    result = fixed_point(setup, mode)
    _write_result(result.relation, args.out)
    print(
        f"{args.name}: mode={args.mode} tuples={len(result.relation)} "
        f"iterations={result.iterations}",
        file=sys.stderr,
    )
    return 0


def cmd_laws(args) -> int:
    cfg = GeneratorConfig(seed=args.seed, cases=args.cases)
    reports = run_all(cfg)
    for report in reports:
        print(report.format())
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as handle:
            for report in reports:
                handle.write(
                    f"{report.name}\t{report.cases}\t{len(report.failures)}\n"
                )
    failures = sum(len(r.failures) for r in reports)
    print(f"total: {failures} failures")
    return 2 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wd", description="wiring diagram scripts: validate, run, render"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse a script and load its data")
    p.add_argument("script")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="evaluate a named query or union")
    p.add_argument("script")
    p.add_argument("name")
    p.add_argument("--out", help="write result CSV here instead of stdout")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("query", help="evaluate an inline SELECT expression")
    p.add_argument("script")
    p.add_argument("text", help="e.g. \"SELECT a.x FROM r a WHERE a.y = 'v'\"")
    p.add_argument("--out")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("dot", help="render a diagram or query as DOT")
    p.add_argument("script")
    p.add_argument("name")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("fixpoint", help="run a recursion setup to a fixed point")
    p.add_argument("script")
    p.add_argument("name")
    p.add_argument("--mode", choices=("gfp", "lfp"), default="gfp")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fixpoint)

    p = sub.add_parser("laws", help="run the random law suites")
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--summary", help="write a machine-readable summary here")
    p.set_defaults(func=cmd_laws)

    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except WiringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # internal invariant violation
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
