"""Command-line front end.

Exit codes: 0 success, 1 I/O or usage error, 2 some input lines were
malformed, 3 a must-pass verification failed.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path
from typing import Any, Callable, Iterable, TextIO

from dgqs.audit import Criterion, verify_paper
from dgqs.certify import (
    FAILS,
    certify_dgqs,
    verify_constant_term,
    verify_det_formula,
    verify_lemma_maintool,
    verify_qcharpoly_factorization,
    verify_tower_det,
)
from dgqs.factor import DEFAULT_BUDGET
from dgqs.graph import Graph, Graph6Error, GraphError, parse_graph6, read_graph6_lines, rooted_tower, to_graph6
from dgqs.search import (
    WORKERS_ENV,
    CatalogError,
    GraphCatalog,
    brute_force_dgqs,
    enumerate_graphs,
    find_seeds,
    load_catalog,
    two_adic_survey,
)
from dgqs.store import ReportStore, build_manifest, dumps, record_key

EXIT_OK, EXIT_IO, EXIT_PARTIAL, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _open_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    return Path(path).read_text(encoding="utf-8").splitlines()


def _digest(lines: Iterable[str]) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.strip().encode() + b"\n")
    return h.hexdigest()


def _parse_inline(text: str) -> Graph:
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise UsageError(f"bad graph6 {text!r}: {exc}") from None


def _catalog(args: argparse.Namespace, n: int | None) -> GraphCatalog:
    if getattr(args, "catalog", None):
        return load_catalog(_open_lines(args.catalog), source=f"graph6 file {args.catalog}")
    if n is None:
        raise UsageError("order unknown: pass --n or --catalog")
    return enumerate_graphs(n)


def _emit(
    args: argparse.Namespace,
    manifest: dict[str, Any],
    records: list[tuple[dict[str, Any], dict[str, Any]]],
    table: Callable[[dict[str, Any]], str],
) -> None:
    """Write ``(key, value)`` records to stdout/--out and the optional store."""
    fmt = args.format
    if fmt == "json":
        text = json.dumps({"manifest": manifest, "results": [v for _, v in records]}, indent=2, sort_keys=True) + "\n"
    elif fmt == "jsonl":
        text = "".join(dumps(x) + "\n" for x in [{"manifest": manifest}] + [v for _, v in records])
    else:
        text = "".join(table(v) + "\n" for _, v in records)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        Path(args.out + ".manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                                                     encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.store:
        store = ReportStore(args.store)
        for key, value in records:
            store.put(key, value, manifest["id"])
        store.save()


# -- subcommands --------------------------------------------------------------


def cmd_certify(args: argparse.Namespace) -> int:
    lines: list[tuple[str, str]] = []
    if args.input:
        try:
            lines += [(f"{args.input}:{i}", ln) for i, ln in enumerate(_open_lines(args.input), 1)]
        except OSError as exc:
            print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
            return EXIT_IO
    lines += [(f"--g[{i}]", g) for i, g in enumerate(args.g or [])]
    if not lines:
        raise UsageError("no input graphs: use --in PATH, --in - or --g GRAPH6")
    records = []
    bad = 0
    for where, text in lines:
        if not text.strip():
            continue
        try:
            g = parse_graph6(text.strip())
        except Graph6Error as exc:
            bad += 1
            print(f"error: {where}: {exc}", file=sys.stderr)
            records.append((record_key(None, "parse-error", {"line": where}),
                            {"line": where, "error": str(exc)}))
            continue
        cert = certify_dgqs(g, args.budget, args.exponent_variant).to_json()
        cert["input"] = to_graph6(g)
        params = {"variant": args.exponent_variant, "budget": args.budget}
        records.append((record_key(cert["graph"], "certify", params), cert))
    manifest = build_manifest("certify", {"exponent_variant": args.exponent_variant, "budget": args.budget},
                              {"lines_sha256": _digest(t for _, t in lines), "lines": len(lines)})

    def table(v: dict[str, Any]) -> str:
        if "error" in v:
            return f"{v['line']}\tERROR\t{v['error']}"
        return (f"{v['graph']}\tn={v['order']}\tdet_WQ={v['det_WQ']}\t2^{v['exponent']}"
                f"\tr={v['reduced']}\t{v['verdict']}")

    _emit(args, manifest, records, table)
    return EXIT_PARTIAL if bad else EXIT_OK


def cmd_verify_paper(args: argparse.Namespace) -> int:
    def progress(c: Criterion) -> None:
        print(c.line(), file=sys.stderr, flush=True)

    # the table on stdout already shows each line unless it goes to --out
    live = args.format != "table" or bool(args.out)
    results = verify_paper(quick=args.quick, on_result=progress if live else None)
    manifest = build_manifest("verify-paper", {"quick": args.quick})
    records = [(record_key(None, f"criterion-{c.number}", {"quick": args.quick}), c.to_json()) for c in results]
    _emit(args, manifest, records, lambda v: f"[{'PASS' if v['passed'] else 'FAIL'}] {v['criterion']}. "
                                             f"{v['name']} ({v['kind']}): {v['summary']}")
    if not all(c.complete for c in results):
        print("warning: bundle incomplete", file=sys.stderr)
    return EXIT_OK if all(c.passed for c in results) else EXIT_VERIFY


def cmd_rooted_product(args: argparse.Namespace) -> int:
    g = _parse_inline(args.g)
    h = rooted_tower(g, args.k, args.t)
    manifest = build_manifest("rooted-product", {"k": args.k, "t": args.t}, {"graph": args.g})
    value = {"base": args.g, "k": args.k, "t": args.t, "order": h.order, "edges": h.size, "graph6": to_graph6(h)}
    _emit(args, manifest, [(record_key(args.g, "rooted-product", {"k": args.k, "t": args.t}), value)],
          lambda v: v["graph6"])
    return EXIT_OK


def cmd_find_seeds(args: argparse.Namespace) -> int:
    catalog = _catalog(args, args.n)
    n = catalog.order
    result = find_seeds(n, catalog, budget=args.budget).to_json()
    manifest = build_manifest("find-seeds", {"n": n, "budget": args.budget}, {"catalog_sha256": catalog.digest()})
    _emit(args, manifest, [(record_key(None, "find-seeds", {"n": n}), result)],
          lambda v: f"n={v['order']} seeds={v['seeds_found']} ({v['scope']}"
                    f"{', exhaustive' if v['exhaustive'] else ''}); det clause only: {v['det_clause_only_count']}, "
                    f"a0 clause only: {v['a0_clause_only_count']}\n{v['finding']}")
    return EXIT_OK


def cmd_mates(args: argparse.Namespace) -> int:
    g = _parse_inline(args.g)
    catalog = _catalog(args, g.order)
    report = brute_force_dgqs(g, catalog).to_json()
    manifest = build_manifest("mates", {}, {"graph": args.g, "catalog_sha256": catalog.digest()})
    _emit(args, manifest, [(record_key(report["subject"], "mates", {}), report)],
          lambda v: f"{v['subject']}: {v['verdict']}; mates: {', '.join(v['mates']) or 'none'} ({v['scope']})")
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    catalog = _catalog(args, args.n)
    result = two_adic_survey(catalog.order, catalog).to_json()
    manifest = build_manifest("survey", {"n": catalog.order}, {"catalog_sha256": catalog.digest()})

    def table(v: dict[str, Any]) -> str:
        hist = " ".join(f"{k}:{c}" for k, c in v["valuation_histogram"].items())
        a0 = " ".join(f"{k}:{c}" for k, c in v["a0_Q_values"].items())
        return (f"n={v['order']} ({v['scope']})\nv2(det W_Q): {hist}\nmin valuation: {v['min_valuation']} "
                f"(lemma exponent {v['lemma_exponent']}, intro exponent {v['intro_exponent']})\n"
                f"a0(Q): {a0}\n|a0(Q)| = 2 occurs: {v['abs_a0_Q_equals_2_occurs']}")

    _emit(args, manifest, [(record_key(None, "survey", {"n": catalog.order}), result)], table)
    return EXIT_OK


CHECKS = {
    "det-formula": lambda g, a: verify_det_formula(g, a.k, a.matrix),
    "maintool": lambda g, a: verify_lemma_maintool(g, a.k),
    "factorization": lambda g, a: verify_qcharpoly_factorization(g, a.k),
    "tower": lambda g, a: verify_tower_det(g, a.k, a.t, waive_hypothesis=a.waive),
    "constant-term": lambda g, a: verify_constant_term(g, a.k, a.t, waive_hypothesis=a.waive),
}


def cmd_check(args: argparse.Namespace) -> int:
    g = _parse_inline(args.g)
    names = list(CHECKS) if args.theorem == "all" else [args.theorem]
    records = []
    failed = False
    for name in names:
        chk = CHECKS[name](g, args)
        failed |= chk.verdict == FAILS
        params = {"k": args.k, "t": args.t, "waive": args.waive}
        records.append((record_key(chk.inputs["graph"], chk.theorem, params), chk.to_json()))
    manifest = build_manifest("check", {"k": args.k, "t": args.t, "theorems": names}, {"graph": args.g})
    _emit(args, manifest, records,
          lambda v: f"{v['theorem']}\t{v['verdict']}\tlhs={v['lhs'] if not isinstance(v['lhs'], list) else 'poly'}"
                    f"\trhs={v['rhs'] if not isinstance(v['rhs'], list) else 'poly'}\tsign={v['sign']}")
    return EXIT_VERIFY if failed else EXIT_OK


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dgqs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, default_format: str = "table") -> None:
        sp.add_argument("--format", choices=("table", "json", "jsonl"), default=default_format)
        sp.add_argument("--out", help="write results here (plus <out>.manifest.json)")
        sp.add_argument("--store", help="JSONL report store; records are replaced by key")
        sp.add_argument("--workers", type=int, help=f"worker processes (default ${WORKERS_ENV} or 1)")

    sp = sub.add_parser("certify", help="walk-matrix DGQS certificates")
    sp.add_argument("--in", dest="input", help="graph6 file, or - for standard input")
    sp.add_argument("--g", action="append", help="inline graph6 (repeatable)")
    sp.add_argument("--exponent-variant", choices=("lemma", "intro"), default="lemma")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="Pollard rho iteration budget")
    common(sp)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("verify-paper", help="run every acceptance check")
    sp.add_argument("--quick", action="store_true", help="small orders only")
    common(sp)
    sp.set_defaults(func=cmd_verify_paper)

    sp = sub.add_parser("rooted-product", help="emit G o P_k^t as graph6")
    sp.add_argument("--g", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_rooted_product)

    sp = sub.add_parser("find-seeds", help="search a catalog for seed graphs")
    sp.add_argument("--n", type=int)
    sp.add_argument("--catalog", help="graph6 catalog file instead of built-in enumeration")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common(sp)
    sp.set_defaults(func=cmd_find_seeds)

    sp = sub.add_parser("mates", help="generalized Q-cospectral mates")
    sp.add_argument("--g", required=True)
    sp.add_argument("--catalog")
    common(sp)
    sp.set_defaults(func=cmd_mates)

    sp = sub.add_parser("survey", help="2-adic valuation and a_0 survey")
    sp.add_argument("--n", type=int)
    sp.add_argument("--catalog")
    common(sp)
    sp.set_defaults(func=cmd_survey)

    sp = sub.add_parser("check", help="theorem checks on one graph")
    sp.add_argument("--g", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--theorem", choices=("all", *CHECKS), default="all")
    sp.add_argument("--matrix", choices=("q", "adjacency"), default="q")
    sp.add_argument("--waive", action="store_true", help="skip seed preconditions (diagnostic)")
    common(sp)
    sp.set_defaults(func=cmd_check)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers:
        os.environ[WORKERS_ENV] = str(args.workers)
    try:
        return args.func(args)
    except (UsageError, GraphError, CatalogError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
