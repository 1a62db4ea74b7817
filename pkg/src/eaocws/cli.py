"""Command-line front end: ``eaocws search | verify | reproduce``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import reference as ref
from .certificate import CertificateError, code_to_json, dumps, read_certificate, record_verification
from .clique import Budget
from .pipeline import find_code, find_ring_code, reproduce_cell, reproduce_example, table_cells
from .structure import CodeLayout, Graph, LayoutError, ring_graph
from .verify import DenseError, dense_verify, symplectic_verify

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_CODE = 3
EXIT_VERIFY_FAILED = 4
EXIT_DENSE_CAP = 5
EXIT_BAD_CERTIFICATE = 6

MODE_CHOICES = {
    "detect": ("detect", "pairs"),
    "correct": ("correct", "pairs"),
    "correct-single": ("correct", "single"),
}
DEFAULT_TABLE_SUBSET = {1: [(5, 2), (6, 3), (7, 1)], 2: None}


@dataclass
class RunConfig:
    command: str
    n: int
    c: int
    r: int
    d: int
    graph: str = "ring"
    mode: str = "detect"
    budget: float | None = 600.0
    seed: int = 0
    out: str | None = None
    verify: str | None = None

    def layout(self) -> CodeLayout:
        if self.d < 1:
            raise LayoutError("d must be at least 1")
        return CodeLayout(self.n, self.c, self.r)


def load_graph(source: str, n: int) -> Graph:
    """``ring`` or a file holding a JSON edge list or a 0/1 adjacency matrix."""
    if source == "ring":
        return ring_graph(n)
    text = Path(source).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        doc = None
    if isinstance(doc, dict):
        graph = Graph.from_edges(int(doc["vertices"]), [tuple(e) for e in doc["edges"]])
    elif isinstance(doc, list):
        graph = Graph(np.array(doc, dtype=np.uint8))
    else:
        graph = Graph(np.loadtxt(source, dtype=np.uint8, ndmin=2))
    if graph.vertex_count != n:
        raise LayoutError(f"graph has {graph.vertex_count} vertices, expected n={n}")
    return graph


def _emit(report: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(lines))


def _run_verifiers(code, which: str, d: int):
    certs = []
    if which in ("symplectic", "both"):
        certs.append(symplectic_verify(code, d))
    if which in ("dense", "both"):
        certs.append(dense_verify(code, d))
    return certs


def _cert_lines(certs) -> list[str]:
    lines = []
    for c in certs:
        line = f"  {c.method:<11} d={c.d} weight<={c.weight} errors={c.checked} -> {c.verdict}"
        if c.max_residual is not None:
            line += f" (max residual {c.max_residual:.2e})"
        lines.append(line)
        for w in c.witnesses[:3]:
            lines.append(f"    witness: {json.dumps(w)}")
    return lines


def cmd_search(args) -> int:
    cfg = RunConfig("search", args.n, args.c, args.r, args.d, args.graph, args.mode,
                    args.budget, args.seed, args.out, args.verify)
    try:
        layout = cfg.layout()
        graph = load_graph(cfg.graph, cfg.n)
    except (LayoutError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    mode, degeneracy = MODE_CHOICES[cfg.mode]
    budget = Budget(cfg.budget, args.max_nodes)
    kw = dict(distinct_patterns=not args.all_codewords, degeneracy=degeneracy, budget=budget, seed=cfg.seed)
    if args.placement == "best":
        if cfg.graph != "ring":
            print("error: --placement best needs --graph ring", file=sys.stderr)
            return EXIT_USAGE
        outcome = find_ring_code(layout, cfg.d, mode, placement="best", **kw)
    else:
        outcome = find_code(layout, graph, cfg.d, mode, **kw)
    code = outcome.code
    search_info = {"command": "search", "mode": cfg.mode, "graph": cfg.graph, **outcome.summary()}

    certs = []
    status = EXIT_OK
    if cfg.verify:
        try:
            certs = _run_verifiers(code, cfg.verify, cfg.d)
        except DenseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DENSE_CAP
        record_verification(code, certs)
        if not all(c.passed for c in certs):
            status = EXIT_VERIFY_FAILED
    if code.K < max(2, args.target_k):
        status = status or EXIT_NO_CODE

    doc = code_to_json(code, search_info)
    if cfg.out:
        Path(cfg.out).write_text(dumps(doc))
    lines = [
        f"{code.parameters()}  K={code.K}  on {layout} ({cfg.mode})",
        f"codewords: {' '.join(str(w) for w in code.selected_codewords)}",
        f"search: {outcome.codewords.vertices} candidates, {outcome.codewords.nodes} nodes, "
        f"optimal={outcome.codewords.optimal}, budget_exhausted={outcome.budget_exhausted}",
    ]
    if outcome.placement is not None and args.placement == "best":
        lines.append(f"placement: {[p + 1 for p in outcome.placement]} ({outcome.placements_tried} tried)")
    lines += _cert_lines(certs)
    if status == EXIT_NO_CODE:
        lines.append(f"no code with K >= {max(2, args.target_k)} found")
    if cfg.out:
        lines.append(f"certificate written to {cfg.out}")
    _emit({"exit": status, "certificate": doc}, lines, args.json)
    return status


def cmd_verify(args) -> int:
    path = Path(args.certificate)
    try:
        code = read_certificate(path)
    except (CertificateError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CERTIFICATE
    d = args.d if args.d is not None else code.d
    try:
        certs = _run_verifiers(code, args.which, d)
    except DenseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DENSE_CAP
    record_verification(code, certs)
    if not args.no_write:
        doc = json.loads(path.read_text())
        doc["verification"] = code.verification
        path.write_text(dumps(doc))
    ok = all(c.passed for c in certs)
    lines = [f"{code.parameters()} from {path}: {'pass' if ok else 'fail'}"] + _cert_lines(certs)
    _emit({"pass": ok, "verification": code.verification}, lines, args.json)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _parse_cells(text: str | None):
    if not text:
        return None
    return [tuple(int(v) for v in part.split(",")) for part in text.split(";") if part.strip()]


def cmd_reproduce(args) -> int:
    if args.example:
        rep = reproduce_example()
        code = rep.details.pop("code")
        if args.out:
            Path(args.out).write_text(dumps(code_to_json(code)))
        lines = [f"{'match' if ok else 'MISMATCH':<8} {name}" for name, ok in rep.checks.items()]
        sym = rep.details["symplectic_d3"]
        lines.append(f"note: symplectic check of the example at d=3 -> {sym['verdict']}"
                     f" ({sym['violations']} violating errors)")
        _emit({"ok": rep.ok, "checks": rep.checks, "details": rep.details}, lines, args.json)
        return EXIT_OK

    subset = _parse_cells(args.cells) if args.cells else DEFAULT_TABLE_SUBSET[args.table]
    if args.all:
        subset = None
    results = []
    header = f"{'cell (n,c,r,d)':<16}{'ref K':>8}{'found K':>8}  verified  optimal  exhausted"
    if not args.json:
        print(f"table {args.table}, placement={args.placement}, degeneracy={args.degeneracy}")
        print(header, flush=True)
    for n, c, r, d, k in table_cells(args.table, subset):
        budget = Budget(args.budget)
        res = reproduce_cell(n, c, r, d, k, placement=args.placement, degeneracy=args.degeneracy,
                             budget=budget, seed=args.seed)
        results.append(res.to_json())
        mark = "" if res.meets_reference else "  < ref"
        if not args.json:
            print(f"{str((n, c, r, d)):<16}{k:>8}{res.found_K:>8}  {str(res.verified):<9} "
                  f"{str(res.optimal):<8} {str(res.budget_exhausted):<9}{mark}", flush=True)
    if args.json:
        print(json.dumps({"table": args.table, "placement": args.placement,
                          "degeneracy": args.degeneracy, "cells": results}, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eaocws", description="Search, verify and reproduce EAOCWS codes.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("search", help="search for a code and write a certificate")
    s.add_argument("--graph", default="ring", help="'ring' or a graph file (JSON edges or 0/1 matrix)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--c", type=int, default=0)
    s.add_argument("--r", type=int, default=0)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--mode", choices=sorted(MODE_CHOICES), default="detect",
                   help="detect/correct use the pair degeneracy rule; correct-single the single-error rule")
    s.add_argument("--placement", choices=("standard", "best"), default="standard",
                   help="'best' also tries every relabelling of the ring")
    s.add_argument("--all-codewords", action="store_true",
                   help="maximize raw codewords instead of distinct ancilla patterns")
    s.add_argument("--target-k", type=int, default=2, help="smallest K counted as success")
    s.add_argument("--budget", type=float, default=600.0, help="seconds per search")
    s.add_argument("--max-nodes", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", help="certificate path")
    s.add_argument("--verify", nargs="?", const="both", choices=("symplectic", "dense", "both"))
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="re-run verifiers on a certificate")
    v.add_argument("certificate")
    g = v.add_mutually_exclusive_group()
    g.add_argument("--dense", dest="which", action="store_const", const="dense")
    g.add_argument("--symplectic", dest="which", action="store_const", const="symplectic")
    g.add_argument("--both", dest="which", action="store_const", const="both")
    v.add_argument("--d", type=int, help="override the claimed distance")
    v.add_argument("--no-write", action="store_true", help="leave the certificate file untouched")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify, which="both")

    r = sub.add_parser("reproduce", help="replay the ring-6 example or the parameter tables")
    what = r.add_mutually_exclusive_group(required=True)
    what.add_argument("--example", action="store_true")
    what.add_argument("--table", type=int, choices=sorted(ref.TABLES))
    r.add_argument("--cells", help="subset as 'n,c;n,c,r;...' (default: a small subset)")
    r.add_argument("--all", action="store_true", help="every cell of the table")
    r.add_argument("--placement", choices=("standard", "best"), default="standard")
    r.add_argument("--degeneracy", choices=("pairs", "single"), default="pairs")
    r.add_argument("--budget", type=float, default=600.0, help="seconds per cell")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out", help="with --example: write the example certificate here")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
