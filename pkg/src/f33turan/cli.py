"""Command-line entry point: ``f33turan <command> ...``.

JSON goes to stdout, a one-line summary to stderr. Exit codes: 0 pass,
1 fail, 2 usage or input error, 3 incomplete (a node limit cut a search).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Callable

from . import constructions as cons
from .hypergraph import HypergraphError, ThreeGraph, format_edge_list, parse_edge_list
from .lemma import LemmaSearchConfig, max_feasible_edges, sample_feasible, verify_feasible
from .link import (
    build_link,
    find_common_color_triangle,
    format_multigraph,
    high_multiplicity_graph,
    max_triple_sum,
)
from .patterns import contains_F33, find_t_triple

SCHEMA = 1
EXIT = {"pass": 0, "fail": 1, "incomplete": 3}


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    command: str
    status: str
    payload: dict
    elapsed: float = 0.0
    summary: str = ""

    def document(self) -> dict:
        return {"schema": SCHEMA, "command": self.command, "status": self.status, "payload": self.payload}


def _read_graph(path: str) -> ThreeGraph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, newline="") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_edge_list(text)
    except HypergraphError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _edge_list_json(g: ThreeGraph) -> dict:
    return {"n": g.n, "m": g.num_edges, "edges": [list(e) for e in g.edges], "text": format_edge_list(g)}


def cmd_construct(args) -> CommandResult:
    kind, n = args.kind, args.n
    if kind == "f33":
        g = cons.make_F33()
    elif kind in ("bipartite", "complete"):
        if n is None:
            raise UsageError(f"construct {kind} needs --n")
        g = cons.make_bipartite_B(n) if kind == "bipartite" else cons.make_complete(n)
    else:
        if n is None:
            raise UsageError(f"construct {kind} needs --n")
        maker = {"m1": cons.make_M1, "m2": cons.make_M2, "m3": cons.make_M3_fourpart}[kind]
        m = maker(n)
        payload = {
            "object": kind,
            "n": n,
            "total": m.total,
            "m_n": cons.count_m(n),
            "pairs": [[u, v, w] for (u, v), w in sorted(m.weights.items())],
            "text": format_multigraph(m),
        }
        return CommandResult("construct", "pass", payload, summary=f"{kind}({n}): e = {m.total}")
    payload = {"object": kind, **_edge_list_json(g)}
    if kind == "bipartite":
        payload["b_n"] = cons.count_b(n)
    return CommandResult("construct", "pass", payload, summary=f"{kind}: n = {g.n}, e = {g.num_edges}")


def cmd_check(args) -> CommandResult:
    g = _read_graph(args.input)
    w = contains_F33(g, workers=args.threads)
    payload = {"n": g.n, "m": g.num_edges, "f33_free": w is None, "witness": None if w is None else w.to_json()}
    status = "pass" if w is None else "fail"
    return CommandResult("check", status, payload, summary="F33-free" if w is None else f"contains F33 at {w.image}")


def cmd_link(args) -> CommandResult:
    g = _read_graph(args.input)
    try:
        s = [int(t) for t in args.set.split(",") if t.strip()]
        cm = build_link(g, s)
    except (ValueError, HypergraphError) as exc:
        raise UsageError(f"bad --set: {exc}") from exc
    mg = cm.multigraph()
    payload = {"link": cm.to_json(), "total": mg.total}
    if cm.n >= 3:
        best, arg = max_triple_sum(mg)
        payload["max_triple_sum"] = {"value": best, "triple": list(arg)}
    tri = find_common_color_triangle(cm, 3)
    payload["common_color_triangle"] = None if tri is None else {"triple": list(tri[0]), "colors": sorted(tri[1])}
    j = high_multiplicity_graph(cm, 3)
    payload["high_multiplicity"] = {"threshold": 3, "pairs": [list(p) for p in j.sorted_pairs()], "clique_number": j.clique_number()}
    return CommandResult("link", "pass", payload, summary=f"link of {sorted(s)}: e = {mg.total}")


def cmd_lemma_max(args) -> CommandResult:
    try:
        cfg = LemmaSearchConfig(
            args.n,
            pair_cap=args.pair_cap,
            triple_cap=args.triple_cap,
            symmetry_reduction=not args.no_symmetry,
            node_limit=args.node_limit,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    cert = max_feasible_edges(cfg, workers=args.threads)
    payload = cert.to_json()
    payload["m_n"] = cons.count_m(args.n)
    payload["maximizer_feasible"] = verify_feasible(cert.maximizer, cfg)
    if not cert.proven_exhaustive:
        status = "incomplete"
    elif cert.optimum == payload["m_n"] and payload["maximizer_feasible"]:
        status = "pass"
    else:
        status = "fail"
    return CommandResult("lemma-max", status, payload, summary=f"n={args.n}: optimum {cert.optimum}, m(n) = {payload['m_n']}")


def cmd_lemma_sample(args) -> CommandResult:
    cfg = LemmaSearchConfig(max(args.n, 1))
    bound = cons.count_m(args.n)
    totals = []
    violations = 0
    for m in sample_feasible(args.n, args.trials, args.seed):
        totals.append(m.total)
        if m.total > bound or not verify_feasible(m, cfg):
            violations += 1
    payload = {
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "m_n": bound,
        "max_total": max(totals),
        "violations": violations,
    }
    status = "pass" if violations == 0 else "fail"
    return CommandResult("lemma-sample", status, payload, summary=f"max sampled e = {max(totals)} vs m(n) = {bound}")


def cmd_turan(args) -> CommandResult:
    from .turan import audit_certificate, enumerate_extremal, exact_turan

    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.enumerate and args.n > 7:
        raise UsageError("--enumerate is limited to n <= 7")
    cert = exact_turan(args.n, node_limit=args.node_limit)
    payload = cert.to_json()
    audit = audit_certificate(cert)
    payload["audit"] = audit.reason
    if args.enumerate:
        classes = enumerate_extremal(args.n)
        payload["extremal_classes"] = len(classes)
        payload["extremal"] = [[list(e) for e in g.edges] for g in classes]
    if not cert.proven_exhaustive:
        status = "incomplete"
    else:
        status = "pass" if audit.ok else "fail"
    return CommandResult("turan", status, payload, summary=f"ex({args.n}, F33) = {cert.optimum}, b(n) = {payload['b_n']}")


def cmd_identities(args) -> CommandResult:
    try:
        rep = cons.check_identities(args.max_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    status = "pass" if rep.passed else "fail"
    return CommandResult("identities", status, rep.to_json(), summary=f"identities up to n={args.max_n}: {status}")


def cmd_t_triple(args) -> CommandResult:
    g = _read_graph(args.input)
    found = find_t_triple(g)
    if found is None:
        payload = {"n": g.n, "t_triple": None}
    else:
        tri, wit = found
        payload = {
            "n": g.n,
            "t_triple": list(tri),
            "witnesses": [{"pair": list(p), "abc": list(abc)} for p, abc in sorted(wit.items())],
        }
    return CommandResult("t-triple", "pass", payload, summary="no t-triple" if found is None else f"t-triple {found[0]}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="f33turan", description="Exact Turán computations for F33.")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker cap (default: all cores)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a named 3-graph or multigraph")
    c.add_argument("kind", choices=["f33", "bipartite", "complete", "m1", "m2", "m3"])
    c.add_argument("--n", type=int)
    c.add_argument("--format", choices=["json", "text"], default="json")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("check", help="pattern checks on an edge-list file")
    c.add_argument("what", choices=["f33-free"])
    c.add_argument("--input", required=True)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("link", help="colored link multigraph of a vertex set")
    c.add_argument("--input", required=True)
    c.add_argument("--set", required=True, help="comma-separated apex vertices")
    c.set_defaults(func=cmd_link)

    c = sub.add_parser("lemma-max", help="exhaustive maximum of e(M) under pair/triple caps")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--pair-cap", type=int, default=4)
    c.add_argument("--triple-cap", type=int, default=10)
    c.add_argument("--node-limit", type=int)
    c.add_argument("--no-symmetry", action="store_true")
    c.set_defaults(func=cmd_lemma_max)

    c = sub.add_parser("lemma-sample", help="seeded random feasible multigraphs against m(n)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--trials", type=int, required=True)
    c.add_argument("--seed", type=int, required=True)
    c.set_defaults(func=cmd_lemma_sample)

    c = sub.add_parser("turan", help="exact ex(n, F33) by hitting-set branch-and-bound")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--enumerate", action="store_true")
    c.add_argument("--node-limit", type=int)
    c.set_defaults(func=cmd_turan)

    c = sub.add_parser("identities", help="check the b(n)/m(n) identity families")
    c.add_argument("--max-n", type=int, required=True)
    c.set_defaults(func=cmd_identities)

    c = sub.add_parser("t-triple", help="find a t-triple in an edge-list file")
    c.add_argument("--input", required=True)
    c.set_defaults(func=cmd_t_triple)
    return p


def run(argv: list[str] | None = None, out=None, err=None) -> tuple[CommandResult | None, int]:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return None, int(exc.code or 0)
    func: Callable = args.func
    start = time.perf_counter()
    try:
        result = func(args)
    except UsageError as exc:
        print(f"f33turan {args.command}: error: {exc}", file=err)
        return None, 2
    result.elapsed = (time.perf_counter() - start) * 1000.0
    if args.command == "construct" and args.format == "text":
        out.write(result.payload["text"])
    else:
        out.write(json.dumps(result.document()) + "\n")
    print(f"[{result.status}] {result.summary} ({result.elapsed:.1f} ms)", file=err)
    return result, EXIT[result.status]


def main(argv: list[str] | None = None) -> int:
    return run(argv)[1]


if __name__ == "__main__":
    sys.exit(main())
