"""Command line: gen, solve, verify, bench.

solve exit codes: 0 answer (Triangle/TriangleFree/Girth/NoCycle),
2 NotInDomain, 1 malformed input or I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import bench as benchmod
from .corpus import CorpusConfig
from .geometry import (
    NonUnitRadius,
    SitesFormatError,
    adversarial,
    format_sites,
    parse_sites,
    random_sites,
    transmission_graph,
    unit_disk_graph,
)
from .graph import (
    DirectedGraph,
    GraphError,
    UndirectedGraph,
    format_edge_list,
    parse_edge_list,
)
from .oracle import OracleCapExceeded, brute_directed_triangle, brute_girth, brute_triangle
from .outcomes import Girth, NotInDomain, Triangle
from .witness import check_directed_outcome, check_girth_outcome, check_triangle_outcome

EXIT_OK, EXIT_MALFORMED, EXIT_NOT_IN_DOMAIN = 0, 1, 2

GEN_KINDS = ("udg-sites", "tg-sites", "star", "petersen", "dicycle", "bistar")


class InputError(Exception):
    pass


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def load_input(path: str, problem: str):
    """Read an edge list or a sites file and return (graph, construction_ns)."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    first = next((ln.split() for ln in text.splitlines() if ln.strip()), [])
    want_directed = problem == "tg-triangle"
    t0 = time.perf_counter_ns()
    try:
        if len(first) == 1:
            sites = parse_sites(text)
            graph = transmission_graph(sites) if want_directed else unit_disk_graph(sites)
        else:
            graph = parse_edge_list(text)
    except (GraphError, SitesFormatError, NonUnitRadius, ValueError) as exc:
        raise InputError(str(exc)) from None
    dt = time.perf_counter_ns() - t0
    if want_directed and not isinstance(graph, DirectedGraph):
        raise InputError("tg-triangle needs a directed edge list (kind 'd') or a sites file")
    if not want_directed and not isinstance(graph, UndirectedGraph):
        raise InputError(f"{problem} needs an undirected edge list (kind 'u') or a sites file")
    return graph, dt


def result_record(command: str, descriptor: str, problem: str, out, construction_ns: int, query_ns: int, stats) -> dict:
    rec = {
        "command": command,
        "input": descriptor,
        "problem": problem,
        "outcome": out.tag,
        "witness": None,
        "reason": None,
        "construction_ns": construction_ns,
        "query_ns": query_ns,
        "counters": stats.as_dict(),
    }
    if isinstance(out, Triangle):
        rec["witness"] = list(out.vertices)
    elif isinstance(out, Girth):
        rec["witness"] = list(out.cycle)
        rec["girth"] = out.length
    elif isinstance(out, NotInDomain):
        rec["witness"] = list(out.witness)
        rec["reason"] = out.reason.value
        rec["detail"] = out.detail
    return rec


# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    kind = args.kind
    if kind in ("udg-sites", "tg-sites"):
        if args.n is None:
            raise InputError(f"{kind} needs --n")
        box = args.box if args.box is not None else 10.0
        if kind == "udg-sites":
            rr = (1.0, 1.0)
        else:
            rr = (args.rmin, args.rmax)
        try:
            S = random_sites(args.n, box, rr, args.seed)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        _write(format_sites(S), args.output)
        if args.edges:
            G = unit_disk_graph(S) if kind == "udg-sites" else transmission_graph(S)
            _write(format_edge_list(G), args.edges)
        return EXIT_OK
    k = args.k
    if kind != "petersen" and k is None:
        raise InputError(f"{kind} needs a size K")
    try:
        G = adversarial(kind, k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _write(format_edge_list(G), args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    graph, cons = load_input(args.input, args.problem)
    out, q, stats = benchmod.timed_query(args.problem, graph)
    rec = result_record("solve", args.input, args.problem, out, cons, q, stats)
    print(json.dumps(rec))
    return EXIT_NOT_IN_DOMAIN if isinstance(out, NotInDomain) else EXIT_OK


def verify_one(problem: str, graph, in_domain: bool) -> tuple[bool, list[str], object, object]:
    """Run the robust algorithm and the oracle; report whether they are consistent.

    NotInDomain passes only when its certificate re-validates and the input is
    not known to come from the domain.
    """
    solver = benchmod.solver_for(problem)
    out = solver(graph)
    if problem == "triangle":
        errs = check_triangle_outcome(graph, out)
        ref = brute_triangle(graph)
    elif problem == "girth":
        errs = check_girth_outcome(graph, out)
        ref = brute_girth(graph)
    else:
        errs = check_directed_outcome(graph, out)
        ref = brute_directed_triangle(graph)
    if isinstance(out, NotInDomain):
        if in_domain:
            errs.append("NotInDomain on a generated domain instance")
    elif out.tag != ref.tag:
        errs.append(f"class mismatch: {out.tag} vs oracle {ref.tag}")
    elif isinstance(out, Girth) and out.length != ref.length:
        errs.append(f"girth {out.length} vs oracle {ref.length}")
    return not errs, errs, out, ref


_CORPUS_FAMILY = {"triangle": "udg", "girth": "girth", "tg-triangle": "tg"}


def _corpus(problem: str, count: int, seed: int):
    config = CorpusConfig(_CORPUS_FAMILY[problem], count, seed)
    build = transmission_graph if problem == "tg-triangle" else unit_disk_graph
    for inst in config.instances():
        yield inst.name, build(inst.sites), True


def cmd_verify(args) -> int:
    if args.input:
        items = ((p, load_input(p, args.problem)[0], False) for p in args.input)
    elif args.corpus:
        items = _corpus(args.problem, args.corpus, args.seed)
    else:
        raise InputError("verify needs --input or --corpus")
    failures = total = 0
    for name, graph, in_domain in items:
        total += 1
        try:
            ok, errs, out, ref = verify_one(args.problem, graph, in_domain)
        except OracleCapExceeded as exc:
            raise InputError(str(exc)) from None
        failures += not ok
        print(json.dumps({
            "command": "verify",
            "input": name,
            "problem": args.problem,
            "outcome": out.tag,
            "oracle": ref.tag,
            "pass": ok,
            "errors": errs,
        }))
    print(json.dumps({"command": "verify", "summary": True, "total": total, "failures": failures}))
    return EXIT_OK if failures == 0 else EXIT_MALFORMED


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"bad --sizes {args.sizes!r}") from None
    try:
        rows = benchmod.run_bench(args.problem, sizes, args.seed, args.reps)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    fh = sys.stdout if args.output in (None, "-") else open(args.output, "w", newline="")
    try:
        w = csv.DictWriter(fh, fieldnames=benchmod.CSV_COLUMNS, extrasaction="ignore")
        w.writeheader()
        for row in rows:
            w.writerow(row)
    finally:
        if fh is not sys.stdout:
            fh.close()
    if len(rows) >= 2:
        xs = [benchmod.scaling_axis(args.problem, r) for r in rows]
        slope = benchmod.loglog_slope(xs, [r["query_ns"] for r in rows])
        axis = "n+m" if args.problem == "tg-triangle" else "n"
        print(f"log-log slope of query_ns vs {axis}: {slope:.3f}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="robustgraphs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a sites file or an edge list")
    g.add_argument("kind", choices=GEN_KINDS)
    g.add_argument("k", nargs="?", type=int, help="size for star/dicycle/bistar")
    g.add_argument("--n", type=int)
    g.add_argument("--box", type=float)
    g.add_argument("--rmin", type=float, default=0.5)
    g.add_argument("--rmax", type=float, default=2.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--output", help="output path (default stdout)")
    g.add_argument("--edges", help="also write the induced graph's edge list here")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="run a robust algorithm, print one JSON line")
    s.add_argument("--problem", choices=benchmod.PROBLEMS, required=True)
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="compare robust answers with brute force")
    v.add_argument("--problem", choices=benchmod.PROBLEMS, required=True)
    v.add_argument("--input", nargs="+")
    v.add_argument("--corpus", type=int, help="number of generated domain instances")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time queries over growing sizes, CSV out")
    b.add_argument("--problem", choices=benchmod.PROBLEMS, required=True)
    b.add_argument("--sizes", default="1024,2048,4096,8192,16384")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--output")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
