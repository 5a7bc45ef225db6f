"""Command-line front end.

Exit codes: 0 success / verified / found, 1 verification failed or no
representation, 2 usage error, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as C
from .core import Hypergraph, HypergraphError, dump, load
from .export import to_dot
from .lp import paper_lp, solve
from .search import BUDGET_EXHAUSTED, DEFAULT_BUDGET, EXISTS, find_minimum, find_representation
from .sections import format_profile, half_edge_capacity, profile, sections
from .transforms import TransformError, augment_to_six, insert_odd_vertex
from .verification import verify

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> Hypergraph:
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except HypergraphError as exc:
        raise UsageError(f"malformed hypergraph file {path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _census_text(h: Hypergraph) -> str:
    counts: dict[str, int] = {}
    for e in h.edges:
        key = format_profile(profile(e, h.n))
        counts[key] = counts.get(key, 0) + 1
    return ", ".join(f"{c} x {p}" for p, c in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


def cmd_construct(args) -> int:
    variant = args.variant or C.default_variant(args.k, args.n)
    try:
        spec = C.ConstructionSpec(args.k, args.n, variant)
        h = C.build(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = h.to_json(canonical=args.canonical) + "\n"
    _emit(text, args.out)
    print(f"{spec.variant}: n = {h.n}, |E| = {len(h)}; profiles: {_census_text(h)}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    h = _read(args.path)
    if args.n is not None and args.n != h.n:
        raise UsageError(f"file declares n = {h.n} but --n {args.n} was given")
    if h.n < 3:
        raise UsageError(f"C_n needs n >= 3, file declares n = {h.n}")
    report = verify(h)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.render())
    return EXIT_OK if report.is_cycle else EXIT_FAILED


def cmd_export(args) -> int:
    h = _read(args.path)
    if args.format == "dot":
        text = to_dot(h)
    else:
        text = h.to_json(canonical=args.canonical) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_lp(args) -> int:
    p = paper_lp()
    if args.no_x5:
        p = p.with_constraint({"x5": 1}, "<=", 0)
    sol = solve(p)
    if args.json:
        print(json.dumps({
            "status": sol.status,
            "optimum": str(sol.optimum) if sol.optimum is not None else None,
            "assignment": {v: str(x) for v, x in sol.assignment.items()},
            "basis": sol.basis,
            "dual": [str(y) for y in sol.dual],
        }, indent=2))
        return EXIT_OK
    print(f"status: {sol.status}")
    if sol.status == "optimal":
        print(f"optimum: {sol.optimum}  (|E| >= {sol.optimum} n)")
        print("assignment: " + ", ".join(f"{v} = {x}" for v, x in sol.assignment.items()))
        print("basis: " + ", ".join(sol.basis))
        print("dual: " + ", ".join(str(y) for y in sol.dual))
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        if args.minimum:
            out = find_minimum(args.k, args.n, args.budget, args.threads)
            if out.status == BUDGET_EXHAUSTED:
                print(f"budget of {args.budget} nodes exhausted"
                      + (f"; no representation with <= {out.refuted_up_to} edges" if out.refuted_up_to else ""))
                return EXIT_BUDGET
            if out.status != EXISTS:
                print(f"no {args.k}-uniform H has EI(H) = C_{args.n} ({out.nodes_explored} nodes)")
                return EXIT_FAILED
            print(f"minimum |E| = {out.minimum} ({out.nodes_explored} nodes)")
            witness = out.witness
        else:
            max_edges = args.max_edges if args.max_edges is not None else 2 * args.n
            res = find_representation(args.k, args.n, max_edges, args.budget, args.threads)
            print(f"{res.status} ({res.nodes_explored} nodes, budget {res.budget})")
            if res.status == BUDGET_EXHAUSTED:
                return EXIT_BUDGET
            if res.status != EXISTS:
                return EXIT_FAILED
            witness = res.witness
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(json.dumps(witness.to_dict(canonical=True)["edges"]))
    if args.witness:
        dump(witness, args.witness, canonical=True)
    return EXIT_OK


def cmd_analyze(args) -> int:
    h = _read(args.path)
    for e in h.edges:
        label = "{" + ",".join(map(str, e)) + "}"
        if len(e) >= h.n:
            print(f"{label}  covers C_n entirely")
            continue
        p = profile(e, h.n)
        runs = " ".join(f"{r.start}+{r.length}" for r in sections(e, h.n))
        print(f"{label}  {format_profile(p)}  capacity {half_edge_capacity(p)}  runs {runs}")
    print(f"census: {_census_text(h)}")
    return EXIT_OK


def cmd_insert(args) -> int:
    h = _read(args.path)
    try:
        out = insert_odd_vertex(h, args.a, args.b, args.ex, args.ey, standardize=args.standardize)
    except TransformError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    _emit(out.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_augment(args) -> int:
    h = _read(args.path)
    try:
        out = augment_to_six(h, tuple(args.small))
    except TransformError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    _emit(out.to_json() + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eicycle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a hypergraph family as JSON")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", help=f"one of {', '.join(C.VARIANTS)} (or thm3/thm5/thm6/lemma-32/thm9)")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--canonical", action="store_true", help="sort edges lexicographically")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check EI(H) = C_n and minimality certificates")
    p.add_argument("path")
    p.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="render as DOT or re-emit JSON")
    p.add_argument("path")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out")
    p.add_argument("--canonical", action="store_true")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("lp", help="solve the hyperedge-type density LP exactly")
    p.add_argument("--no-x5", action="store_true", help="forbid (5)-hyperedges (x5 <= 0)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("search", help="exhaustive search for a representation")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node limit")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--minimum", action="store_true", help="find the minimum |E| instead")
    p.add_argument("--witness", help="write the witness hypergraph here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("analyze", help="section profiles and half-edge capacities")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("insert-vertex", help="odd-vertex insertion into an even-n hypergraph")
    p.add_argument("path")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--ex", type=int, required=True, help="index of the edge that loses b")
    p.add_argument("--ey", type=int, required=True, help="index of the edge that loses a")
    p.add_argument("--standardize", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("augment", help="grow the 3-vertex hyperedge to 6 vertices")
    p.add_argument("path")
    p.add_argument("--small", type=int, nargs=3, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_augment)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
