"""Command-line front end: ``multispec <subcommand> ...``."""

from __future__ import annotations

import argparse
import os
import sys

from multispec import families
from multispec.connectivity import connectivity_report
from multispec.io import GraphFormatError, dump_report, read_graph, render_graph
from multispec.multigraph import Multigraph, degrees, is_regular
from multispec.partition import (
    Partition,
    check_interlacing,
    is_equitable,
    quotient_eigenvalues,
    quotient_matrix,
)
from multispec.spectral import adjacency_spectrum, laplacian_spectrum
from multispec.theorems import (
    SUITES,
    RandomModel,
    RegularModel,
    explore_c_gap,
    lambda2_table,
    run_campaign,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INVALID = 4

SEED_ENV = "MULTISPEC_SEED"

EPILOG = f"""\
exit codes:
  {EXIT_OK}  success
  {EXIT_VIOLATION}  verify found a theorem violation or a solver error
  {EXIT_USAGE}  unknown subcommand or flag
  {EXIT_IO}  input file unreadable or output file unwritable
  {EXIT_INVALID}  malformed graph file or invalid parameters

--seed defaults to ${SEED_ENV} when set, else 0.
"""

BUILDERS = {
    "b1": lambda d, t: families.build_B1(d),
    "h1": lambda d, t: families.build_H1(d),
    "c": families.build_C,
    "h": families.build_H,
    "f": lambda d, t: families.build_F(d),
    "g4": lambda d, t: families.build_G4(d),
}


class InvalidInput(Exception):
    pass


def _summary(G: Multigraph) -> dict:
    deg = degrees(G)
    return {
        "n": G.n,
        "edges": G.edge_count,
        "regular_degree": is_regular(G) if G.n else None,
        "degree_range": [min(deg), max(deg)] if deg else [0, 0],
        "max_multiplicity": max(G.mult.values(), default=0),
    }


def _snap(x: float, spec) -> float:
    # values inside the solver tolerance of zero are reported as exactly 0
    return 0.0 if abs(x) <= spec.tol * max(1.0, spec.norm) else x


def _spectrum_doc(spec) -> dict:
    return {
        "values": [_snap(x, spec) for x in spec.values],
        "grouped": [{"value": _snap(v, spec), "multiplicity": k} for v, k in spec.grouped()],
    }


def _load(path: str) -> Multigraph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from exc


def cmd_gen(args) -> str:
    if args.family in ("c", "h") and args.t is None:
        raise InvalidInput(f"family {args.family} needs --t")
    G = BUILDERS[args.family](args.d, args.t)
    text = render_graph(G)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return ""
    return text


def cmd_spectrum(args) -> str:
    G = _load(args.input)
    doc = {"graph": _summary(G)}
    if args.laplacian:
        spec = laplacian_spectrum(G)
        doc["matrix"] = "laplacian"
        doc["spectrum"] = _spectrum_doc(spec)
        doc["mu2"] = _snap(spec[G.n - 2], spec) if G.n >= 2 else None
    else:
        spec = adjacency_spectrum(G)
        doc["matrix"] = "adjacency"
        doc["spectrum"] = _spectrum_doc(spec)
        doc["lambda1"] = _snap(spec[0], spec) if G.n >= 1 else None
        doc["lambda2"] = _snap(spec[1], spec) if G.n >= 2 else None
    return dump_report(doc)


def cmd_connectivity(args) -> str:
    G = _load(args.input)
    if G.n < 2:
        raise InvalidInput("connectivity needs at least 2 vertices")
    return dump_report({"graph": _summary(G), "connectivity": connectivity_report(G).as_dict()})


def cmd_quotient(args) -> str:
    G = _load(args.input)
    P = Partition.parse(args.partition)
    Q = quotient_matrix(G, P)
    qspec = quotient_eigenvalues(Q)
    full = adjacency_spectrum(G)
    return dump_report({
        "graph": _summary(G),
        "partition": str(P),
        "quotient": [list(map(float, row)) for row in Q.entries],
        "block_sizes": list(Q.block_sizes),
        "quotient_spectrum": _spectrum_doc(qspec),
        "equitable": is_equitable(G, P),
        "interlaces": check_interlacing(full, qspec),
        "graph_spectrum": _spectrum_doc(full),
    })


def cmd_verify(args):
    model = RegularModel(
        args.n if args.n else 3, args.n if args.n else 12,
        args.d if args.d is not None else 2, args.d if args.d is not None else 10,
    )
    report = run_campaign(model, args.trials, args.seed, args.suite)
    return dump_report(report.as_dict()), EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_explore(args) -> str:
    if args.question == "c-gap":
        gap, G = explore_c_gap(args.trials, args.seed)
        return dump_report({
            "question": "c-gap",
            "trials": args.trials,
            "seed": args.seed,
            "best_gap": gap,
            "graph": _summary(G),
            "witness": render_graph(G),
        })
    rows = lambda2_table(RegularModel(3, args.n or 12, 2, args.d or 10), args.trials, args.seed)
    return dump_report({"question": "lambda2-table", "trials": args.trials, "seed": args.seed, "rows": rows})


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"${SEED_ENV} is not an integer: {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="multispec",
        description="Spectra and connectivity of regular multigraphs.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a family member as a graph file")
    g.add_argument("--family", required=True, choices=sorted(BUILDERS))
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--t", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("spectrum", help="adjacency or Laplacian spectrum")
    s.add_argument("--input", required=True)
    s.add_argument("--laplacian", action="store_true")
    s.set_defaults(func=cmd_spectrum)

    c = sub.add_parser("connectivity", help="vertex/edge connectivity with witnesses")
    c.add_argument("--input", required=True)
    c.set_defaults(func=cmd_connectivity)

    q = sub.add_parser("quotient", help="quotient matrix of a vertex partition")
    q.add_argument("--input", required=True)
    q.add_argument("--partition", required=True, help='blocks as "0,1|2,3,4"')
    q.set_defaults(func=cmd_quotient)

    v = sub.add_parser("verify", help="seeded theorem campaign on random regular multigraphs")
    v.add_argument("--suite", choices=sorted(SUITES), default="all")
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--seed", type=int)
    v.add_argument("--n", type=int, help="fix the vertex count (default: 3..12)")
    v.add_argument("--d", type=int, help="fix the degree (default: 2..10)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("explore", help="empirical explorers for open questions")
    e.add_argument("--question", choices=["c-gap", "lambda2-table"], default="c-gap")
    e.add_argument("--trials", type=int, default=200)
    e.add_argument("--seed", type=int)
    e.add_argument("--n", type=int)
    e.add_argument("--d", type=int)
    e.set_defaults(func=cmd_explore)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        if getattr(args, "trials", 1) < 1:
            raise InvalidInput("--trials must be at least 1")
        result = args.func(args)
    except OSError as exc:
        print(f"multispec: {exc}", file=sys.stderr)
        return EXIT_IO
    except (InvalidInput, GraphFormatError, ValueError) as exc:
        print(f"multispec: {exc}", file=sys.stderr)
        return EXIT_INVALID
    status = EXIT_OK
    if isinstance(result, tuple):
        result, status = result
    sys.stdout.write(result)
    return status


if __name__ == "__main__":
    sys.exit(main())
