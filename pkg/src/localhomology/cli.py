"""Command-line interface.

Subcommands cover the whole pipeline: global Betti numbers of a complex,
per-simplex local-homology reports, stratification checks, flag-complex
construction, correlation tables, dataset generation, and the bundled
karate network. Outputs are byte-identical for identical inputs and seeds;
`--threads` only changes how per-simplex work is scheduled.

Exit codes: 0 success, 1 malformed input, 2 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .analysis import manifold_interior, profile_many, profiles_to_csv
from .complexes import complex_to_json_dict, load_complex
from .errors import MalformedInputError, PreconditionError
from .graphs import flag_complex, format_edge_list, read_edge_list
from .homology import global_betti
from .stats import (
    DatasetSpec,
    correlation_table,
    generate,
    karate_graph,
)

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_PRECONDITION = 2


def _default_threads() -> int:
    value = os.environ.get("LOCALHOMOLOGY_THREADS")
    if value is None:
        return 1
    try:
        return max(1, int(value))
    except ValueError:
        return 1


class _Parser(argparse.ArgumentParser):
    # Usage errors are malformed input, so they exit 1 rather than
    # argparse's default 2 (reserved here for precondition violations).
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="localhomology",
        description="Local homology of abstract simplicial complexes",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_betti = sub.add_parser("betti", help="global Betti numbers of a complex")
    p_betti.add_argument("complex", help="path to a complex JSON file")

    p_local = sub.add_parser("local", help="per-simplex local homology report")
    p_local.add_argument("complex", help="path to a complex JSON file")
    p_local.add_argument("--m", type=int, default=0, help="largest neighborhood level")
    p_local.add_argument(
        "--simplex",
        help="restrict to one simplex, comma-separated vertex labels (default: all)",
    )
    p_local.add_argument("--csv", help="write the CSV report to this path instead of stdout")
    p_local.add_argument("--threads", type=int, default=None, help="worker thread cap")

    p_strat = sub.add_parser("strat", help="homology-manifold check and ramification list")
    p_strat.add_argument("complex", help="path to a complex JSON file")
    p_strat.add_argument("--dim", type=int, required=True, help="expected manifold dimension")
    p_strat.add_argument("--threads", type=int, default=None, help="worker thread cap")

    p_flag = sub.add_parser("flag", help="flag complex of a graph, as complex JSON")
    p_flag.add_argument("edges", help="path to an edge-list file")

    p_corr = sub.add_parser("correlate", help="invariant vs local-Betti correlation table")
    p_corr.add_argument("edges", nargs="?", help="path to an edge-list file")
    p_corr.add_argument("--dataset", choices=["karate"], help="use a bundled dataset")
    p_corr.add_argument("--subject", choices=["vertex", "edge"], default="vertex")
    p_corr.add_argument("--m", default="0,1,2", help="comma list of neighborhood levels")
    p_corr.add_argument("--k", default="1,2", help="comma list of homology degrees")
    p_corr.add_argument("--threads", type=int, default=None, help="worker thread cap")
    p_corr.add_argument(
        "--scatter-dir", help="also write per-cell x,y scatter CSV files to this directory"
    )

    p_gen = sub.add_parser("generate", help="write a seeded random graph as an edge list")
    gen_sub = p_gen.add_subparsers(dest="family", required=True)
    g_er = gen_sub.add_parser("er", help="uniform random graph with a fixed edge count")
    g_er.add_argument("--n", type=int, required=True)
    g_er.add_argument("--edges", type=int, required=True)
    g_er.add_argument("--seed", type=int, required=True)
    g_er.add_argument("--out", help="output path (default stdout)")
    g_ba = gen_sub.add_parser("ba", help="preferential attachment graph")
    g_ba.add_argument("--n", type=int, required=True)
    g_ba.add_argument("--attach", type=int, required=True)
    g_ba.add_argument("--seed", type=int, required=True)
    g_ba.add_argument("--out", help="output path (default stdout)")
    g_pl = gen_sub.add_parser("planar", help="grid graph with random face diagonals")
    g_pl.add_argument("--width", type=int, required=True)
    g_pl.add_argument("--height", type=int, required=True)
    g_pl.add_argument("--diag-prob", type=float, required=True)
    g_pl.add_argument("--seed", type=int, required=True)
    g_pl.add_argument("--out", help="output path (default stdout)")

    p_data = sub.add_parser("dataset", help="print a bundled dataset")
    p_data.add_argument("name", choices=["karate"])

    return parser


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t != ""]
    except ValueError as exc:
        raise MalformedInputError(f"bad {what} list {text!r}") from exc
    if not values or any(v < 0 for v in values):
        raise MalformedInputError(f"bad {what} list {text!r}")
    return sorted(set(values))


def _parse_simplex_labels(text: str) -> list:
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(t == "" for t in tokens):
        raise MalformedInputError(f"bad simplex {text!r}")
    return [int(t) if t.lstrip("-").isdigit() else t for t in tokens]


def _cmd_betti(args) -> int:
    complex = load_complex(args.complex)
    print(json.dumps({"betti": list(global_betti(complex))}))
    return EXIT_OK


def _cmd_local(args, threads: int) -> int:
    complex = load_complex(args.complex)
    if args.m < 0:
        raise MalformedInputError("--m must be non-negative")
    targets = None
    if args.simplex:
        labels = _parse_simplex_labels(args.simplex)
        targets = [complex.simplex_with_labels(labels)]
    profiles = profile_many(complex, targets, m_max=args.m, threads=threads)
    text = profiles_to_csv(complex, profiles)
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_strat(args, threads: int) -> int:
    complex = load_complex(args.complex)
    if args.dim < 0:
        raise MalformedInputError("--dim must be non-negative")
    interior = manifold_interior(args.dim)
    profiles = profile_many(complex, m_max=0, ambient_dim=args.dim, threads=threads)
    offenders = [p.simplex for p in profiles if p.classification != interior]
    print(
        json.dumps(
            {
                "dimension": args.dim,
                "homology_manifold": not offenders,
                "ramification_simplices": [list(s) for s in offenders],
            },
            sort_keys=True,
        )
    )
    return EXIT_OK


def _cmd_flag(args) -> int:
    graph = read_edge_list(args.edges)
    complex = flag_complex(graph)
    print(json.dumps(complex_to_json_dict(complex), sort_keys=True))
    return EXIT_OK


def _cmd_correlate(args, threads: int) -> int:
    if (args.edges is None) == (args.dataset is None):
        raise MalformedInputError("give exactly one of an edge-list path or --dataset")
    graph = karate_graph() if args.dataset else read_edge_list(args.edges)
    levels = _parse_int_list(args.m, "neighborhood level")
    degrees = _parse_int_list(args.k, "homology degree")
    report = correlation_table(
        graph,
        subject=args.subject,
        m_max=max(levels),
        k_max=max(degrees),
        threads=threads,
    )
    lines = ["invariant,beta_k,N_m,subject,rho"]
    for name in report.invariants:
        for k in degrees:
            for m in levels:
                rho = report.cell(name, k, m)
                cell = "" if rho is None else f"{rho:.6f}"
                lines.append(f"{name},{k},{m},{report.subject},{cell}")
    sys.stdout.write("\n".join(lines) + "\n")
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    if args.scatter_dir:
        out_dir = Path(args.scatter_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for name in report.invariants:
            for k in degrees:
                for m in levels:
                    path = out_dir / f"scatter_{name}_beta{k}_N{m}.csv"
                    path.write_text(report.scatter_csv(name, k, m), encoding="utf-8")
    return EXIT_OK


def _cmd_generate(args) -> int:
    if args.family == "er":
        spec = DatasetSpec.erdos_renyi(args.n, args.edges, args.seed)
    elif args.family == "ba":
        spec = DatasetSpec.barabasi_albert(args.n, args.attach, args.seed)
    else:
        spec = DatasetSpec.planar_grid(args.width, args.height, args.diag_prob, args.seed)
    graph = generate(spec)
    text = format_edge_list(graph)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_dataset(args) -> int:
    from importlib import resources

    text = resources.files("localhomology.data").joinpath("karate_edges.txt").read_text()
    sys.stdout.write(text)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    threads = args.threads if getattr(args, "threads", None) else _default_threads()
    try:
        if args.command == "betti":
            return _cmd_betti(args)
        if args.command == "local":
            return _cmd_local(args, threads)
        if args.command == "strat":
            return _cmd_strat(args, threads)
        if args.command == "flag":
            return _cmd_flag(args)
        if args.command == "correlate":
            return _cmd_correlate(args, threads)
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "dataset":
            return _cmd_dataset(args)
        raise MalformedInputError(f"unknown command {args.command!r}")
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    raise SystemExit(main())
