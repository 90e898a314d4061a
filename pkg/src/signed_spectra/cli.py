"""Command-line entry point: ``signed-spectra <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

import numpy as np

from . import construct
from .errors import SignedGraphError, SizeLimitExceeded
from .graph import SignedGraph, dumps, loads, signed_isomorphic, switching_isomorphic
from .linalg import (
    DEFAULT_TOL,
    RealSpectrum,
    adjacency_matrix,
    adjacency_poly,
    eigenvalues,
    laplacian_matrix,
    laplacian_poly,
)
from .search import MAX_ENUM_ORDER, RunConfig, find_cospectral_pairs
from .tu import laplacian_charpoly_via_tu
from .verify import verify_fixtures

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_SIZE_LIMIT = 3

FAMILIES = ("path-family", "cycle-family", "complete", "path", "cycle", "random")


def export(g: SignedGraph, fmt: str) -> str:
    """Serialise ``g`` as compact JSON or as an undirected DOT graph."""
    if fmt == "json":
        return dumps(g)
    if fmt != "dot":
        raise ValueError(f"unknown format {fmt!r}")
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n)]
    for u, v, s in g.edges:
        style = "bold" if s > 0 else "dashed"
        lines.append(f'  {u} -- {v} [style={style}, label="{"+" if s > 0 else "-"}"];')
    lines.append("}")
    return "\n".join(lines)


def _read_graph(path: str) -> SignedGraph:
    if path == "-":
        return loads(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _spectrum_obj(spec: RealSpectrum) -> list[list]:
    return [[_fmt(v), m] for v, m in spec.values]


def _matrix_of(g: SignedGraph, which: str):
    return adjacency_matrix(g) if which == "adjacency" else laplacian_matrix(g)


def _poly_of(g: SignedGraph, which: str):
    return adjacency_poly(g) if which == "adjacency" else laplacian_poly(g)


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


# ---------------------------------------------------------------------------
# commands


def cmd_build(args, cfg: RunConfig) -> int:
    if args.family == "path-family":
        g = getattr(construct.path_pair_family(args.n), args.member)
    elif args.family == "cycle-family":
        g = getattr(construct.cycle_pair_family(args.n, args.i, args.j), args.member)
    elif args.family == "complete":
        g = construct.complete_graph(args.n, args.sign)
    elif args.family == "path":
        g = construct.path_graph(args.n, args.sign)
    elif args.family == "cycle":
        g = construct.cycle_graph(args.n, args.sign)
    else:
        rng = np.random.default_rng(cfg.seed)
        g = construct.random_signed_graph(args.n, rng, args.density, args.negative, args.connected)
    if g is None:
        print(f"family {args.family} has no member {args.member}", file=sys.stderr)
        return EXIT_USAGE
    print(dumps(g))
    return EXIT_OK


def cmd_charpoly(args, cfg: RunConfig) -> int:
    g = _read_graph(args.graph)
    _emit(_poly_of(g, args.matrix).descending())
    return EXIT_OK


def cmd_spectrum(args, cfg: RunConfig) -> int:
    g = _read_graph(args.graph)
    _emit(_spectrum_obj(eigenvalues(_matrix_of(g, args.matrix), cfg.tolerance)))
    return EXIT_OK


def cmd_cospectral(args, cfg: RunConfig) -> int:
    a, b = _read_graph(args.graph_a), _read_graph(args.graph_b)
    pa, pb = _poly_of(a, args.matrix), _poly_of(b, args.matrix)
    _emit({
        "cospectral": pa == pb,
        "poly_a": pa.descending(),
        "poly_b": pb.descending(),
        "isomorphic_strict": signed_isomorphic(a, b) is not None,
        "switching_isomorphic": switching_isomorphic(a, b),
    })
    return EXIT_OK


def cmd_tu_charpoly(args, cfg: RunConfig) -> int:
    g = _read_graph(args.graph)
    _emit(laplacian_charpoly_via_tu(g, args.backend).descending())
    return EXIT_OK


def cmd_construct(args, cfg: RunConfig) -> int:
    g = _read_graph(args.graph)
    op = args.operation
    if op == "pt":
        out = construct.partial_transpose(g)
    elif op == "subdivision":
        out = construct.subdivision(g)
    elif op == "sp":
        out = construct.s_p(g, args.p)
    elif op == "spk":
        out = construct.s_p_k(g, args.p, args.k)
    else:
        if args.other is None:
            print(f"{op} needs a second graph", file=sys.stderr)
            return EXIT_USAGE
        h = _read_graph(args.other)
        out = construct.cartesian_product(g, h) if op == "cartesian" else construct.kronecker_product(g, h)
    print(dumps(out))
    return EXIT_OK


def cmd_search(args, cfg: RunConfig) -> int:
    reports = find_cospectral_pairs(args.n, args.mode, args.connected, cfg)
    for r in reports:
        _emit(r.to_json_obj())
    hidden = sum(1 for r in reports if not r.isomorphic_strict)
    print(f"# n={args.n} mode={args.mode} pairs={len(reports)} non_isomorphic={hidden}")
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    report = verify_fixtures(cfg, energy_samples=args.samples)
    for item in report.items:
        print(item.line())
    bad = len(report.failures())
    print(f"# {len(report.items) - bad}/{len(report.items)} passed")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_export(args, cfg: RunConfig) -> int:
    print(export(_read_graph(args.graph), args.format))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # shared by the top-level parser and every subcommand, so flags work in either position
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--tolerance", type=float, default=d(DEFAULT_TOL),
                   help="eigenvalue merge tolerance (default 1e-9)")
    p.add_argument("--threads", type=int, default=d(1), help="worker threads for search")
    p.add_argument("--seed", type=int, default=d(0), help="seed for random constructions")
    p.add_argument("--max-order", type=int, default=d(MAX_ENUM_ORDER),
                   help="largest order accepted by search")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signed-spectra",
        description="Spectra, cospectrality and constructions for signed graphs.",
        parents=[_global_flags(False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    shared = [_global_flags(True)]

    def graph_arg(p, name="graph"):
        p.add_argument(name, help="JSON graph file, or - for stdin")

    def matrix_arg(p):
        p.add_argument("--matrix", choices=("adjacency", "laplacian"), default="adjacency")

    p = sub.add_parser("build", parents=shared, help="print a named graph as JSON")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=3)
    p.add_argument("--member", default="gamma1",
                   choices=("gamma1", "gamma1_tau", "gamma2", "gamma3", "gamma4", "gamma5", "gamma_prime"))
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--negative", type=float, default=0.5)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("charpoly", parents=shared, help="exact characteristic polynomial")
    graph_arg(p)
    matrix_arg(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("spectrum", parents=shared, help="eigenvalues with multiplicities")
    graph_arg(p)
    matrix_arg(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("cospectral", parents=shared, help="compare two graphs")
    graph_arg(p, "graph_a")
    graph_arg(p, "graph_b")
    matrix_arg(p)
    p.set_defaults(func=cmd_cospectral)

    p = sub.add_parser("tu-charpoly", parents=shared,
                       help="Laplacian polynomial by TU-subgraph enumeration")
    graph_arg(p)
    p.add_argument("--backend", choices=("numba", "numpy"), default=None)
    p.set_defaults(func=cmd_tu_charpoly)

    p = sub.add_parser("construct", parents=shared, help="apply a graph operation")
    p.add_argument("operation", choices=("pt", "subdivision", "sp", "spk", "cartesian", "kronecker"))
    graph_arg(p)
    p.add_argument("other", nargs="?", help="second graph for products")
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", parents=shared, help="find cospectral pairs of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("adj", "lap"), default="lap")
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-paper", parents=shared, help="check the published fixtures")
    p.add_argument("--samples", type=int, default=50, help="random graphs in the energy sweep")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=shared, help="convert a JSON graph")
    graph_arg(p)
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = RunConfig(args.tolerance, args.max_order, args.threads, args.seed)
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # argparse exits on --help and on usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, cfg)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_LIMIT
    except (SignedGraphError, ValueError, OSError) as exc:
        # json.JSONDecodeError is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
