"""``fullab`` command line.

Graph inputs are read from ``--in`` (a planar_code or spiral file, detected
by its header; ``-`` is stdin) or chosen as ``C_{n,j}`` with ``--n``/``--j``.
Graph outputs go to ``--out`` (default stdout) in ``--format``. Tables are
CSV on stdout. Vertex ids on the wire are 1-based.

Exit codes: 0 success, 2 validation error, 3 budget exceeded, 4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from io import StringIO
from typing import Sequence

from . import constructions, cut_partition as cp, io as fio, sampling, spectral, spiral, sw_ops
from .errors import BadHeader, BudgetExceeded, FormatError, FullabError, RecordValidationFailed, TruncatedRecord
from .graph_core import PlaneGraph

EXIT_OK, EXIT_VALIDATION, EXIT_BUDGET, EXIT_IO = 0, 2, 3, 4


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--in", dest="inp", help="input file (planar_code or spiral; '-' = stdin)")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=("planar_code", "spiral"), default="spiral")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=spiral.DEFAULT_BUDGET)
    return p


def _select(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="isomer size when no --in is given")
    p.add_argument("--j", type=int, help="1-based isomer index (default: all of C_n)")


def _read_input(args) -> list[PlaneGraph]:
    if args.inp:
        data = sys.stdin.buffer.read() if args.inp == "-" else open(args.inp, "rb").read()
        if data.startswith(b">>"):
            return fio.decode_planar_code(data, getattr(args, "mode", "fullerene"))
        return [spiral.windup(pv) for pv in fio.read_spirals(StringIO(data.decode("ascii")))]
    if args.n is None:
        raise FullabError("either --in or --n is required")
    graphs = spiral.enumerate_isomers(args.n, args.budget, args.threads)
    if args.j is None:
        return graphs
    if not 1 <= args.j <= len(graphs):
        raise FullabError(f"C_{args.n} has {len(graphs)} isomers, no index {args.j}")
    return [graphs[args.j - 1]]


def _emit_graphs(args, graphs: Sequence[PlaneGraph]) -> None:
    if args.format == "planar_code":
        data = fio.encode_planar_code(graphs)
        if args.out:
            open(args.out, "wb").write(data)
        else:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
        return
    text = "".join(str(spiral.canonical_pentagon_vector(g)) + "\n" for g in graphs)
    if args.out:
        open(args.out, "w", newline="\n").write(text)
    else:
        sys.stdout.write(text)


def _csv(header, rows) -> None:
    fio.write_csv(sys.stdout, header, rows)


def cmd_make(args) -> None:
    kind = args.kind
    if kind == "dodeca":
        g = constructions.dodecahedron()
    elif kind == "nanotube50":
        g = constructions.nanotube_50(args.r)
    elif kind == "goldberg":
        g = constructions.goldberg(args.p, args.q)
    elif kind == "gswfree":
        g = constructions.gsw_free_family(constructions.GswFreeSpec(args.t, constructions.Truncation(args.truncation)))
    elif kind == "seed":
        if args.n is None:
            raise FullabError("make seed needs --n")
        g = constructions.seed_for(args.n, args.budget)
    else:
        g = constructions.grow_from_c36(args.steps)
    _emit_graphs(args, [g])


def cmd_enumerate(args) -> None:
    hi = args.n if args.to is None else args.to
    graphs_or_counts = []
    for n in range(args.n, hi + 1, 2):
        if args.count_only:
            graphs_or_counts.append((n, spiral.isomer_count(n, args.budget, args.threads)))
        else:
            graphs_or_counts.extend(spiral.enumerate_isomers(n, args.budget, args.threads))
    if args.count_only:
        _csv(("n", "isomers"), graphs_or_counts)
    else:
        _emit_graphs(args, graphs_or_counts)


def cmd_character(args) -> None:
    rows = []
    for i, g in enumerate(_read_input(args), 1):
        rows.append((i, 2 * (g.m - 2), spectral.character(g, args.alpha, args.beta, args.representation)))
    _csv(("index", "n", "character"), rows)


def cmd_sweep(args) -> None:
    rows = spectral.sweep(args.n, args.alpha, args.beta, args.budget)
    _csv(("n", "j", "character", "normalized"), [(r.n, r.j, r.character, r.normalized) for r in rows])


def cmd_hist(args) -> None:
    vals = [r.character for r in spectral.sweep(args.n, args.alpha, args.beta, args.budget)]
    if args.normalized and vals:
        lo, hi = min(vals), max(vals)
        vals = [(v - lo) / (hi - lo) if hi > lo else 0.0 for v in vals]
    rng = tuple(args.range) if args.range else None
    rows = spectral.histogram(vals, args.bins, rng)
    _csv(("left", "right", "count", "density"), [(r.left, r.right, r.count, r.density) for r in rows])


def cmd_gsw(args) -> None:
    graphs = _read_input(args)
    if args.apply is not None:
        out = []
        for g in graphs:
            paths = sw_ops.find_gsw_paths(g, args.w_max)
            if not 1 <= args.apply <= len(paths):
                raise FullabError(f"graph has {len(paths)} gSW paths, no index {args.apply}")
            out.append(sw_ops.apply_gsw(g, paths[args.apply - 1]))
        _emit_graphs(args, out)
        return
    rows = []
    for i, g in enumerate(graphs, 1):
        for k, p in enumerate(sw_ops.find_gsw_paths(g, args.w_max, dedup=args.dedup), 1):
            rows.append((i, k, p.w, " ".join(str(v + 1) for v in p.vertices)))
    _csv(("graph", "path", "w", "vertices"), rows)


def cmd_psw(args) -> None:
    args.mode = "triangulation"
    graphs = _read_input(args)
    if args.edge is None:
        rows = []
        for i, g in enumerate(graphs, 1):
            for s in sw_ops.classic_sw_sites(g):
                rows.append((i, s.v1 + 1, s.v2 + 1, s.v3 + 1, s.v4 + 1))
        _csv(("graph", "v1", "v2", "v3", "v4"), rows)
        return
    u, v = args.edge
    out = [sw_ops.psw_flip(g, (u - 1, v - 1)) for g in graphs]
    if args.format == "spiral" and not all(hasattr(g, "n") for g in out):
        args.format = "planar_code"
    _emit_graphs(args, out)


def cmd_cutpartition(args) -> None:
    rows = []
    for i, g in enumerate(_read_input(args), 1):
        part = cp.cut_partition(g, constructions.Truncation(args.truncation))
        summary = " ".join(f"{k}x{v}" for k, v in part.summary().items())
        rows.append((i, len(part.components), part.splits, part.cuts, part.resolved,
                     part.all_triangular, part.zero_only, summary))
    _csv(("graph", "components", "splits", "cuts", "resolved", "all_triangular", "zero_only", "classes"), rows)


def cmd_conjecture2(args) -> None:
    conv = None if args.truncation == "any" else constructions.Truncation(args.truncation)
    rows = []
    if args.inp:
        items = [(2 * (g.m - 2), i, g) for i, g in enumerate(_read_input(args), 1)]
    else:
        lo = args.n if args.n is not None else 24
        hi = args.to if args.to is not None else lo
        items = [(n, j, g) for n in range(lo, hi + 1, 2)
                 for j, g in enumerate(spiral.enumerate_isomers(n, args.budget, args.threads), 1)]
    for n, j, g in items:
        rec = cp.conjecture2_report(g, conv)
        summary = " ".join(f"{k}x{v}" for k, v in rec.summary.items())
        rows.append((n, j, rec.has_gsw, rec.all_triangular, rec.zero_only, rec.verdict, rec.convention, summary))
    _csv(("n", "j", "has_gsw", "all_triangular", "zero_only", "verdict", "convention", "classes"), rows)


def cmd_sample(args) -> None:
    method = "spiral_ar" if args.method == "spiral" else "psw_chain"
    cfg = sampling.SamplerConfig(args.n, args.seed, method, count=args.count, steps=args.steps,
                                 burn_in=args.burnin, policy=args.policy, temperature=args.temperature)
    graphs, rep = sampling.sample_many(cfg)
    args.format = "planar_code"
    _emit_graphs(args, graphs)
    text = json.dumps(rep.as_dict(), sort_keys=True, indent=1) + "\n"
    if args.report:
        open(args.report, "w", newline="\n").write(text)
    elif args.out:
        sys.stdout.write(text)
    else:
        sys.stderr.write(text)


def cmd_db(args) -> None:
    if args.action == "build":
        if args.n is None:
            raise FullabError("db build needs --n")
        path = fio.db_build(args.n, args.dir, args.budget, args.threads)
        print(path)
        return
    if args.spiral:
        queries = [fio.parse_spiral(args.spiral)]
    else:
        queries = _read_input(args)
    _csv(("n", "j"), [fio.db_lookup(q, args.dir) for q in queries])


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="fullab", description="Fullerene dual graph laboratory.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make", parents=[common], help="build a named fullerene")
    p.add_argument("kind", choices=("dodeca", "nanotube50", "goldberg", "gswfree", "seed", "c36grow"))
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--truncation", choices=("rows", "full"), default="rows")
    p.add_argument("--n", type=int)
    p.add_argument("--steps", type=int, default=0)
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("enumerate", parents=[common], help="all isomers of C_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--to", type=int, help="last n of a range")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    for name, func, helptext in (("character", cmd_character, "(alpha,beta)-character of input graphs"),
                                 ("sweep", cmd_sweep, "character of every isomer of C_n"),
                                 ("hist", cmd_hist, "character histogram of C_n")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--alpha", type=float, default=spectral.DEFAULT_ALPHA)
        p.add_argument("--beta", type=float, default=spectral.DEFAULT_BETA)
        if name == "character":
            _select(p)
            p.add_argument("--representation", choices=spectral.REPRESENTATIONS, default="dual")
        else:
            p.add_argument("--n", type=int, required=True)
        if name == "hist":
            p.add_argument("--bins", type=int, default=1000)
            p.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"))
            p.add_argument("--normalized", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("gsw", parents=[common], help="list or apply gSW paths")
    _select(p)
    p.add_argument("--w-max", type=int)
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--apply", type=int, help="apply the K-th path (1-based) and emit the graph")
    p.set_defaults(func=cmd_gsw)

    p = sub.add_parser("psw", parents=[common], help="list classic SW sites or flip an edge")
    _select(p)
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"), help="1-based edge to flip")
    p.set_defaults(func=cmd_psw)

    p = sub.add_parser("cutpartition", parents=[common], help="cut-partition of T^6")
    _select(p)
    p.add_argument("--truncation", choices=("rows", "full"), default="rows")
    p.set_defaults(func=cmd_cutpartition)

    p = sub.add_parser("conjecture2", parents=[common], help="gSW / cut-partition consistency report")
    _select(p)
    p.add_argument("--to", type=int, help="last n of a range")
    p.add_argument("--truncation", choices=("any", "rows", "full"), default="any")
    p.set_defaults(func=cmd_conjecture2)

    p = sub.add_parser("sample", parents=[common], help="random fullerenes")
    p.add_argument("method", choices=("spiral", "psw"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--steps", type=int, default=10_000)
    p.add_argument("--burnin", type=int, default=0)
    p.add_argument("--policy", choices=("uniform_flip", "energy"), default="uniform_flip")
    p.add_argument("--temperature", type=float, default=1.0)
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("db", parents=[common], help="isomer database")
    p.add_argument("action", choices=("build", "lookup"))
    p.add_argument("--dir", required=True)
    _select(p)
    p.add_argument("--spiral", help="pentagon vector 'n p1 .. p12' to look up")
    p.set_defaults(func=cmd_db)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except BudgetExceeded as exc:
        print(f"fullab: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (BadHeader, TruncatedRecord, OSError, UnicodeDecodeError) as exc:
        print(f"fullab: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (FormatError, RecordValidationFailed, FullabError, ValueError) as exc:
        print(f"fullab: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
