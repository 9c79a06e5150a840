"""Command-line interface.

Exit codes: 0 success, 1 verification failure (a JSON report is still
written), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from . import io as bio
from .circulant import at_witness, gen_circulant, witness_41, witness_42
from .coloring import chromatic_number, greedy_coloring, independence_number
from .graph import GraphError, generate
from .oracle import GuardExceeded, boxicity_exact, crown_search
from .realization import RealizationError, boxes_from_witness, realize_interval
from .recognition import asteroidal_triples, is_chordal, is_interval, is_split, perfect_elimination_ordering
from .witness import WitnessError, build_family, from_neighborhoods, validate_witness


class UsageError(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(data: bytes, out: str | None):
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _load_graph(path: str, fmt: str = "auto"):
    return bio.parse_graph(_read(path), fmt)


# -- commands ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    kind = {"multipartite": "complete_multipartite"}.get(args.kind, args.kind)
    if kind == "circulant":
        if len(args.params) != 2:
            raise UsageError("circulant takes two parameters: a b")
        g = gen_circulant(*args.params)
    else:
        g = generate(kind, args.params)
    _write(bio.emit(g, args.format), args.out)
    return 0


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    wanted = [k for k in ("chordal", "split", "interval", "at") if getattr(args, k)]
    if not wanted:
        wanted = ["chordal", "split", "interval", "at"]
    report = {}
    if "chordal" in wanted:
        report["chordal"] = is_chordal(g)
        report["elimination_ordering"] = perfect_elimination_ordering(g)
    if "split" in wanted:
        p = is_split(g)
        report["split"] = None if p is None else {
            "independent_set": sorted(p.independent_set), "clique": sorted(p.clique)}
    if "interval" in wanted:
        report["interval"] = is_interval(g)
    if "at" in wanted:
        report["asteroidal_triples"] = [
            {"triple": list(t.triple), "paths": [list(p) for p in t.paths]}
            for t in asteroidal_triples(g, find_all=args.all)]
    _write(bio.dumps(report), args.out)
    return 0


def cmd_color(args) -> int:
    g = _load_graph(args.graph)
    if args.greedy:
        order = args.order if args.order else list(range(g.n))
        c = greedy_coloring(g, order)
        report = {"method": "greedy", "colors": len(c), "classes": c.as_lists()}
    else:
        k, c = chromatic_number(g)
        report = {"method": "exact", "chromatic_number": k, "classes": c.as_lists()}
    _write(bio.dumps(report), args.out)
    return 0


def cmd_alpha(args) -> int:
    g = _load_graph(args.graph)
    _write(bio.dumps({"independence_number": independence_number(g)}), args.out)
    return 0


def _witness_source(args):
    if args.runs:
        n, b = args.runs
        return gen_circulant(n * b, b), witness_41(n, b)
    if args.mixed_runs:
        n, b, r = args.mixed_runs
        return gen_circulant(n * b + r, b), witness_42(n, b, r)
    if not args.graph:
        raise UsageError("--graph is required with --neighbourhoods or --from-file")
    g = _load_graph(args.graph)
    if args.from_file:
        return g, bio.parse_witness(_read(args.from_file))
    _, coloring = chromatic_number(g)
    return g, from_neighborhoods(g, coloring)


def _add_witness_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--runs", "--thm41", dest="runs", nargs=2, type=int, metavar=("N", "B"),
                     help="runs-of-b construction for G(nb, b)")
    src.add_argument("--mixed-runs", "--thm42", dest="mixed_runs", nargs=3, type=int,
                     metavar=("N", "B", "R"), help="mixed-run construction for G(nb+r, b)")
    src.add_argument("--neighbourhoods", "--cor33", dest="neighbourhoods", action="store_true",
                     help="neighbourhood-chain witness on an optimal colouring of --graph")
    src.add_argument("--from-file", metavar="WITNESS", help="witness JSON for --graph")
    p.add_argument("--graph", help="graph file (json or edge list, '-' for stdin)")


def cmd_witness(args) -> int:
    g, w = _witness_source(args)
    if w is None:
        _write(bio.dumps({"ok": False, "reason": "no neighbourhood-chain arrangement"}), args.out)
        return 1
    try:
        rep = validate_witness(g, w)
    except WitnessError as e:
        _write(bio.dumps({"ok": False, "error": str(e)}), args.out)
        return 1
    _write(bio.dumps({"ok": rep.ok, "witness": bio.witness_doc(w), "validation": rep.to_dict()}),
           args.out)
    return 0 if rep.ok else 1


def cmd_family(args) -> int:
    g, w = _witness_source(args)
    if w is None:
        _write(bio.dumps({"ok": False, "reason": "no neighbourhood-chain arrangement"}), args.out)
        return 1
    try:
        fam = build_family(g, w)
    except WitnessError as e:
        _write(bio.dumps({"ok": False, "error": str(e)}), args.out)
        return 1
    _write(bio.dumps({"ok": True, **bio.family_doc(g, fam)}), args.out)
    return 0


def cmd_realize(args) -> int:
    g = _load_graph(args.graph)
    r = realize_interval(g)
    if r is None:
        _write(bio.dumps({"ok": False, "reason": "not an interval graph"}), args.out)
        return 1
    _write(bio.emit(r, "json"), args.out)
    return 0


def cmd_boxes(args) -> int:
    g, w = _witness_source(args)
    if w is None:
        _write(bio.dumps({"ok": False, "reason": "no neighbourhood-chain arrangement"}), args.out)
        return 1
    try:
        _, _, boxes = boxes_from_witness(g, w)
    except (WitnessError, RealizationError) as e:
        _write(bio.dumps({"ok": False, "error": str(e)}), args.out)
        return 1
    _write(bio.emit(boxes, args.format), args.out)
    if args.figure:
        from .plotting import save_boxes
        save_boxes(boxes, args.figure)
    return 0


def cmd_boxicity(args) -> int:
    g = _load_graph(args.graph)
    try:
        k = boxicity_exact(g, k_max=args.kmax, limit=args.guard)
    except GuardExceeded:
        raise
    except RuntimeError as e:
        _write(bio.dumps({"boxicity": None, "method": "exact", "error": str(e),
                          "lower_bound": args.kmax + 1}), args.out)
        return 1
    _write(bio.dumps({"boxicity": k, "method": "exact"}), args.out)
    return 0


def cmd_crown_search(args) -> int:
    rep = crown_search(args.n, trials=args.trials, seed=args.seed,
                       exhaustive=args.exhaustive, pool=args.pool, jobs=args.jobs)
    _write(bio.dumps(rep.to_dict()), args.out)
    return 0


def cmd_at(args) -> int:
    t = at_witness(args.a, args.b)
    _write(bio.dumps({"triple": list(t.triple), "paths": [list(p) for p in t.paths]}), args.out)
    return 0


def cmd_explore(args) -> int:
    from .explore import COLUMNS, explore

    rows = explore(args.amin, args.amax, chi_max=args.chi_max, oracle_guard=args.guard,
                   jobs=args.jobs)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if row[k] is None else row[k] for k in COLUMNS})
    _write(buf.getvalue().encode(), args.out)
    if args.figure:
        from .plotting import save_sweep
        save_sweep(rows, args.figure)
    return 0


def cmd_convert(args) -> int:
    g = _load_graph(args.graph, args.input_format)
    _write(bio.emit(g, args.to), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, fn, help, aliases=()):
        p = sub.add_parser(name, help=help, aliases=list(aliases))
        p.set_defaults(func=fn)
        p.add_argument("--out", help="write to this file instead of stdout")
        return p

    p = command("gen", cmd_gen, "generate a graph")
    p.add_argument("kind", choices=["circulant", "crown", "cycle", "path", "complete",
                                    "multipartite", "complete_multipartite"])
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("--format", default="json", choices=["json", "edgelist", "dot"])

    p = command("recognize", cmd_recognize, "chordal / split / interval / AT checks")
    p.add_argument("graph")
    for flag in ("chordal", "split", "interval", "at"):
        p.add_argument(f"--{flag}", action="store_true")
    p.add_argument("--all", action="store_true", help="list every asteroidal triple")

    p = command("color", cmd_color, "exact or greedy colouring")
    p.add_argument("graph")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--greedy", action="store_true")
    p.add_argument("--order", nargs="+", type=int, help="vertex order for --greedy")

    p = command("alpha", cmd_alpha, "exact independence number")
    p.add_argument("graph")

    for name, fn, help in (("witness", cmd_witness, "build and validate a witness family"),
                           ("family", cmd_family, "build and verify the split interval family"),
                           ("boxes", cmd_boxes, "full pipeline to a box representation")):
        p = command(name, fn, help)
        _add_witness_source(p)
        if name == "boxes":
            p.add_argument("--format", default="json", choices=["json", "svg"])
            p.add_argument("--figure", help="also render the boxes to this image file")

    p = command("realize", cmd_realize, "interval model of an interval graph")
    p.add_argument("graph")

    p = command("boxicity", cmd_boxicity, "exact boxicity (small graphs)")
    p.add_argument("graph")
    p.add_argument("--exact", action="store_true", help="accepted for symmetry; always exact")
    p.add_argument("--kmax", type=int)
    p.add_argument("--guard", type=int, help="max non-edges (default $BOXKIT_GUARD or 20)")

    p = command("crown-search", cmd_crown_search, "search for 2 interval supergraphs of a crown")
    p.add_argument("n", type=int)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pool", type=int, default=256)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--jobs", type=int, default=1)

    p = command("at-witness", cmd_at, "asteroidal triple (1, ceil(b/2), b) of G(a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = command("explore", cmd_explore, "sweep G(a, b) and report certificates as CSV")
    p.add_argument("--amin", type=int, default=2)
    p.add_argument("--amax", type=int, default=16)
    p.add_argument("--chi-max", type=int, default=15)
    p.add_argument("--guard", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--figure", help="render the status grid to this image file")

    p = command("convert", cmd_convert, "convert a graph between formats", aliases=["emit"])
    p.add_argument("graph")
    p.add_argument("--to", default="json", choices=["json", "edgelist", "dot"])
    p.add_argument("--input-format", default="auto", choices=["auto", "json", "edgelist"])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, bio.ParseError, bio.UnsupportedFormat,
            GuardExceeded, OSError) as e:
        print(f"boxkit: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
