"""Command-line front end.

Subcommands::

    compute   per-graph invariant reports
    verify    run a theorem check (or ``all``)
    ng-scan   Nordhaus-Gaddum sum scan over a corpus
    families  emit named families / gadgets as graph6

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import partial
from typing import Iterable, Optional, Sequence

from .corpus import CorpusError, CorpusSpec, file_corpus, graph_corpus, read_graph6_lines, tree_corpus
from .graphcore import Graph, GraphError, families, format_set, graph6_decode, graph6_encode, members, subdivide
from .process import run_process
from .solver import invariant_report
from .verify import CHECKS, build_deg3_example, build_ng_family, build_subdiv_decrease, build_subdiv_increase
from .verify.checks import ng_scan, parallel_map, verify_theorem


class InputError(Exception):
    pass


# --- argument parsing helpers ------------------------------------------------


def parse_range(text: str) -> list[int]:
    """``"9..15"``, ``"3,5,8"`` or ``"7"``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise InputError(f"bad range {text!r}") from None
    if not out:
        raise InputError(f"empty range {text!r}")
    return out


_SIMPLE = {
    "path": families.path,
    "cycle": families.cycle,
    "complete": families.complete,
    "complete-minus-edge": families.complete_minus_edge,
    "star": families.star,
    "empty": families.empty,
    "join-k2-empty": families.join_K2_empty,
    "ng": build_ng_family,
    "deg3-example": build_deg3_example,
}
_PAIRED = {"complete-bipartite": families.complete_bipartite, "lollipop": families.lollipop}
_GADGETS = {"subdiv-decrease": build_subdiv_decrease, "subdiv-increase": build_subdiv_increase}

FAMILY_NAMES = sorted([*_SIMPLE, *_PAIRED, *_GADGETS, "spider"])


def parse_family(descriptor: str, subdivided: bool = False) -> list[Graph]:
    """Graphs for a descriptor like ``path:6``, ``spider:1,1,4`` or ``ng:9..11``."""
    name, _, params = descriptor.partition(":")
    name = name.strip().lower().replace("_", "-")
    try:
        if name == "spider":
            return [families.spider(*(int(p) for p in params.split(",")))]
        if name in _PAIRED:
            s, t = (int(p) for p in params.split(","))
            return [_PAIRED[name](s, t)]
        if name in _SIMPLE:
            return [_SIMPLE[name](n) for n in parse_range(params)]
        if name in _GADGETS:
            out = []
            for n in parse_range(params):
                G, e = _GADGETS[name](n)
                out.append(subdivide(G, e) if subdivided else G)
            return out
    except (ValueError, TypeError, GraphError) as exc:
        raise InputError(f"bad family descriptor {descriptor!r}: {exc}") from None
    raise InputError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}")


def _decode_g6(texts: Sequence[str]) -> list[Graph]:
    out = []
    for i, text in enumerate(texts, start=1):
        try:
            out.append(graph6_decode(text))
        except GraphError as exc:
            raise InputError(f"--g6 argument {i}: {exc}") from None
    return out


def _read_file(path: str) -> list[Graph]:
    try:
        if path == "-":
            return [G for _, G in read_graph6_lines(sys.stdin)]
        with open(path, encoding="ascii", errors="surrogateescape") as fh:
            return [G for _, G in read_graph6_lines(fh)]
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except CorpusError as exc:
        raise InputError(f"{path}: {exc}") from None


def _input_graphs(args, required: bool = True) -> Optional[list[Graph]]:
    sources = [s for s in (args.g6, args.file, args.family) if s]
    if len(sources) > 1:
        raise InputError("give exactly one of --g6, --file, --family")
    if not sources:
        if required:
            raise InputError("no input: give --g6, --file or --family")
        return None
    if args.g6:
        return _decode_g6(args.g6)
    if args.file:
        return _read_file(args.file)
    graphs = []
    for d in args.family:
        graphs.extend(parse_family(d, getattr(args, "subdivided", False)))
    return graphs


def _ks(args) -> Optional[list[int]]:
    if args.k is not None and args.k_max is not None:
        raise InputError("give either --k or --k-max")
    if args.k is not None:
        ks = [args.k]
    elif args.k_max is not None:
        ks = list(range(1, args.k_max + 1))
    else:
        return None
    if min(ks) < 1:
        raise InputError("k must be >= 1")
    return ks


# --- compute --------------------------------------------------------------


def _trace_text(G: Graph, S: int, k: int) -> str:
    tr = run_process(G, S, k)
    return ">".join(format_set(step) for step in tr.steps)


def _trace_json(G: Graph, S: int, k: int) -> dict:
    tr = run_process(G, S, k)
    return {
        "steps": [list(members(s)) for s in tr.steps],
        "forces": [[[v, list(members(w))] for v, w in step] for step in tr.forces],
        "complete": tr.complete,
    }


def _compute_one(G: Graph, k: int, trace: bool, fmt: str) -> str:
    r = invariant_report(G, k)
    if fmt == "jsonl":
        rec = {
            "graph6": r.graph6,
            "n": r.n,
            "k": r.k,
            "gamma": r.gamma,
            "gamma_pk": r.gamma_pk,
            "ppt": r.ppt,
            "PPT": r.PPT,
            "interval": [r.ppt, r.PPT],
            "achieved": r.achieved,
            "interval_full": r.interval_full,
            "num_min_sets": r.num_min_sets,
            "efficient_witness": list(members(r.efficient_witness)),
            "slowest_witness": list(members(r.slowest_witness)),
        }
        if trace:
            rec["trace"] = _trace_json(G, r.efficient_witness, k)
        return json.dumps(rec, sort_keys=True)
    cols = [
        r.graph6, r.n, r.k, r.gamma, r.gamma_pk, r.ppt, r.PPT,
        f"[{r.ppt},{r.PPT}]", "full" if r.interval_full else "gap", r.num_min_sets,
        format_set(r.efficient_witness), format_set(r.slowest_witness),
    ]
    if trace:
        cols.append(_trace_text(G, r.efficient_witness, k))
    return "\t".join(str(c) for c in cols)


COMPUTE_HEADER = "#graph6\tn\tk\tgamma\tgamma_pk\tppt\tPPT\tinterval\tfullness\tnum_min_sets\tefficient\tslowest"


def cmd_compute(args, out) -> int:
    graphs = _input_graphs(args)
    if args.k < 1:
        raise InputError("k must be >= 1")
    lines = parallel_map(partial(_compute_one, k=args.k, trace=args.trace, fmt=args.format), graphs, args.workers)
    if args.format == "tsv":
        print(COMPUTE_HEADER + ("\ttrace" if args.trace else ""), file=out)
    for line in lines:
        print(line, file=out)
    return 0


# --- verify ---------------------------------------------------------------


def _verify_corpus(tag: str, args) -> Optional[CorpusSpec]:
    info = CHECKS[tag]
    if info.kind != "corpus":
        return None
    connected = args.connected_only or info.connected_only
    if args.file:
        return file_corpus(args.file, connected_only=connected)
    orders = _resolved_orders(args, info.default_orders)
    if info.corpus_source == "trees":
        return tree_corpus(max(orders), max(1, min(orders)))
    return graph_corpus(max(orders), connected, n_min=min(orders))


def _resolved_orders(args, default: Sequence[int]) -> list[int]:
    if args.n:
        return parse_range(args.n)
    lo = args.n_min if args.n_min is not None else min(default)
    hi = args.n_max if args.n_max is not None else max(default)
    if hi < lo:
        raise InputError(f"empty order range {lo}..{hi}")
    return list(range(lo, hi + 1))


def cmd_verify(args, out) -> int:
    tags = list(CHECKS) if args.tag == "all" else [args.tag]
    if args.tag != "all" and args.tag not in CHECKS:
        raise InputError(f"unknown theorem tag {args.tag!r}; known: all, {', '.join(CHECKS)}")
    ks = _ks(args)
    ok = True
    if args.format == "tsv":
        print("#theorem_id\tcorpus\tchecked\tstatus\tcounterexamples", file=out)
    for tag in tags:
        info = CHECKS[tag]
        corpus = _verify_corpus(tag, args)
        orders = None if info.kind == "corpus" else _resolved_orders(args, info.default_orders)
        try:
            res = verify_theorem(tag, corpus, ks, orders, workers=args.workers)
        except (ValueError, GraphError) as exc:
            raise InputError(f"{tag}: {exc}") from None
        ok &= res.passed
        print(res.to_json() if args.format == "jsonl" else res.to_record(), file=out)
    return 0 if ok else 1


# --- ng-scan -----------------------------------------------------------------


def cmd_ng_scan(args, out) -> int:
    graphs = _input_graphs(args, required=False)
    if graphs is None:
        orders = _resolved_orders(args, (1, 8))
        graphs = list(graph_corpus(max(orders), args.connected_only, n_min=min(orders)).graphs())
    elif args.connected_only:
        graphs = [G for G in graphs if G.is_connected()]
    rows = ng_scan(graphs, args.workers)
    bad = False
    if args.format == "jsonl":
        for row in rows:
            rec = {"n": row.n, "graphs": row.graphs, "max_sum": row.max_sum,
                   "counterexamples": row.above_n, "extremal_count": len(row.at_n)}
            if args.list_extremal:
                rec["extremal"] = row.at_n
            bad |= bool(row.above_n)
            print(json.dumps(rec, sort_keys=True), file=out)
        return 1 if bad else 0
    print("#n\tgraphs\tmax_sum\tcounterexamples\textremal", file=out)
    for row in rows:
        print(f"{row.n}\t{row.graphs}\t{row.max_sum}\t{len(row.above_n)}\t{len(row.at_n)}", file=out)
    for row in rows:
        for g6 in row.above_n:
            bad = True
            print(f"counterexample\t{row.n}\t{g6}", file=out)
        if args.list_extremal:
            for g6 in row.at_n:
                print(f"extremal\t{row.n}\t{g6}", file=out)
    return 1 if bad else 0


# --- families -------------------------------------------------------------


def cmd_families(args, out) -> int:
    for d in args.descriptor:
        for G in parse_family(d, args.subdivided):
            print(graph6_encode(G), file=out)
    return 0


# --- entry point -----------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", action="append", help="graph6 string (repeatable)")
    p.add_argument("--file", help="graph6 file, one graph per line ('-' for stdin)")
    p.add_argument("--family", action="append", help="family descriptor, e.g. path:6 (repeatable)")


def _add_orders(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", "--n-range", dest="n", help="orders, e.g. 9..15")
    p.add_argument("--n-max", type=int)
    p.add_argument("--n-min", type=int)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpowerdom", description="k-power domination propagation time toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariant report per input graph")
    _add_input(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--trace", action="store_true", help="include the efficient set's propagation trace")
    p.add_argument("--subdivided", action="store_true", help=argparse.SUPPRESS)
    _add_common(p)

    p = sub.add_parser("verify", help="run a theorem check")
    p.add_argument("tag", help="theorem tag or 'all': " + ", ".join(CHECKS))
    p.add_argument("--k", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--file", help="graph6 corpus file instead of built-in enumeration")
    p.add_argument("--connected-only", action="store_true")
    _add_orders(p)
    _add_common(p)

    p = sub.add_parser("ng-scan", help="scan ppt(G) + ppt(complement) over a corpus")
    _add_input(p)
    _add_orders(p)
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--list-extremal", action="store_true", help="list graphs with sum = n")
    p.add_argument("--subdivided", action="store_true", help=argparse.SUPPRESS)
    _add_common(p)

    p = sub.add_parser("families", help="emit family members as graph6")
    p.add_argument("descriptor", nargs="+", help="e.g. spider:1,1,4  ng:9..11  subdiv-decrease:7")
    p.add_argument("--subdivided", action="store_true", help="emit G_e for subdivision gadgets")

    return parser


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "ng-scan": cmd_ng_scan, "families": cmd_families}


def main(argv: Optional[Iterable[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return COMMANDS[args.command](args, out)
    except (InputError, CorpusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
