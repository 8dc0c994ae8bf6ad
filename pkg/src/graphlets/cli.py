"""Command-line front end: count graphlets, compare against a null model,
generate family graphs, evaluate analytic formulas, self-test.

Exit codes: 0 success, 1 usage error, 2 bad input or failed selftest,
3 size-guard refusal. All reports are rendered deterministically (sorted
JSON keys, fixed CSV row order, fixed-precision decimals) so identical
invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import families
from .fivecounts import FIVE_IDS, count_five
from .graph import Graph, format_edge_list, parse_edge_list, read_edge_list
from .induced import induced_from_noninduced
from .oracle import oracle_induced, oracle_noninduced_many
from .smallcounts import SMALL_IDS, count_small

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _slot(code: int) -> str:
    return f"M{code}_5"


def _fmt(x: float) -> str:
    return "%.6g" % x


def _graph_block(g: Graph) -> dict:
    density = _fmt(2 * g.m / (g.n * (g.n - 1))) if g.n >= 2 else "nan"
    return {"n": g.n, "m": g.m, "density": density}


def run_count(g: Graph, include_induced: bool = True) -> dict:
    """Count report for one graph: header, non-induced, optionally induced."""
    y = count_five(g)
    report = {
        "graph": _graph_block(g),
        "noninduced": {_slot(a): y[a] for a in FIVE_IDS},
    }
    if include_induced:
        t = induced_from_noninduced(y)
        report["induced"] = {_slot(a): t[a] for a in FIVE_IDS}
    return report


def run_null_compare(g: Graph, replicates: int = 100, seed: int = 0) -> dict:
    """Count report plus per-slot comparison against a density-matched null.

    The null draws `replicates` independent graphs with the input's node
    count and edge density; each replicate's seed is pre-drawn from one
    master generator, so the whole comparison is a pure function of
    (graph, replicates, seed).
    """
    if replicates < 1:
        raise ValueError("need at least one replicate")
    if g.n < 2:
        raise ValueError("null comparison needs at least two nodes")
    report = run_count(g, include_induced=True)
    p = 2 * g.m / (g.n * (g.n - 1))
    master = random.Random(seed)
    seeds = [master.randrange(2**63) for _ in range(replicates)]
    sums = dict.fromkeys(FIVE_IDS, 0)
    for s in seeds:
        null_counts = count_five(families.erdos_renyi(g.n, p, s))
        for a in FIVE_IDS:
            sums[a] += null_counts[a]
    slots = {}
    for a in FIVE_IDS:
        observed = report["noninduced"][_slot(a)]
        total = sums[a]
        if total == 0:
            ratio = "inf" if observed else "nan"
        else:
            ratio = _fmt(observed * replicates / total)
        slots[_slot(a)] = {
            "sum": total,
            "mean": _fmt(total / replicates),
            "ratio": ratio,
        }
    report["null_model"] = {
        "replicates": replicates,
        "seed": seed,
        "edge_probability": _fmt(p),
        "slots": slots,
    }
    return report


def run_generate(family: str, **params) -> Graph:
    """Build one graph from a named family."""
    builders = {
        "complete": lambda: families.complete(params["n"]),
        "path": lambda: families.path(params["n"]),
        "cycle": lambda: families.cycle(params["n"]),
        "star": lambda: families.star(params["n"]),
        "ring": lambda: families.ring_lattice(params["n"], params["k"]),
        "npartite": lambda: families.n_partite([params["size"]] * params["groups"]),
        "er": lambda: families.erdos_renyi(
            params["n"], params["p"], params.get("seed", 0)
        ),
    }
    if family not in builders:
        raise ValueError(f"unknown family {family!r}")
    return builders[family]()


def run_analytic(kind: str, **params) -> dict:
    """Evaluate one closed-form family count without building the graph."""
    if kind == "walks":
        pair = families.complete_walks(params["n"], params["k"])
        return {"closed": pair.closed, "distinct": pair.distinct}
    if kind == "fivepaths":
        return {"count": families.five_paths_complete(params["n"])}
    if kind == "bulls":
        return {"count": families.bulls_balanced_npartite(params["groups"], params["size"])}
    if kind == "spintops":
        return {"count": families.spinning_tops_ring_lattice(params["n"], params["k"])}
    raise ValueError(f"unknown analytic formula {kind!r}")


_SELFTEST_GRAPHS = (
    ("complete-5", lambda: families.complete(5)),
    ("cycle-6", lambda: families.cycle(6)),
    ("path-7", lambda: families.path(7)),
    ("star-6", lambda: families.star(6)),
    ("bipartite-3x3", lambda: families.n_partite([3, 3])),
    ("ring-8-2", lambda: families.ring_lattice(8, 2)),
    ("random-9", lambda: families.erdos_renyi(9, 0.4, 7)),
    ("random-10", lambda: families.erdos_renyi(10, 0.3, 11)),
)


def run_selftest(out=None) -> int:
    """Check the closed formulas against the brute-force oracle.

    Small fixed graphs only; takes a few seconds. Returns a process exit
    code (0 all good, 2 on any mismatch).
    """
    out = out or sys.stdout
    bad = 0
    for name, build in _SELFTEST_GRAPHS:
        g = build()
        rows = (
            ("small", count_small(g), oracle_noninduced_many(g, SMALL_IDS)),
            ("five", count_five(g), oracle_noninduced_many(g, FIVE_IDS)),
            ("induced", induced_from_noninduced(count_five(g)), oracle_induced(g)),
        )
        broken = [label for label, got, want in rows if got != want]
        if broken:
            bad += 1
            out.write(f"MISMATCH {name}: {', '.join(broken)}\n")
        else:
            out.write(f"ok {name}\n")
    if bad:
        out.write(f"selftest failed on {bad} graph(s)\n")
        return EXIT_INPUT
    out.write(f"selftest passed ({len(_SELFTEST_GRAPHS)} graphs)\n")
    return EXIT_OK


def _render_csv(report: dict) -> str:
    lines = ["section,key,value"]
    for key in ("n", "m", "density"):
        lines.append(f"graph,{key},{report['graph'][key]}")
    for section in ("noninduced", "induced"):
        if section in report:
            for a in FIVE_IDS:
                lines.append(f"{section},{_slot(a)},{report[section][_slot(a)]}")
    if "null_model" in report:
        null = report["null_model"]
        for key in ("replicates", "seed", "edge_probability"):
            lines.append(f"null_model,{key},{null[key]}")
        for a in FIVE_IDS:
            cell = null["slots"][_slot(a)]
            for key in ("sum", "mean", "ratio"):
                lines.append(f"null_model,{_slot(a)}:{key},{cell[key]}")
    return "\n".join(lines) + "\n"


def _render(report: dict, fmt: str) -> str:
    if fmt == "csv":
        return _render_csv(report)
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _load_graph(source: str) -> Graph:
    if source == "-":
        return parse_edge_list(sys.stdin.read())
    return read_edge_list(source)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cmd_count(args) -> int:
    g = _load_graph(args.input)
    if g.n > args.max_nodes:
        sys.stderr.write(
            f"refusing {g.n} nodes (limit {args.max_nodes}); raise --max-nodes to override\n"
        )
        return EXIT_GUARD
    report = run_count(g, include_induced=not args.no_induced)
    sys.stdout.write(_render(report, args.format))
    return EXIT_OK


def _cmd_compare(args) -> int:
    g = _load_graph(args.input)
    if g.n > args.max_nodes:
        sys.stderr.write(
            f"refusing {g.n} nodes (limit {args.max_nodes}); raise --max-nodes to override\n"
        )
        return EXIT_GUARD
    report = run_null_compare(g, replicates=args.replicates, seed=args.seed)
    sys.stdout.write(_render(report, args.format))
    return EXIT_OK


def _cmd_gen(args) -> int:
    params = {
        key: getattr(args, key)
        for key in ("n", "k", "p", "groups", "size", "seed")
        if hasattr(args, key)
    }
    g = run_generate(args.family, **params)
    text = format_edge_list(g)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_OK


def _cmd_analytic(args) -> int:
    params = {
        key: getattr(args, key)
        for key in ("n", "k", "groups", "size")
        if hasattr(args, key)
    }
    result = run_analytic(args.kind, **params)
    sys.stdout.write(json.dumps(result, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _cmd_selftest(args) -> int:
    return run_selftest()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="graphlets",
        description="Exact five-node graphlet counting from closed formulas.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    count_p = sub.add_parser("count", help="count graphlets in an edge-list file")
    count_p.add_argument("input", help="edge-list path, or - for stdin")
    count_p.add_argument("--format", choices=("json", "csv"), default="json")
    count_p.add_argument("--no-induced", action="store_true",
                         help="skip the induced block")
    count_p.add_argument("--max-nodes", type=int, default=2000,
                         help="refuse larger graphs (default 2000)")
    count_p.set_defaults(handler=_cmd_count)

    cmp_p = sub.add_parser("compare", help="compare counts against a density-matched null")
    cmp_p.add_argument("input", help="edge-list path, or - for stdin")
    cmp_p.add_argument("--replicates", type=int, default=100)
    cmp_p.add_argument("--seed", type=int, default=0)
    cmp_p.add_argument("--format", choices=("json", "csv"), default="json")
    cmp_p.add_argument("--max-nodes", type=int, default=2000)
    cmp_p.set_defaults(handler=_cmd_compare)

    out_opt = argparse.ArgumentParser(add_help=False)
    out_opt.add_argument("--out", default="-", help="output path (default stdout)")

    gen_p = sub.add_parser("gen", help="write a family graph as an edge list")
    gen_sub = gen_p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    for fam in ("complete", "path", "cycle", "star"):
        fam_p = gen_sub.add_parser(fam, parents=[out_opt])
        fam_p.add_argument("n", type=int)
    ring_p = gen_sub.add_parser("ring", parents=[out_opt])
    ring_p.add_argument("n", type=int)
    ring_p.add_argument("k", type=int)
    np_p = gen_sub.add_parser("npartite", parents=[out_opt])
    np_p.add_argument("groups", type=int)
    np_p.add_argument("size", type=int)
    er_p = gen_sub.add_parser("er", parents=[out_opt])
    er_p.add_argument("n", type=int)
    er_p.add_argument("p", type=float)
    er_p.add_argument("--seed", type=int, default=0)
    gen_p.set_defaults(handler=_cmd_gen)

    ana_p = sub.add_parser("analytic", help="evaluate a closed-form family count")
    ana_sub = ana_p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    walks_p = ana_sub.add_parser("walks", help="k-step walk counts in a complete graph")
    walks_p.add_argument("n", type=int)
    walks_p.add_argument("k", type=int)
    fp_p = ana_sub.add_parser("fivepaths", help="5-paths in a complete graph")
    fp_p.add_argument("n", type=int)
    bulls_p = ana_sub.add_parser("bulls", help="bulls in a balanced multipartite graph")
    bulls_p.add_argument("groups", type=int)
    bulls_p.add_argument("size", type=int)
    st_p = ana_sub.add_parser("spintops", help="spinning tops in a ring lattice")
    st_p.add_argument("n", type=int)
    st_p.add_argument("k", type=int)
    ana_p.set_defaults(handler=_cmd_analytic)

    self_p = sub.add_parser("selftest", help="check the formulas against the oracle")
    self_p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
