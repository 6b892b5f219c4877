"""Command-line entry point: ``mdcolor <subcommand> ...``.

Exit codes: 0 success, 1 a domain precondition failed, 2 unreadable or
malformed input (argparse usage errors also exit 2).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from mdcolor import constructions as cons
from mdcolor.certificate import md1_certificate
from mdcolor.coloring import EdgeColoring, canonicalize, verify_md
from mdcolor.errors import DomainError, FormatError
from mdcolor.experiments import md1_fraction
from mdcolor.graph import (
    Graph,
    complement,
    complete_graph,
    complete_minus_edge,
    complete_multipartite,
    join,
    line_graph,
    path_graph,
    petersen_graph,
    square,
    star_graph,
)
from mdcolor.io import format_coloring, format_edge_list, read_coloring, read_graph
from mdcolor.nordhaus import ng_pair, sampled_search, scan_order
from mdcolor.oracle import DEFAULT_CAP, brute_force_oracle
from mdcolor.solver import md_decide, md_exact

FAMILIES = (
    "cycle", "path", "tree", "star", "unicyclic", "complete", "complete_minus",
    "complete_multipartite", "broom", "ng_lower", "n6_lower", "petersen",
    "join", "square", "line_graph",
)


def _int(params: list[str], i: int, name: str) -> int:
    try:
        return int(params[i])
    except IndexError:
        raise DomainError(f"missing parameter {name}") from None
    except ValueError:
        raise DomainError(f"parameter {name} must be an integer, got {params[i]!r}") from None


def build_family(family: str, params: list[str], seed: int) -> tuple[Graph, EdgeColoring | None]:
    """Graph for a named family, plus its explicit extremal coloring when one is known."""
    rng = random.Random(seed)
    if family == "cycle":
        return cons.color_cycle(_int(params, 0, "N"))
    if family in ("path", "tree", "star", "broom"):
        size = _int(params, 0, "N")
        if family == "path":
            G = path_graph(size)
        elif family == "tree":
            G = cons.random_tree(size, rng)
        elif family == "star":
            G = star_graph(size)
        else:
            G = cons.broom(size)
        return G, cons.color_tree(G)
    if family == "unicyclic":
        G = cons.random_unicyclic(_int(params, 0, "N"), rng)
        return G, cons.color_unicyclic(G)
    if family == "complete":
        return complete_graph(_int(params, 0, "N")), None
    if family == "complete_minus":
        return complete_minus_edge(_int(params, 0, "N")), None
    if family == "complete_multipartite":
        if not params:
            raise DomainError("complete_multipartite needs part sizes")
        return complete_multipartite([_int(params, i, "size") for i in range(len(params))]), None
    if family == "ng_lower":
        return cons.ng_lower_graph(_int(params, 0, "N")), None
    if family == "n6_lower":
        return cons.n6_product_lower_pair()[0], None
    if family == "petersen":
        return petersen_graph(), None
    if family == "join":
        if len(params) != 2:
            raise DomainError("join needs two graph files")
        return join(read_graph(params[0]), read_graph(params[1])), None
    if family in ("square", "line_graph"):
        if len(params) != 1:
            raise DomainError(f"{family} needs one graph file")
        H = read_graph(params[0])
        return (square(H) if family == "square" else line_graph(H)), None
    raise DomainError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _plain(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, list) and value and all(isinstance(x, int) for x in value):
            value = " ".join(map(str, value))
        elif isinstance(value, (list, dict)):
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _emit(args, payload) -> None:
    if args.format == "plain":
        print(_plain(payload))
    else:
        print(json.dumps(payload, indent=2))


def cmd_md(args):
    _emit(args, md_exact(read_graph(args.graph)).to_json())


def cmd_verify(args):
    G = read_graph(args.graph)
    verdict = verify_md(G, EdgeColoring(read_coloring(args.coloring)))
    _emit(args, {"is_md": verdict.is_md, "uncovered_pairs": [list(p) for p in verdict.uncovered_pairs]})


def cmd_decide(args):
    G = read_graph(args.graph)
    found = md_decide(G, args.k)
    _emit(args, {"k": args.k, "found": found is not None, "witness": list(found.colors) if found else None})


def cmd_certify1(args):
    G = read_graph(args.graph)
    cert = md1_certificate(G)
    if args.format == "plain" and cert is None:
        print("none")
        return
    _emit(args, {"certificate": cert.to_json() if cert else None})


def cmd_oracle(args):
    G = read_graph(args.graph)
    cap = args.oracle_cap if args.oracle_cap is not None else DEFAULT_CAP
    _emit(args, brute_force_oracle(G, cap=cap).to_json())


def cmd_construct(args):
    G, coloring = build_family(args.family, args.params, args.seed)
    method = "construction"
    if coloring is None:
        coloring = md_exact(G).witness
        method = "md_exact"
    coloring = canonicalize(coloring)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = args.name or "_".join([args.family] + [Path(p).stem for p in args.params])
    gpath, cpath = out / f"{stem}.txt", out / f"{stem}.col"
    gpath.write_text(format_edge_list(G))
    cpath.write_text(format_coloring(coloring.colors))
    _emit(args, {
        "graph": str(gpath), "coloring": str(cpath), "n": G.n, "m": G.m,
        "palette": coloring.palette_size, "method": method, "colors": list(coloring.colors),
    })


def _write_graph_out(args, G: Graph) -> None:
    text = format_edge_list(G)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args):
    G, _ = build_family(args.family, args.params, args.seed)
    _write_graph_out(args, G)


def cmd_complement(args):
    _write_graph_out(args, complement(read_graph(args.graph)))


def cmd_ng(args):
    _emit(args, ng_pair(read_graph(args.graph)).to_json())


def cmd_scan(args):
    _emit(args, scan_order(args.n, dedup=args.dedup).to_json())


def cmd_search(args):
    hit = sampled_search(args.n, args.target, args.budget, args.seed)
    _emit(args, {"found": hit is not None, "witness": hit.to_json() if hit else None})


def cmd_random(args):
    report = md1_fraction(args.n, args.p, args.trials, args.seed)
    if args.csv:
        Path(args.csv).write_text(report.to_csv())
    _emit(args, report.to_json())


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "plain"), default="json")
    common.add_argument("--deterministic", action="store_true",
                        help="sequential search (the search is always sequential; kept for scripts)")
    common.add_argument("--oracle-cap", type=int, default=None, metavar="M",
                        help=f"edge cap for the brute-force oracle (default {DEFAULT_CAP})")

    parser = argparse.ArgumentParser(prog="mdcolor", description="Monochromatic disconnection colorings of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("md", cmd_md, "exact md with witness").add_argument("graph")
    p = add("verify", cmd_verify, "check a coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p = add("decide", cmd_decide, "MD-coloring with at least K colors")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    add("certify1", cmd_certify1, "closure certificate for md = 1").add_argument("graph")
    add("oracle", cmd_oracle, "brute-force md").add_argument("graph")
    for name, func in (("construct", cmd_construct), ("generate", cmd_generate)):
        p = add(name, func, f"{name} a named family ({', '.join(FAMILIES)})")
        p.add_argument("family")
        p.add_argument("params", nargs="*")
        p.add_argument("--seed", type=int, default=0)
        if name == "construct":
            p.add_argument("--out-dir", default=".")
            p.add_argument("--name", default=None)
        else:
            p.add_argument("-o", "--output", default=None)
    p = add("complement", cmd_complement, "complement graph")
    p.add_argument("graph")
    p.add_argument("-o", "--output", default=None)
    add("ng", cmd_ng, "md of a graph and its complement").add_argument("graph")
    p = add("scan", cmd_scan, "exhaustive Nordhaus-Gaddum scan")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--dedup", action="store_true")
    p = add("search", cmd_search, "sampled Nordhaus-Gaddum witness search")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    p = add("random", cmd_random, "G(n, p) md = 1 certificate rates")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=float, required=True)
    p.add_argument("-t", "--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", default=None, help="write one row per trial")
    return parser


def run(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
