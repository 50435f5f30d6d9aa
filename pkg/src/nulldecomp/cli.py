"""Command line interface.

Subcommands:

  analyze   read one graph, print its analysis as JSON
  verify    run seeded random sweeps of the invariant checks
  fixtures  recheck the bundled examples against their frozen values

Exit codes: 0 success, 1 a verification or fixture check failed, 2 the
input did not parse, 3 the input is unsupported (wrong shape, no
vertices, or past the size guard for oracle cross-checks).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import EmptyGraph, ParseError, TooLarge
from .fixtures import check_all
from .graphs import (
    Role,
    Shape,
    classify_shape,
    export_dot,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
)
from .linalg import nullity
from .oracles import eg_set, max_independent_set, max_matching
from .sweeps import cycle_sweep, tree_sweep, unicyclic_sweep
from .trees import (
    decompose,
    independent_set_certificate,
    matching_certificate,
    tree_alpha,
    tree_nu,
)
from .unicyclic import analyze


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _names(g, ids):
    return [g.name_of(v) for v in sorted(ids)]


def _pairs(g, edge_set):
    return [[g.name_of(u), g.name_of(v)] for u, v in sorted(edge_set)]


def _roles_from(supp, core, n_vertices):
    roles = {}
    for v in supp:
        roles[v] = Role.SUPPORT
    for v in core:
        roles[v] = Role.CORE
    for v in n_vertices:
        roles[v] = Role.N_VERTEX
    return roles


def _forest_report(g, shape, d, eta):
    return {
        "shape": shape.value,
        "vertex_count": g.n,
        "edge_count": len(g.edges),
        "nullity": eta,
        "singular": eta > 0,
        "alpha": tree_alpha(g),
        "nu": tree_nu(g),
        "supp": _names(g, d.supp),
        "core": _names(g, d.core),
        "n_vertices": _names(g, d.n_forest_vertices),
        "independent_set": _names(g, independent_set_certificate(g)),
        "matching": _pairs(g, matching_certificate(g)),
    }


def _unicyclic_report(g, shape, a):
    parts = []
    for p in a.parts:
        entry = {
            "kind": p.kind,
            "vertices": _names(g, p.vertices),
            "supp": _names(g, p.supp),
            "core": _names(g, p.core),
            "n_vertices": _names(g, p.n_vertices),
        }
        if p.root is not None:
            entry["root"] = g.name_of(p.root)
        parts.append(entry)
    return {
        "shape": shape.value,
        "vertex_count": g.n,
        "edge_count": len(g.edges),
        "cycle": [g.name_of(v) for v in a.cycle.vertices],
        "type": a.kind,
        "witness": g.name_of(a.witness) if a.witness is not None else None,
        "singular": a.singular,
        "singular_reason": a.singular_reason,
        "nullity": a.nullity,
        "alpha": a.alpha,
        "nu": a.nu,
        "parts": parts,
        "independent_set": _names(g, a.independent_set),
        "matching": _pairs(g, a.matching),
    }


def cmd_analyze(args):
    try:
        text = _read_input(args.path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        g = parse_edge_list(text) if args.format == "edges" else parse_graph6(text)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        shape = classify_shape(g)
    except EmptyGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if shape == Shape.OTHER:
        print(
            "error: only forests and graphs with exactly one cycle are supported",
            file=sys.stderr,
        )
        return 3

    if shape in (Shape.TREE, Shape.FOREST):
        d = decompose(g)
        report = _forest_report(g, shape, d, nullity(g))
        roles = _roles_from(d.supp, d.core, d.n_forest_vertices)

        def verification():
            oracle_alpha, _ = max_independent_set(g)
            return {
                "alpha vs oracle": report["alpha"] == oracle_alpha,
                "nu vs oracle": report["nu"] == max_matching(g).size,
                "mismatched vertices equal support": eg_set(g) == d.supp,
            }
    else:
        a = analyze(g)
        report = _unicyclic_report(g, shape, a)
        roles = {}
        for p in a.parts:
            roles.update(_roles_from(p.supp, p.core, p.n_vertices))

        def verification():
            oracle_alpha, _ = max_independent_set(g)
            direct = nullity(g)
            return {
                "alpha vs oracle": a.alpha == oracle_alpha,
                "nu vs oracle": a.nu == max_matching(g).size,
                "nullity composition vs elimination": a.nullity == direct,
                "singularity verdict vs kernel": a.singular == (direct > 0),
            }

    code = 0
    if args.verify:
        try:
            checks = verification()
        except TooLarge as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
        report["verification"] = checks
        if not all(checks.values()):
            code = 1

    if args.dot is not None:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(g, roles))

    print(json.dumps(report, indent=2, sort_keys=True))
    return code


_SWEEP_RANGES = {"tree": (2, 16), "unicyclic": (6, 16), "cycle": (3, 24)}
_SWEEP_FLOORS = {"tree": 1, "unicyclic": 3, "cycle": 3}


def cmd_verify(args, parser):
    kind = args.kind
    lo, hi = _SWEEP_RANGES[kind]
    min_n = args.min_n if args.min_n is not None else lo
    max_n = args.max_n if args.max_n is not None else hi
    if min_n < _SWEEP_FLOORS[kind]:
        parser.error(f"--min-n must be at least {_SWEEP_FLOORS[kind]} for {kind}")
    if max_n < min_n:
        parser.error("--max-n must be at least --min-n")
    if args.count < 1:
        parser.error("--count must be positive")

    if kind == "tree":
        outcome = tree_sweep(args.count, min_n, max_n, args.seed)
        print(f"{args.count} random trees, {min_n} <= n <= {max_n}, seed {args.seed}")
    elif kind == "unicyclic":
        outcome = unicyclic_sweep(args.count, min_n, max_n, args.seed)
        print(
            f"{args.count} random unicyclic graphs, {min_n} <= n <= {max_n}, "
            f"seed {args.seed}"
        )
    else:
        outcome = cycle_sweep(min_n, max_n)
        print(f"cycles C_n, {min_n} <= n <= {max_n}")

    for name, (passed, failed) in outcome.tallies.items():
        print(f"  {name}: {passed} pass, {failed} fail")
    for key in sorted(outcome.stats):
        print(f"  {key}: {outcome.stats[key]}")
    if not outcome.ok:
        for name in sorted(outcome.failures):
            print(f"\nfirst failing graph for {name}:")
            sys.stdout.write(format_edge_list(outcome.failures[name]))
        return 1
    return 0


def cmd_fixtures(args):
    failed = 0
    for rep in check_all():
        status = "ok" if rep.ok else "FAIL"
        print(f"{rep.fixture}: {len(rep.rows)} checks, {status}")
        if args.verbose or not rep.ok:
            for r in rep.rows:
                mark = "ok" if r.ok else "FAIL"
                line = f"  [{mark}] {r.label}"
                if not r.ok:
                    line += f": got {r.got}, want {r.want}"
                print(line)
        if not rep.ok:
            failed += 1
    return 0 if failed == 0 else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nulldecomp",
        description=(
            "Kernel-based analysis of trees, forests and unicyclic graphs: "
            "singularity, independence number, matching number, certificates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze one graph, print JSON")
    p_an.add_argument(
        "path",
        nargs="?",
        default="-",
        help="input file, or - for stdin (default)",
    )
    p_an.add_argument(
        "--format",
        choices=("edges", "g6"),
        default="edges",
        help="input format: edge list (default) or graph6",
    )
    p_an.add_argument(
        "--verify",
        action="store_true",
        help="cross-check the closed formulas against brute-force oracles",
    )
    p_an.add_argument(
        "--dot",
        metavar="FILE",
        help="also write a DOT rendering with decomposition roles",
    )

    p_ver = sub.add_parser("verify", help="random sweeps of the invariant checks")
    p_ver.add_argument("--kind", choices=("tree", "unicyclic", "cycle"), required=True)
    p_ver.add_argument("--count", type=int, default=200, help="instances (default 200)")
    p_ver.add_argument("--min-n", type=int, default=None, dest="min_n")
    p_ver.add_argument("--max-n", type=int, default=None, dest="max_n")
    p_ver.add_argument("--seed", type=int, default=0)

    p_fix = sub.add_parser("fixtures", help="recheck the bundled examples")
    p_fix.add_argument("--verbose", action="store_true", help="print every check row")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "analyze":
        return cmd_analyze(args)
    if args.command == "verify":
        return cmd_verify(args, parser)
    return cmd_fixtures(args)


if __name__ == "__main__":
    sys.exit(main())
