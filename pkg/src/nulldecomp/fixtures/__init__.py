"""Bundled example graphs with frozen expected results.

Each fixture is an edge-list file plus an entry in expected.json holding
the values the analysis must reproduce: shape, nullity, the decomposition
by vertex name, alpha, nu, and for the unicyclic fixtures the cycle, the
type verdict, the singularity flag and the per-piece decompositions.
Some entries also carry known-good certificates (explicit maximum
independent sets or maximum matchings listed with the example) that are
validated against the graph.  check_fixture() recomputes everything and reports row by row;
the command line exposes it as `nulldecomp fixtures`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from ..graphs import Shape, classify_shape, parse_edge_list, pendant_trees
from ..linalg import nullity, support
from ..oracles import eg_set
from ..trees import decompose, tree_alpha, tree_nu
from ..unicyclic import analyze


def _read_text(filename):
    return (resources.files(__package__) / filename).read_text(encoding="utf-8")


def expectations():
    """The frozen expected values, keyed by fixture name."""
    return json.loads(_read_text("expected.json"))


def fixture_names():
    return tuple(sorted(expectations()))


def load_fixture(name):
    """Parse one bundled fixture into a Graph (with vertex names attached)."""
    exp = expectations()
    if name not in exp:
        raise KeyError(f"unknown fixture {name!r}; have {', '.join(sorted(exp))}")
    return parse_edge_list(_read_text(exp[name]["file"]))


@dataclass(frozen=True)
class CheckRow:
    label: str
    ok: bool
    got: str
    want: str


@dataclass(frozen=True)
class FixtureReport:
    fixture: str
    rows: tuple

    @property
    def ok(self):
        return all(r.ok for r in self.rows)


def _names(g, ids):
    return sorted(g.name_of(v) for v in ids)


def _id_map(g):
    return {g.name_of(v): v for v in range(g.n)}


def _all_max_independent_sets(g):
    """Every maximum independent set, by exhaustion.  Tiny graphs only."""
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best_size = 0
    out = []
    for mask in range(1 << g.n):
        m = mask
        independent = True
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if adj[v] & mask:
                independent = False
                break
        if not independent:
            continue
        size = mask.bit_count()
        if size > best_size:
            best_size = size
            out = [mask]
        elif size == best_size:
            out.append(mask)
    return [
        frozenset(v for v in range(g.n) if (mask >> v) & 1) for mask in out
    ]


def _matching_rows(g, row, pairs, want_size, label):
    ids = _id_map(g)
    seen = set()
    valid = True
    for a, b in pairs:
        u, v = ids[a], ids[b]
        if not g.has_edge(u, v) or u in seen or v in seen:
            valid = False
        seen.add(u)
        seen.add(v)
    row(f"{label} is a matching", valid, True)
    row(f"{label} size", len(pairs), want_size)


def _independent_rows(g, row, names, want_size, label):
    ids = _id_map(g)
    chosen = {ids[x] for x in names}
    clashing = [
        (u, v) for u, v in g.edges if u in chosen and v in chosen
    ]
    row(f"{label} is independent", clashing, [])
    row(f"{label} size", len(chosen), want_size)


def _decomposition_rows(g, row, label, got_supp, got_core, got_n, want):
    row(f"{label} supp", _names(g, got_supp), sorted(want.get("supp", [])))
    row(f"{label} core", _names(g, got_core), sorted(want.get("core", [])))
    row(f"{label} N-vertices", _names(g, got_n), sorted(want.get("n_vertices", [])))


def check_fixture(name):
    """Recompute everything for one fixture and compare to expected.json."""
    exp = expectations()[name]
    g = load_fixture(name)
    rows = []

    def row(label, got, want):
        rows.append(CheckRow(label, got == want, str(got), str(want)))

    shape = classify_shape(g)
    row("shape", shape.value, exp["shape"])
    row("kernel dimension", nullity(g), exp["nullity"])

    if shape == Shape.TREE:
        d = decompose(g)
        _decomposition_rows(
            g, row, "decomposition", d.supp, d.core, d.n_forest_vertices, exp
        )
        row("alpha", tree_alpha(g), exp["alpha"])
        row("nu", tree_nu(g), exp["nu"])
        if "eg" in exp:
            row("mismatched vertices", _names(g, eg_set(g)), sorted(exp["eg"]))
        if "max_independent_sets" in exp:
            got = {frozenset(_names(g, s)) for s in _all_max_independent_sets(g)}
            want = {frozenset(s) for s in exp["max_independent_sets"]}
            row(
                "all maximum independent sets",
                sorted(sorted(s) for s in got),
                sorted(sorted(s) for s in want),
            )
    else:
        a = analyze(g)
        row("cycle", [g.name_of(v) for v in a.cycle.vertices], exp["cycle"])
        row("type", a.kind, exp["type"])
        if exp["type"] == "I":
            row("witness", g.name_of(a.witness), exp["witness"])
        row("singular", a.singular, exp["singular"])
        row("composed nullity", a.nullity, exp["nullity"])
        row("alpha", a.alpha, exp["alpha"])
        row("nu", a.nu, exp["nu"])
        _independent_rows(
            g, row, _names(g, a.independent_set), exp["alpha"], "computed independent set"
        )
        got_matching = [
            sorted((g.name_of(u), g.name_of(v))) for u, v in a.matching
        ]
        _matching_rows(g, row, got_matching, exp["nu"], "computed matching")
        if exp["type"] == "I":
            by_kind = {p.kind: p for p in a.parts}
            for kind in ("pendant", "rest"):
                p = by_kind[kind]
                _decomposition_rows(
                    g, row, kind, p.supp, p.core, p.n_vertices, exp[kind]
                )
        else:
            by_verts = {
                frozenset(_names(g, p.vertices)): p for p in a.parts
            }
            for want in exp["components"]:
                key = frozenset(want["vertices"])
                p = by_verts.get(key)
                label = "component {" + ",".join(sorted(want["vertices"])) + "}"
                if p is None:
                    row(label + " present", "missing", "present")
                    continue
                _decomposition_rows(
                    g, row, label, p.supp, p.core, p.n_vertices, want
                )
        if "pendant_supports" in exp:
            ids = _id_map(g)
            pts = {pt.root: pt for pt in pendant_trees(g, a.cycle)}
            for root_name, want_supp in exp["pendant_supports"].items():
                pt = pts[ids[root_name]]
                got_supp = sorted(
                    g.name_of(pt.label_map[v]) for v in support(pt.tree)
                )
                row(f"pendant tree at {root_name} supp", got_supp, sorted(want_supp))

    if "known_matching" in exp:
        _matching_rows(g, row, exp["known_matching"], exp["nu"], "known matching")
    if "known_independent_set" in exp:
        _independent_rows(
            g, row, exp["known_independent_set"], exp["alpha"], "known independent set"
        )
    return FixtureReport(fixture=name, rows=tuple(rows))


def check_all():
    """Check every bundled fixture; returns one report per fixture."""
    return tuple(check_fixture(name) for name in fixture_names())
