"""Random-sweep invariant checks shared by the CLI and the test suite.

Each checker takes one instance and returns {invariant name: bool}.
run_sweep aggregates tallies and keeps the first offending graph per
invariant so failures can be echoed as edge lists and reproduced.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import (
    Graph,
    connected_components,
    induced_subgraph,
    pendant_trees,
    remove_vertices,
)
from .linalg import adjacency_matrix, null_basis, nullity
from .oracles import (
    Matching,
    eg_set,
    has_perfect_matching,
    max_independent_set,
    max_matching,
    mismatched_in,
)
from .randgraphs import tree_corpus, unicyclic_corpus
from .trees import decompose, tree_alpha, tree_nu
from .unicyclic import analyze

TREE_INVARIANTS = (
    "alpha formula vs oracle",
    "nu formula vs oracle",
    "EG set equals support",
    "support is independent",
    "core exclusion",
    "N-vertex flexibility",
    "S components singular, N components matched",
    "alpha + nu = n",
    "matched root iff outside support",
    "kernel vectors exact",
)

UNICYCLIC_INVARIANTS = (
    "alpha formula vs oracle",
    "nu formula vs oracle",
    "singularity verdict vs nullity",
    "composed nullity vs direct nullity",
    "certificates valid and sized",
    "type witness agrees with matching oracle",
    "cycle neighbors avoid component support",
    "kernel vectors exact",
)

CYCLE_INVARIANTS = (
    "singular iff length divisible by 4",
    "nullity is 2 or 0 by the same rule",
    "alpha and nu are floor(n/2)",
    "certificates valid and sized",
)


@dataclass
class SweepOutcome:
    tallies: dict
    failures: dict
    stats: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(fails == 0 for _, fails in self.tallies.values())


def kernel_vectors_exact(g):
    """Re-verify A x = 0 for every basis vector, via the generic product."""
    basis = null_basis(g)
    a = adjacency_matrix(g)
    for vec in basis.vectors:
        if any(x != 0 for x in a.apply(vec)):
            return False
    return True


def check_tree_instance(t):
    checks = {}
    d = decompose(t)
    alpha = tree_alpha(t)
    nu = tree_nu(t)
    oracle_alpha, _ = max_independent_set(t)
    oracle_nu = max_matching(t).size
    checks["alpha formula vs oracle"] = alpha == oracle_alpha
    checks["nu formula vs oracle"] = nu == oracle_nu
    checks["EG set equals support"] = eg_set(t) == d.supp
    checks["support is independent"] = not any(
        u in d.supp and v in d.supp for u, v in t.edges
    )

    ok = True
    for c in d.core:
        sub, _ = remove_vertices(t, {c} | set(t.neighbors(c)))
        forced, _ = max_independent_set(sub)
        if 1 + forced == alpha:  # c would fit into some maximum independent set
            ok = False
            break
    checks["core exclusion"] = ok

    ok = True
    for u in d.n_forest_vertices:
        without, _ = max_independent_set(remove_vertices(t, {u})[0])
        with_u, _ = max_independent_set(
            remove_vertices(t, {u} | set(t.neighbors(u)))[0]
        )
        if without != alpha or 1 + with_u != alpha:
            ok = False
            break
    checks["N-vertex flexibility"] = ok

    ok = True
    if d.s_forest_vertices:
        s_sub, _ = induced_subgraph(t, d.s_forest_vertices)
        for comp, _ in connected_components(s_sub):
            if has_perfect_matching(comp):
                ok = False  # S components are singular trees
    if ok and d.n_forest_vertices:
        n_sub, _ = induced_subgraph(t, d.n_forest_vertices)
        for comp, _ in connected_components(n_sub):
            if not has_perfect_matching(comp):
                ok = False
    checks["S components singular, N components matched"] = ok

    checks["alpha + nu = n"] = alpha + nu == t.n

    # Dual route for the root test: matching oracle vs kernel support.
    ok = True
    if len(t.edges) == t.n - 1 and t.n >= 1:  # connected, i.e. a tree
        for v in range(t.n):
            if mismatched_in(t, v) != (v in d.supp):
                ok = False
                break
    checks["matched root iff outside support"] = ok

    checks["kernel vectors exact"] = kernel_vectors_exact(t)
    return checks


def _unicyclic_checks(g, analysis):
    checks = {}
    oracle_alpha, _ = max_independent_set(g)
    oracle_nu = max_matching(g).size
    direct = nullity(g)
    checks["alpha formula vs oracle"] = analysis.alpha == oracle_alpha
    checks["nu formula vs oracle"] = analysis.nu == oracle_nu
    checks["singularity verdict vs nullity"] = analysis.singular == (direct > 0)
    checks["composed nullity vs direct nullity"] = analysis.nullity == direct

    ok = len(analysis.independent_set) == analysis.alpha
    if ok:
        ok = not any(
            u in analysis.independent_set and v in analysis.independent_set
            for u, v in g.edges
        )
    if ok:
        ok = Matching(frozenset(analysis.matching)).is_valid_for(g)
    if ok:
        ok = len(analysis.matching) == analysis.nu
    checks["certificates valid and sized"] = ok

    pts = pendant_trees(g, analysis.cycle)
    ok = True
    if analysis.kind == "I":
        pt = next(p for p in pts if p.root == analysis.witness)
        if mismatched_in(pt.tree, pt.root_local):
            ok = False
    else:
        for pt in pts:
            if not mismatched_in(pt.tree, pt.root_local):
                ok = False
                break
    checks["type witness agrees with matching oracle"] = ok

    ok = True
    if analysis.kind == "II":
        component_supp = set()
        for part in analysis.parts:
            component_supp |= part.supp
        on_cycle = set(analysis.cycle.vertices)
        for v in analysis.cycle.vertices:
            for u in g.neighbors(v):
                if u not in on_cycle and u in component_supp:
                    ok = False
    checks["cycle neighbors avoid component support"] = ok

    checks["kernel vectors exact"] = kernel_vectors_exact(g)
    return checks


def check_unicyclic_instance(g):
    return _unicyclic_checks(g, analyze(g))


def check_cycle_instance(g):
    checks = {}
    n = g.n
    expect_singular = n % 4 == 0
    analysis = analyze(g)
    checks["singular iff length divisible by 4"] = analysis.singular == expect_singular
    checks["nullity is 2 or 0 by the same rule"] = nullity(g) == (
        2 if expect_singular else 0
    )
    checks["alpha and nu are floor(n/2)"] = (
        analysis.alpha == n // 2 and analysis.nu == n // 2
    )
    checks["certificates valid and sized"] = (
        len(analysis.independent_set) == n // 2
        and Matching(frozenset(analysis.matching)).is_valid_for(g)
        and len(analysis.matching) == n // 2
    )
    return checks


def run_sweep(corpus, checker, invariant_names):
    tallies = {name: [0, 0] for name in invariant_names}
    failures = {}
    for g in corpus:
        result = checker(g)
        for name, passed in result.items():
            row = tallies[name]
            if passed:
                row[0] += 1
            else:
                row[1] += 1
                failures.setdefault(name, g)
    return SweepOutcome(
        tallies={k: (p, f) for k, (p, f) in tallies.items()},
        failures=failures,
        stats={},
    )


def tree_sweep(count, n_min, n_max, seed):
    corpus = tree_corpus(count, n_min, n_max, seed)
    return run_sweep(corpus, check_tree_instance, TREE_INVARIANTS)


def unicyclic_sweep(count, n_min, n_max, seed):
    corpus = unicyclic_corpus(count, n_min, n_max, seed)
    tallies = {name: [0, 0] for name in UNICYCLIC_INVARIANTS}
    failures = {}
    stats = {}
    for g in corpus:
        analysis = analyze(g)
        kind = f"type {analysis.kind}"
        stats[kind] = stats.get(kind, 0) + 1
        verdict = "singular" if analysis.singular else "nonsingular"
        stats[verdict] = stats.get(verdict, 0) + 1
        for name, passed in _unicyclic_checks(g, analysis).items():
            row = tallies[name]
            if passed:
                row[0] += 1
            else:
                row[1] += 1
                failures.setdefault(name, g)
    return SweepOutcome(
        tallies={k: (p, f) for k, (p, f) in tallies.items()},
        failures=failures,
        stats=stats,
    )


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_sweep(n_min=3, n_max=24):
    corpus = [cycle_graph(n) for n in range(n_min, n_max + 1)]
    return run_sweep(corpus, check_cycle_instance, CYCLE_INVARIANTS)
