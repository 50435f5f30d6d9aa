"""Type classification, singularity, alpha and nu for unicyclic graphs.

A connected graph with exactly one cycle splits into pendant trees, one
per cycle vertex.  The dichotomy: the graph is of type I when some cycle
vertex is matched inside its own pendant tree (saturated by every
maximum matching of it), type II when every cycle vertex is mismatched.
Pure cycles land in type II with nothing hanging off.

Everything downstream keys off that split.  For type I with matched
witness v, the graph behaves like the disjoint union of the pendant tree
at v and the rest; for type II it behaves like the cycle plus the forest
left after deleting the cycle.  Nullity, singularity, the independence
number and the matching number all compose accordingly, and analyze()
returns explicit certificates built the same way the composition works,
then validates them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotUnicyclic, WrongType
from .graphs import (
    CycleInfo,
    Shape,
    classify_shape,
    connected_components,
    find_cycle,
    pendant_trees,
    remove_vertices,
)
from .linalg import nullity
from .oracles import has_perfect_matching
from .trees import (
    decompose,
    independent_set_certificate,
    matching_certificate,
    root_is_matched,
)


@dataclass(frozen=True)
class TypeVerdict:
    """kind is "I" or "II"; witness is the smallest matched cycle vertex
    for type I, None for type II."""

    kind: str
    witness: object


@dataclass(frozen=True)
class PartAnalysis:
    """Null decomposition of one piece of the split, in parent-graph ids.

    kind is "pendant" (the witness's tree, type I), "rest" (everything
    else, type I) or "component" (one tree of G minus the cycle, type
    II).  root is the cycle vertex the piece hangs from, when there is
    one.
    """

    kind: str
    root: object
    vertices: frozenset
    supp: frozenset
    core: frozenset
    n_vertices: frozenset


@dataclass(frozen=True)
class UnicyclicAnalysis:
    cycle: CycleInfo
    kind: str
    witness: object
    pure_cycle: bool
    singular: bool
    singular_reason: str
    nullity: int
    alpha: int
    nu: int
    parts: tuple
    independent_set: frozenset
    matching: frozenset


def _cycle_or_raise(g):
    shape = classify_shape(g)
    if shape not in (Shape.UNICYCLIC, Shape.CYCLE):
        raise NotUnicyclic(f"graph is {shape.value}, expected exactly one cycle")
    return find_cycle(g)


def _classify(g, cycle):
    """Smallest-id matched cycle vertex, with the pendant trees reused."""
    pts = {pt.root: pt for pt in pendant_trees(g, cycle)}
    for v in sorted(cycle.vertices):
        pt = pts[v]
        if root_is_matched(pt.tree, pt.root_local):
            return TypeVerdict("I", v), pts
    return TypeVerdict("II", None), pts


def classify_type(g):
    """Type I with its smallest matched witness, or type II."""
    cycle = _cycle_or_raise(g)
    verdict, _ = _classify(g, cycle)
    return verdict


def _map_back(vertex_set, label_map):
    return frozenset(label_map[v] for v in vertex_set)


def _part_from(kind, root, graph, label_map):
    d = decompose(graph)
    return PartAnalysis(
        kind=kind,
        root=root,
        vertices=frozenset(label_map),
        supp=_map_back(d.supp, label_map),
        core=_map_back(d.core, label_map),
        n_vertices=_map_back(d.n_forest_vertices, label_map),
    )


def _type1_pieces(g, cycle, witness, pts=None):
    if pts is None:
        pts = {pt.root: pt for pt in pendant_trees(g, cycle)}
    pt = pts[witness]
    if not root_is_matched(pt.tree, pt.root_local):
        raise WrongType(f"cycle vertex {witness} is not matched in its pendant tree")
    rest, rest_map = remove_vertices(g, pt.vertex_set())
    return pt, rest, rest_map


def _require_witness(g, v, cycle):
    if v not in cycle.vertices:
        raise WrongType(f"vertex {v} is not on the cycle")


def alpha_type1(g, witness):
    """Independence number of a type I graph via its matched witness."""
    cycle = _cycle_or_raise(g)
    _require_witness(g, witness, cycle)
    pt, rest, _ = _type1_pieces(g, cycle, witness)
    d1 = decompose(pt.tree)
    d2 = decompose(rest)
    return (
        len(d1.supp)
        + len(d2.supp)
        + (len(d1.n_forest_vertices) + len(d2.n_forest_vertices)) // 2
    )


def nu_type1(g, witness):
    """Matching number of a type I graph via its matched witness."""
    cycle = _cycle_or_raise(g)
    _require_witness(g, witness, cycle)
    pt, rest, _ = _type1_pieces(g, cycle, witness)
    d1 = decompose(pt.tree)
    d2 = decompose(rest)
    return (
        len(d1.core)
        + len(d2.core)
        + (len(d1.n_forest_vertices) + len(d2.n_forest_vertices)) // 2
    )


def _require_type2(g, cycle):
    verdict, pts = _classify(g, cycle)
    if verdict.kind != "II":
        raise WrongType(f"graph is type I (witness {verdict.witness}), not type II")
    return pts


def alpha_type2(g):
    """Independence number of a type II graph: cycle floor plus tree terms."""
    cycle = _cycle_or_raise(g)
    _require_type2(g, cycle)
    forest, fmap = remove_vertices(g, cycle.vertices)
    total = cycle.length // 2
    for comp, cmap in connected_components(forest):
        d = decompose(comp)
        total += len(d.supp) + len(d.n_forest_vertices) // 2
    return total


def nu_type2(g):
    """Matching number of a type II graph: cycle floor plus tree terms."""
    cycle = _cycle_or_raise(g)
    _require_type2(g, cycle)
    forest, fmap = remove_vertices(g, cycle.vertices)
    total = cycle.length // 2
    for comp, cmap in connected_components(forest):
        d = decompose(comp)
        total += len(d.core) + len(d.n_forest_vertices) // 2
    return total


def unicyclic_nullity(g):
    """Nullity by composition instead of elimination.

    Type I: the pendant tree at the witness and the rest contribute
    independently.  Type II: the forest off the cycle plus the cycle
    itself, whose nullity is 2 when 4 divides its length and 0 otherwise.
    """
    cycle = _cycle_or_raise(g)
    verdict, pts = _classify(g, cycle)
    if verdict.kind == "I":
        pt, rest, _ = _type1_pieces(g, cycle, verdict.witness, pts)
        return nullity(pt.tree) + nullity(rest)
    forest, _ = remove_vertices(g, cycle.vertices)
    cycle_term = 2 if cycle.length % 4 == 0 else 0
    return nullity(forest) + cycle_term


def _singularity(g, cycle, verdict, pts):
    if verdict.kind == "I":
        v = verdict.witness
        name = g.name_of(v)
        pt, rest, _ = _type1_pieces(g, cycle, v, pts)
        pm_pendant = has_perfect_matching(pt.tree)
        pm_rest = has_perfect_matching(rest)
        if pm_pendant and pm_rest:
            return False, (
                f"type I at witness {name}: the pendant tree and the rest both "
                "have perfect matchings"
            )
        missing = []
        if not pm_pendant:
            missing.append(f"the pendant tree at {name} has no perfect matching")
        if not pm_rest:
            missing.append(
                f"the rest after removing the pendant tree at {name} has no perfect matching"
            )
        return True, "type I: " + "; ".join(missing)
    forest, _ = remove_vertices(g, cycle.vertices)
    pm_forest = has_perfect_matching(forest)
    div4 = cycle.length % 4 == 0
    if pm_forest and not div4:
        return False, (
            "type II: every tree off the cycle has a perfect matching and "
            f"the cycle length {cycle.length} is not divisible by 4"
        )
    reasons = []
    if not pm_forest:
        reasons.append("a tree off the cycle has no perfect matching")
    if div4:
        reasons.append(f"the cycle length {cycle.length} is divisible by 4")
    return True, "type II: " + "; ".join(reasons)


def is_singular(g):
    """(singular?, which clause fired), decided combinatorially.

    No linear algebra is involved; the verdict must agree with
    nullity(g) > 0, which the test sweeps check.
    """
    cycle = _cycle_or_raise(g)
    verdict, pts = _classify(g, cycle)
    return _singularity(g, cycle, verdict, pts)


def _cycle_alternating_vertices(cycle):
    verts = cycle.vertices
    return frozenset(verts[i] for i in range(0, 2 * (cycle.length // 2), 2))


def _cycle_alternating_edges(cycle):
    verts = cycle.vertices
    out = set()
    for k in range(cycle.length // 2):
        a, b = verts[2 * k], verts[2 * k + 1]
        out.add((min(a, b), max(a, b)))
    return frozenset(out)


def _attachment_vertex(g, comp_vertices, cycle_set):
    """The unique vertex of a cycle-deleted component adjacent to the cycle."""
    hits = []
    for u in comp_vertices:
        for w in g.neighbors(u):
            if w in cycle_set:
                hits.append((u, w))
    if len(hits) != 1:
        raise AssertionError("component attaches to the cycle more than once")
    return hits[0]


def _map_edges(edge_set, label_map):
    out = set()
    for u, v in edge_set:
        a, b = label_map[u], label_map[v]
        out.add((min(a, b), max(a, b)))
    return out


def _validate_certificates(g, independent, matching, alpha, nu):
    if len(independent) != alpha:
        raise AssertionError(
            f"independent-set certificate has size {len(independent)}, formula says {alpha}"
        )
    for u, v in g.edges:
        if u in independent and v in independent:
            raise AssertionError(f"certificate set contains the edge ({u}, {v})")
    if len(matching) != nu:
        raise AssertionError(
            f"matching certificate has size {len(matching)}, formula says {nu}"
        )
    seen = set()
    for u, v in matching:
        if not g.has_edge(u, v):
            raise AssertionError(f"certificate matching uses the non-edge ({u}, {v})")
        if u in seen or v in seen:
            raise AssertionError(f"certificate matching reuses a vertex of ({u}, {v})")
        seen.add(u)
        seen.add(v)


def analyze(g):
    """Full analysis of a unicyclic graph (pure cycles included).

    Computes the type, the composed nullity, the combinatorial
    singularity verdict, alpha and nu by the closed formulas, the null
    decomposition of every piece (in original vertex ids), and explicit
    certificates: an independent set of size alpha and a matching of
    size nu, assembled from the pieces exactly as the formulas compose
    and validated against the graph before returning.
    """
    cycle = _cycle_or_raise(g)
    pure = cycle.length == g.n
    verdict, pts = _classify(g, cycle)

    if verdict.kind == "I":
        v = verdict.witness
        pt, rest, rest_map = _type1_pieces(g, cycle, v, pts)
        parts = (
            _part_from("pendant", v, pt.tree, pt.label_map),
            _part_from("rest", None, rest, rest_map),
        )
        alpha = sum(len(p.supp) for p in parts) + sum(len(p.n_vertices) for p in parts) // 2
        nu = sum(len(p.core) for p in parts) + sum(len(p.n_vertices) for p in parts) // 2
        nullity_val = nullity(pt.tree) + nullity(rest)
        independent = _map_back(
            independent_set_certificate(pt.tree, avoid=pt.root_local), pt.label_map
        ) | _map_back(independent_set_certificate(rest), rest_map)
        matching = _map_edges(matching_certificate(pt.tree), pt.label_map) | _map_edges(
            matching_certificate(rest), rest_map
        )
    else:
        cycle_set = set(cycle.vertices)
        forest, fmap = remove_vertices(g, cycle.vertices)
        part_list = []
        independent = set(_cycle_alternating_vertices(cycle))
        for comp, cmap in connected_components(forest):
            full_map = tuple(fmap[x] for x in cmap)
            u_orig, v_orig = _attachment_vertex(g, full_map, cycle_set)
            part_list.append(_part_from("component", v_orig, comp, full_map))
            u_local = full_map.index(u_orig)
            independent |= _map_back(
                independent_set_certificate(comp, avoid=u_local), full_map
            )
        parts = tuple(part_list)
        alpha = cycle.length // 2 + sum(len(p.supp) for p in parts) + sum(
            len(p.n_vertices) for p in parts
        ) // 2
        nu = cycle.length // 2 + sum(len(p.core) for p in parts) + sum(
            len(p.n_vertices) for p in parts
        ) // 2
        nullity_val = nullity(forest) + (2 if cycle.length % 4 == 0 else 0)
        matching = set(_cycle_alternating_edges(cycle))
        for w in cycle.vertices:
            pt = pts[w]
            if pt.tree.n >= 2:
                matching |= _map_edges(
                    matching_certificate(pt.tree, avoid=pt.root_local), pt.label_map
                )
        independent = frozenset(independent)

    singular, reason = _singularity(g, cycle, verdict, pts)
    independent = frozenset(independent)
    matching = frozenset(matching)
    _validate_certificates(g, independent, matching, alpha, nu)
    return UnicyclicAnalysis(
        cycle=cycle,
        kind=verdict.kind,
        witness=verdict.witness,
        pure_cycle=pure,
        singular=singular,
        singular_reason=reason,
        nullity=nullity_val,
        alpha=alpha,
        nu=nu,
        parts=parts,
        independent_set=independent,
        matching=matching,
    )
