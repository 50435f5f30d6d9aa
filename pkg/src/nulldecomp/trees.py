"""Null decomposition of forests, and the closed counts it yields.

A forest splits along its adjacency kernel: Supp holds the vertices with
a nonzero coordinate in some kernel vector, Core their neighbors, and
what remains is the N-forest, whose components all have perfect
matchings.  Both the independence number and the matching number fall
out by counting:

    alpha(F) = |Supp| + |V(N-forest)| / 2
    nu(F)    = |Core| + |V(N-forest)| / 2

Both are additive over components, so everything here accepts arbitrary
forests, the empty graph included.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAForest, NotATree, UnknownVertex
from .graphs import (
    Shape,
    _component_count,
    classify_shape,
    connected_components,
    induced_subgraph,
    remove_vertices,
    two_coloring,
)
from .linalg import support


@dataclass(frozen=True)
class NullDecomposition:
    """Partition of a forest's vertices by kernel role.

    s_forest_vertices is Supp together with Core and always equals the
    closed neighborhood of Supp; n_forest_vertices is the rest and has
    even cardinality.
    """

    supp: frozenset
    core: frozenset
    s_forest_vertices: frozenset
    n_forest_vertices: frozenset


def _require_forest(t, op):
    if t.n == 0:
        return
    if len(t.edges) != t.n - _component_count(t):
        raise NotAForest(f"{op} needs an acyclic graph")


def decompose(t):
    """Null decomposition of a forest; raises NotAForest on cycles.

    The structural facts the theory guarantees (Supp disjoint from Core,
    S-part equal to N[Supp], even N-part) are re-checked before
    returning; a violation would mean a kernel bug.
    """
    _require_forest(t, "decompose")
    supp = support(t)
    core = set()
    for v in supp:
        core.update(t.neighbors(v))
    core = frozenset(core)
    if core & supp:
        raise AssertionError("support touches itself: kernel computation broken")
    s_part = supp | core
    n_part = frozenset(v for v in range(t.n) if v not in s_part)
    if len(n_part) % 2:
        raise AssertionError("N-forest has odd order: kernel computation broken")
    return NullDecomposition(
        supp=supp,
        core=core,
        s_forest_vertices=frozenset(s_part),
        n_forest_vertices=n_part,
    )


def tree_alpha(t):
    """Independence number of a forest from its null decomposition."""
    d = decompose(t)
    return len(d.supp) + len(d.n_forest_vertices) // 2


def tree_nu(t):
    """Matching number of a forest from its null decomposition."""
    d = decompose(t)
    return len(d.core) + len(d.n_forest_vertices) // 2


def root_is_matched(t, v):
    """True iff every maximum matching of the tree t saturates v.

    Equivalent to v lying outside Supp(t).  A single-vertex tree is
    mismatched at its vertex, so this returns False there.
    """
    if classify_shape(t) != Shape.TREE:
        raise NotATree("root_is_matched expects a tree")
    if not 0 <= v < t.n:
        raise UnknownVertex(f"vertex {v} outside 0..{t.n - 1}")
    return v not in support(t)


def _n_component_sides(t, d):
    """Bipartition sides of each N-forest component, in t's vertex ids."""
    sub, label_map = induced_subgraph(t, d.n_forest_vertices)
    out = []
    for comp, comp_map in connected_components(sub):
        colors = two_coloring(comp)
        side0 = frozenset(label_map[comp_map[i]] for i in range(comp.n) if colors[i] == 0)
        side1 = frozenset(label_map[comp_map[i]] for i in range(comp.n) if colors[i] == 1)
        if len(side0) != len(side1):
            raise AssertionError("N-component bipartition sides differ in size")
        out.append((side0, side1))
    return out


def independent_set_certificate(t, avoid=None):
    """A maximum independent set of a forest, built from the decomposition.

    Takes all of Supp plus one bipartition side of each N-component (the
    sides tie in size, so either works).  With avoid set, that vertex is
    kept out of the result; this needs avoid outside Supp, since Supp
    lies in every maximum independent set.
    """
    d = decompose(t)
    if avoid is not None and avoid in d.supp:
        raise ValueError("cannot avoid a support vertex in a maximum independent set")
    chosen = set(d.supp)
    for side0, side1 in _n_component_sides(t, d):
        if avoid in side0:
            chosen |= side1
        elif avoid in side1:
            chosen |= side0
        else:
            chosen |= side0 if min(side0) < min(side1) else side1
    if avoid is not None and avoid in chosen:
        raise AssertionError("avoided vertex slipped into the certificate")
    return frozenset(chosen)


def _greedy_forest_matching(t):
    """Maximum matching of a forest by repeatedly pairing a leaf upward."""
    n = t.n
    deg = [t.degree(v) for v in range(n)]
    alive = [True] * n
    stack = [v for v in range(n) if deg[v] <= 1]
    edges = set()
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        if deg[v] == 0:
            alive[v] = False  # stays unmatched
            continue
        w = next(x for x in t.neighbors(v) if alive[x])
        alive[v] = alive[w] = False
        edges.add((min(v, w), max(v, w)))
        for x in t.neighbors(w):
            if alive[x]:
                deg[x] -= 1
                if deg[x] <= 1:
                    stack.append(x)
    return edges


def matching_certificate(t, avoid=None):
    """A maximum matching of a forest by the greedy leaf rule.

    With avoid set, returns a maximum matching of t leaving that vertex
    unsaturated; this needs avoid inside Supp, the vertices some maximum
    matching misses.
    """
    _require_forest(t, "matching_certificate")
    if avoid is None:
        return frozenset(_greedy_forest_matching(t))
    if avoid not in support(t):
        raise ValueError("can only leave a support vertex unsaturated")
    sub, label_map = remove_vertices(t, {avoid})
    out = set()
    for u, v in _greedy_forest_matching(sub):
        a, b = label_map[u], label_map[v]
        out.add((min(a, b), max(a, b)))
    return frozenset(out)
