"""Seeded random trees and unicyclic graphs for sweeps and tests.

Trees are uniform over labeled trees (Pruefer sequences); a unicyclic
graph is a tree plus one uniformly chosen non-edge, which always closes
a single cycle of length at least three.  The corpus builder nudges the
type I / type II mix toward balance by rejection sampling with a cheap
matching probe, so downstream sweeps see plenty of both.
"""

from __future__ import annotations

import heapq
import random

from .graphs import Graph, find_cycle, pendant_trees
from .trees import _greedy_forest_matching


def random_tree(n, rng):
    """Uniform labeled tree on n >= 1 vertices."""
    if n < 1:
        raise ValueError("trees need at least one vertex")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def random_unicyclic(n, rng):
    """Random unicyclic graph: a tree with one extra non-edge."""
    if n < 3:
        raise ValueError("unicyclic graphs need at least three vertices")
    t = random_tree(n, rng)
    non_edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not t.has_edge(u, v)
    ]
    extra = non_edges[rng.randrange(len(non_edges))]
    return Graph(n, list(t.edges) + [extra])


def random_simple_graph(n, p, rng):
    """Erdos-Renyi G(n, p), for codec round-trips."""
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def _probe_is_type1(g):
    """Cheap type probe by greedy matchings; generation only, never verification."""
    cycle = find_cycle(g)
    for pt in pendant_trees(g, cycle):
        if pt.tree.n < 2:
            continue
        whole = len(_greedy_forest_matching(pt.tree))
        sub_edges = [
            (u if u < pt.root_local else u - 1, v if v < pt.root_local else v - 1)
            for u, v in pt.tree.edges
            if pt.root_local not in (u, v)
        ]
        sub = Graph(pt.tree.n - 1, sub_edges)
        if len(_greedy_forest_matching(sub)) < whole:
            return True  # root saturated by every maximum matching
    return False


def tree_corpus(count, n_min, n_max, seed):
    """Seeded list of random trees with sizes uniform in [n_min, n_max]."""
    rng = random.Random(seed)
    return [random_tree(rng.randrange(n_min, n_max + 1), rng) for _ in range(count)]


def unicyclic_corpus(count, n_min, n_max, seed, balance=True, max_tries=25):
    """Seeded list of random unicyclic graphs, type-balanced when asked.

    Alternates the wanted type and rejection-samples up to max_tries per
    instance, falling back to the last candidate so generation always
    terminates.
    """
    if n_min < 3:
        raise ValueError("unicyclic graphs need at least three vertices")
    rng = random.Random(seed)
    out = []
    for i in range(count):
        if not balance:
            out.append(random_unicyclic(rng.randrange(n_min, n_max + 1), rng))
            continue
        want_type1 = i % 2 == 0
        g = None
        for _ in range(max_tries):
            g = random_unicyclic(rng.randrange(n_min, n_max + 1), rng)
            if _probe_is_type1(g) == want_type1:
                break
        out.append(g)
    return out
