"""Simple undirected graphs with dense integer vertex ids.

Vertices of an n-vertex graph are always 0..n-1.  Subgraph extraction
relabels densely and reports a label map (new id -> old id) so callers can
translate results back.  Optional display names ride along for fixtures
whose vertices carry names like "v1" or "a".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .errors import (
    BadChecksumChar,
    DuplicateEdge,
    EmptyGraph,
    MalformedLine,
    NotUnicyclic,
    SelfLoop,
    TruncatedPayload,
    UnknownVertex,
)


class Shape(str, Enum):
    TREE = "tree"
    FOREST = "forest"
    CYCLE = "cycle"
    UNICYCLIC = "unicyclic"
    OTHER = "other"


class Role(str, Enum):
    """Vertex roles for DOT export, mirroring the null decomposition."""

    SUPPORT = "support"
    CORE = "core"
    N_VERTEX = "n_vertex"
    PLAIN = "plain"


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("n", "edges", "labels", "_adj")

    def __init__(self, n, edges=(), labels=None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [set() for _ in range(n)]
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UnknownVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in norm:
                raise DuplicateEdge(f"duplicate edge {key}")
            norm.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = frozenset(norm)
        self._adj = tuple(frozenset(s) for s in adj)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"got {len(labels)} labels for {n} vertices")
        self.labels = labels

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return v in self._adj[u]

    def name_of(self, v):
        return self.labels[v] if self.labels is not None else str(v)

    def without_edge(self, u, v):
        """Copy with one edge removed (vertex ids unchanged)."""
        key = (u, v) if u < v else (v, u)
        if key not in self.edges:
            raise UnknownVertex(f"edge {key} not in graph")
        return Graph(self.n, self.edges - {key}, labels=self.labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.labels) == (other.n, other.edges, other.labels)

    def __hash__(self):
        return hash((self.n, self.edges, self.labels))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class CycleInfo:
    """The unique cycle of a unicyclic graph, in canonical orientation.

    vertices starts at the smallest cycle vertex; its successor is the
    smaller of that vertex's two cycle neighbors.
    """

    vertices: tuple
    length: int

    def __post_init__(self):
        if self.length != len(self.vertices):
            raise ValueError("cycle length disagrees with vertex tuple")
        if self.length < 3:
            raise ValueError("cycles have at least three vertices")
        if len(set(self.vertices)) != self.length:
            raise ValueError("cycle vertices must be distinct")


@dataclass(frozen=True)
class PendantTree:
    """The tree hanging off one cycle vertex (that vertex included).

    root is the cycle vertex in parent-graph ids; tree is the induced
    subgraph on the pendant vertices, densely relabeled; label_map[i] is
    the parent-graph id of tree vertex i.
    """

    root: int
    tree: Graph
    label_map: tuple

    @property
    def root_local(self):
        return self.label_map.index(self.root)

    def vertex_set(self):
        return frozenset(self.label_map)


def parse_edge_list(text):
    """Parse the edge-list format into a Graph.

    Lines are "u v" integer pairs.  Blank lines and "#" comments are
    ignored.  Optional headers: "n=<count>" fixes the vertex count (else
    max label + 1 is used) and "labels=a,b,c" attaches display names.
    """
    n_header = None
    labels = None
    edges = []
    seen = set()
    max_v = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("n="):
            try:
                n_header = int(line[2:])
            except ValueError:
                raise MalformedLine(f"line {lineno}: bad vertex count in {line!r}") from None
            if n_header < 0:
                raise MalformedLine(f"line {lineno}: negative vertex count")
            continue
        if line.startswith("labels="):
            labels = [s.strip() for s in line[len("labels="):].split(",")]
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise MalformedLine(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
        max_v = max(max_v, u, v)
    n = n_header if n_header is not None else max_v + 1
    if max_v >= n:
        raise MalformedLine(f"vertex {max_v} out of range for declared n={n}")
    if labels is not None and len(labels) != n:
        raise MalformedLine(f"labels= lists {len(labels)} names for {n} vertices")
    return Graph(n, edges, labels=labels)


def format_edge_list(g):
    """Inverse of parse_edge_list, deterministic line order."""
    lines = [f"n={g.n}"]
    if g.labels is not None:
        lines.append("labels=" + ",".join(g.labels))
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_graph6(line):
    """Decode one graph in graph6 format.

    Accepts the optional ">>graph6<<" prefix and all three size headers
    (1-, 4- and 8-byte).  Trailing bytes beyond the payload raise
    MalformedLine; bytes outside 63..126 raise BadChecksumChar; a payload
    shorter than n(n-1)/2 bits raises TruncatedPayload.
    """
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise TruncatedPayload("empty graph6 string")
    for ch in s:
        b = ord(ch)
        if b < 63 or b > 126:
            raise BadChecksumChar(f"byte {b} ({ch!r}) outside graph6 range 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise TruncatedPayload("long-form size header cut short")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise TruncatedPayload("very-long-form size header cut short")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    if len(body) < need_bytes:
        raise TruncatedPayload(f"need {need_bytes} payload bytes for n={n}, got {len(body)}")
    if len(body) > need_bytes:
        raise MalformedLine(f"{len(body) - need_bytes} trailing bytes after graph6 payload")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def connected_components(g):
    """Induced component subgraphs with label maps, by smallest member id."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(induced_subgraph(g, sorted(comp)))
    return out


def _component_count(g):
    seen = [False] * g.n
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return count


def classify_shape(g):
    """Tree / forest / cycle / unicyclic / other, per component counting.

    A connected acyclic graph is a tree; "forest" is reserved for the
    disconnected acyclic case.  Raises EmptyGraph on zero vertices.
    """
    if g.n == 0:
        raise EmptyGraph("cannot classify a graph with no vertices")
    m = len(g.edges)
    comps = _component_count(g)
    connected = comps == 1
    acyclic = m == g.n - comps
    if connected and acyclic:
        return Shape.TREE
    if acyclic:
        return Shape.FOREST
    if connected and m == g.n:
        if all(g.degree(v) == 2 for v in range(g.n)):
            return Shape.CYCLE
        return Shape.UNICYCLIC
    return Shape.OTHER


def find_cycle(g):
    """Locate the unique cycle of a unicyclic (or pure cycle) graph.

    Leaves are stripped repeatedly; what survives is the cycle.  The
    orientation is canonical: start at the smallest cycle vertex, step
    first to the smaller of its two cycle neighbors.
    """
    shape = classify_shape(g)
    if shape not in (Shape.UNICYCLIC, Shape.CYCLE):
        raise NotUnicyclic(f"graph is {shape.value}, expected exactly one cycle")
    deg = [g.degree(v) for v in range(g.n)]
    queue = deque(v for v in range(g.n) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        if deg[v] != 1:
            continue
        deg[v] = 0
        for w in g.neighbors(v):
            if deg[w] > 0:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    on_cycle = {v for v in range(g.n) if deg[v] >= 2}
    start = min(on_cycle)
    first = min(w for w in g.neighbors(start) if w in on_cycle)
    order = [start, first]
    while True:
        prev, cur = order[-2], order[-1]
        nxt = next(w for w in g.neighbors(cur) if w in on_cycle and w != prev)
        if nxt == start:
            break
        order.append(nxt)
    return CycleInfo(tuple(order), len(order))


def induced_subgraph(g, vertices):
    """Induced subgraph on the given vertices (returned densely relabeled).

    Returns (subgraph, label_map) with label_map[i] the old id of new
    vertex i; old ids are kept in increasing order.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise UnknownVertex(f"vertex {v} outside 0..{g.n - 1}")
    new_id = {old: i for i, old in enumerate(keep)}
    edges = [
        (new_id[u], new_id[v])
        for u, v in g.edges
        if u in new_id and v in new_id
    ]
    labels = [g.labels[old] for old in keep] if g.labels is not None else None
    return Graph(len(keep), edges, labels=labels), tuple(keep)


def remove_vertices(g, vs):
    """Delete a vertex set; returns (subgraph, label_map new id -> old id)."""
    drop = set(vs)
    for v in drop:
        if not 0 <= v < g.n:
            raise UnknownVertex(f"vertex {v} outside 0..{g.n - 1}")
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def pendant_trees(g, c):
    """One PendantTree per cycle vertex, in cycle order.

    The tree at cycle vertex v holds everything reachable from v without
    crossing another cycle vertex.  The vertex sets partition V(g); that
    is checked before returning.
    """
    cyc = set(c.vertices)
    covered = 0
    out = []
    for v in c.vertices:
        verts = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in cyc or w in verts:
                    continue
                verts.add(w)
                stack.append(w)
        sub, label_map = induced_subgraph(g, verts)
        out.append(PendantTree(root=v, tree=sub, label_map=label_map))
        covered += len(verts)
    union = set()
    for t in out:
        union.update(t.label_map)
    if covered != g.n or len(union) != g.n:
        raise AssertionError("pendant trees failed to partition the vertex set")
    return out


def two_coloring(g):
    """Proper 2-coloring as a list of 0/1, or None if an odd cycle exists."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


_ROLE_ATTRS = {
    Role.SUPPORT: "shape=box",
    Role.CORE: "shape=doublecircle",
    Role.N_VERTEX: "shape=star",
    Role.PLAIN: "shape=circle",
}


def export_dot(g, roles=None):
    """Render as DOT with decomposition roles mapped to node shapes.

    roles maps vertex id -> Role; missing vertices default to plain
    circles and entries for ids outside the graph are ignored.
    """
    roles = roles or {}
    lines = ["graph nulldecomp {", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = ['label="{}"'.format(g.name_of(v).replace('"', '\\"'))]
        role = roles.get(v)
        if role is not None and role != Role.PLAIN:
            attrs.append(_ROLE_ATTRS[Role(role)])
        lines.append(f'  {v} [{", ".join(attrs)}];')
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
