"""Finite multigraphs with ordered edges.

The edge order is part of the data: it fixes the signs of the cube
differential, so every editing operation documents how it shifts edge
indices.  Loops and parallel edges are legal everywhere except that a loop
cannot be contracted.  Graphs are immutable values; all operations return
new graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

# Edge subsets are bitmasks in a machine word.
MAX_EDGES = 63


class GraphFormatError(ValueError):
    """Malformed graph file; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        edges = tuple((int(u), int(w)) for u, w in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, w in edges:
            if not (0 <= u < self.vertex_count and 0 <= w < self.vertex_count):
                raise ValueError(f"edge ({u}, {w}) endpoint out of range")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Vertex degree; a loop contributes 2."""
        return sum((u == v) + (w == v) for u, w in self.edges)

    def has_loop(self) -> bool:
        return any(u == w for u, w in self.edges)

    def to_json_dict(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    def to_text(self) -> str:
        lines = [f"vertices {self.vertex_count}"]
        lines += [f"{u} {w}" for u, w in self.edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components of a spanning subgraph, numbered by minimal vertex."""

    component_id: tuple[int, ...]
    component_count: int


def components(g: Graph, subset: int) -> ComponentPartition:
    """Components of [G:s], the spanning subgraph with edge set ``subset``.

    ``subset`` is a bitmask over edge indices.  Components are numbered
    0..count-1 in ascending order of their minimal vertex.
    """
    if subset >> g.edge_count:
        raise ValueError("subset mask wider than edge count")
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    mask = subset
    while mask:
        e = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        u, w = g.edges[e]
        ru, rw = find(u), find(w)
        if ru != rw:
            # Root at the smaller vertex so roots stay class minima.
            if ru > rw:
                ru, rw = rw, ru
            parent[rw] = ru
    ids = [-1] * g.vertex_count
    count = 0
    for v in range(g.vertex_count):
        r = find(v)
        if ids[r] < 0:
            ids[r] = count
            count += 1
        ids[v] = ids[r]
    return ComponentPartition(tuple(ids), count)


def delete_edge(g: Graph, e: int) -> Graph:
    """G - e: vertices kept, edge removed, later edges shift down one index."""
    if not (0 <= e < g.edge_count):
        raise IndexError(f"edge index {e} out of range")
    return Graph(g.vertex_count, g.edges[:e] + g.edges[e + 1 :])


def contract_edge(g: Graph, e: int) -> Graph:
    """G / e: identify the endpoints of a non-loop edge.

    The smaller endpoint index is kept; larger vertex indices shift down by
    one so vertex labels stay contiguous.  Edges parallel to e become loops.
    """
    if not (0 <= e < g.edge_count):
        raise IndexError(f"edge index {e} out of range")
    u, w = g.edges[e]
    if u == w:
        raise ValueError("cannot contract a loop")
    if u > w:
        u, w = w, u

    def relabel(x: int) -> int:
        if x == w:
            return u
        return x - 1 if x > w else x

    new_edges = tuple(
        (relabel(a), relabel(b)) for k, (a, b) in enumerate(g.edges) if k != e
    )
    return Graph(g.vertex_count - 1, new_edges)


def simplify(g: Graph) -> Graph:
    """Collapse each parallel class to its first edge; loops are kept as-is."""
    seen: set[tuple[int, int]] = set()
    kept = []
    for u, w in g.edges:
        if u == w:
            kept.append((u, w))
            continue
        key = (min(u, w), max(u, w))
        if key not in seen:
            seen.add(key)
            kept.append((u, w))
    return Graph(g.vertex_count, tuple(kept))


@dataclass(frozen=True)
class CycleInfo:
    """Cycle structure of a graph after conceptual simplification.

    ``girth`` is the length of the shortest cycle of the simplified loopless
    graph (None for a forest); the parity flags say whether some odd cycle
    (length >= 3) and some even cycle (length >= 4) exist.
    """

    has_loop: bool
    girth: int | None
    has_odd_cycle: bool
    has_even_cycle: bool

    @property
    def is_acyclic(self) -> bool:
        return not self.has_loop and self.girth is None


def _adjacency(g: Graph) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for k, (u, w) in enumerate(g.edges):
        adj[u].append((w, k))
        if u != w:
            adj[w].append((u, k))
    return adj


def _girth_simple(g: Graph) -> int | None:
    # BFS from every vertex; standard exact girth for simple graphs.
    adj = _adjacency(g)
    best: int | None = None
    for s in range(g.vertex_count):
        dist = {s: 0}
        parent_edge = {s: -1}
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w, k in adj[v]:
                    if k == parent_edge[v]:
                        continue
                    if w in dist:
                        cyc = dist[v] + dist[w] + 1
                        if best is None or cyc < best:
                            best = cyc
                    else:
                        dist[w] = dist[v] + 1
                        parent_edge[w] = k
                        nxt.append(w)
            if best is not None and frontier and 2 * dist[frontier[0]] >= best:
                break
            frontier = nxt
    return best


def _is_bipartite(g: Graph) -> bool:
    adj = _adjacency(g)
    color = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _biconnected_blocks(g: Graph) -> list[list[int]]:
    """Edge lists of the biconnected blocks of a simple graph (Tarjan)."""
    adj = _adjacency(g)
    disc = [-1] * g.vertex_count
    low = [0] * g.vertex_count
    blocks: list[list[int]] = []
    stack: list[int] = []  # edge indices
    timer = 0

    def dfs(v: int, pe: int):
        nonlocal timer
        disc[v] = low[v] = timer
        timer += 1
        for w, k in adj[v]:
            if k == pe:
                continue
            if disc[w] < 0:
                stack.append(k)
                dfs(w, k)
                low[v] = min(low[v], low[w])
                if low[w] >= disc[v]:
                    block = []
                    while True:
                        x = stack.pop()
                        block.append(x)
                        if x == k:
                            break
                    blocks.append(block)
            elif disc[w] < disc[v]:
                stack.append(k)
                low[v] = min(low[v], disc[w])

    for s in range(g.vertex_count):
        if disc[s] < 0:
            dfs(s, -1)
    return blocks


def shortest_cycle_parity(g: Graph) -> CycleInfo:
    """Loop presence, girth, and odd/even cycle existence (after simplification)."""
    has_loop = g.has_loop()
    simple = simplify(Graph(g.vertex_count, tuple(e for e in g.edges if e[0] != e[1])))
    girth = _girth_simple(simple)
    if girth is None:
        return CycleInfo(has_loop, None, False, False)
    has_odd = not _is_bipartite(simple)
    has_even = False
    for block in _biconnected_blocks(simple):
        if len(block) < 3:
            continue
        verts = set()
        for k in block:
            verts.update(simple.edges[k])
        if len(block) > len(verts):
            # A 2-connected non-cycle block contains a theta graph, hence an
            # even cycle (two of the three arcs share parity).
            has_even = True
            break
        if len(block) % 2 == 0:
            has_even = True
            break
    return CycleInfo(has_loop, girth, has_odd, has_even)


# ---------------------------------------------------------------------------
# generators


def path(n: int) -> Graph:
    """Path on n vertices (n - 1 edges)."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """Polygon with n vertices and n edges; edge i joins v_i, v_{i+1 mod n}.

    n = 1 is a single vertex with a loop and n = 2 a double edge, matching
    the degenerate polygons the recursion needs.
    """
    if n < 1:
        raise ValueError("cycle needs n >= 1")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("complete needs n >= 0")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def polygon_with_diagonals(v: int, diagonals: list[tuple[int, int]]) -> Graph:
    """Polygon on v vertices with extra chord edges appended in given order.

    Whether the chords can be drawn without crossing is not checked.
    """
    base = cycle(v)
    return Graph(v, base.edges + tuple((int(a), int(b)) for a, b in diagonals))


def wedge(g1: Graph, g2: Graph, v1: int = 0, v2: int = 0) -> Graph:
    """One-vertex product: glue vertex v2 of g2 onto vertex v1 of g1."""
    if not (0 <= v1 < g1.vertex_count and 0 <= v2 < g2.vertex_count):
        raise ValueError("wedge vertices out of range")

    def relabel(x: int) -> int:
        if x == v2:
            return v1
        return g1.vertex_count + x - (1 if x > v2 else 0)

    edges = g1.edges + tuple((relabel(a), relabel(b)) for a, b in g2.edges)
    return Graph(g1.vertex_count + g2.vertex_count - 1, edges)


# ---------------------------------------------------------------------------
# file formats


def parse_graph_text(text: str) -> Graph:
    """Text format: line ``vertices N`` then one ``u w`` line per edge.

    The edge order in the file is the differential-sign order.
    """
    vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if vertices is None:
            if parts[0] != "vertices" or len(parts) != 2:
                raise GraphFormatError("expected 'vertices N'", lineno)
            try:
                vertices = int(parts[1])
            except ValueError:
                raise GraphFormatError("vertex count is not an integer", lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError("expected edge line 'u w'", lineno)
        try:
            u, w = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("edge endpoints are not integers", lineno)
        edges.append((u, w))
    if vertices is None:
        raise GraphFormatError("missing 'vertices N' header")
    try:
        return Graph(vertices, tuple(edges))
    except ValueError as exc:
        raise GraphFormatError(str(exc))


def parse_graph_json(data) -> Graph:
    """JSON format: {"vertices": N, "edges": [[u, w], ...]}."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        vertices = data["vertices"]
        edges = tuple((int(u), int(w)) for u, w in data["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad graph JSON: {exc}")
    return Graph(int(vertices), edges)


def load_graph(path_: str) -> Graph:
    with open(path_, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)
