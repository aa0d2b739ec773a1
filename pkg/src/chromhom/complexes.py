"""Bigraded cochain complexes from the edge cube of a graph.

A chain-group basis element is an enhanced state: an edge subset s (bitmask)
together with one algebra basis index per connected component of the
spanning subgraph [G:s], components listed in canonical order (ascending
minimal vertex).  The differential adds one absent edge at a time: a
cycle-closing edge acts as the identity, a merging edge multiplies the two
component colors through the structure constants.  The sign of adding edge e
to subset s is (-1)^(number of edges of s with index below e).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .algebra import Algebra
from .graph import MAX_EDGES, ComponentPartition, Graph, components


class EnhancedState(NamedTuple):
    subset: int
    coloring: tuple[int, ...]


@dataclass
class StateBasis:
    """All enhanced states of one bidegree, in deterministic order.

    Ordering is lexicographic by (subset bitmask, coloring vector), so bases
    and matrices are reproducible across runs.
    """

    i: int
    j: int
    states: list[EnhancedState]
    index: dict[EnhancedState, int]

    def __len__(self) -> int:
        return len(self.states)


@dataclass
class IntMatrix:
    """Sparse integer matrix; only nonzero entries are stored."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int]

    def __post_init__(self):
        if 0 in self.entries.values():
            self.entries = {k: v for k, v in self.entries.items() if v}

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def triplets(self) -> list[tuple[int, int, int]]:
        return [(r, c, v) for (r, c), v in sorted(self.entries.items())]

    def compose(self, other: "IntMatrix") -> "IntMatrix":
        """self @ other, exact integer product."""
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        rows_of_self: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in self.entries.items():
            rows_of_self.setdefault(c, []).append((r, v))
        out: dict[tuple[int, int], int] = {}
        for (k, c), v in other.entries.items():
            for r, w in rows_of_self.get(k, ()):
                key = (r, c)
                s = out.get(key, 0) + w * v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return IntMatrix(self.rows, other.cols, out)


class Cube:
    """Per-(graph, algebra) caches shared by slice computations.

    Caches component partitions per subset, the merge pattern per
    (subset, edge), and coloring enumerations per (component count, degree).
    All cached data is immutable once stored, so a Cube can be shared.
    """

    def __init__(self, g: Graph, a: Algebra):
        if g.edge_count > MAX_EDGES:
            raise ValueError(f"graphs are capped at {MAX_EDGES} edges")
        self.g = g
        self.a = a
        self._parts: dict[int, ComponentPartition] = {}
        self._merges: dict[tuple[int, int], tuple[int, int] | None] = {}
        self._colorings: dict[tuple[int, int], list[tuple[int, ...]]] = {}
        self._counts: dict[tuple[int, int], int] = {}
        self._masks_by_count: list[list[int]] | None = None

    def part(self, subset: int) -> ComponentPartition:
        p = self._parts.get(subset)
        if p is None:
            p = components(self.g, subset)
            self._parts[subset] = p
        return p

    def masks_by_count(self) -> list[list[int]]:
        if self._masks_by_count is None:
            n = self.g.edge_count
            buckets: list[list[int]] = [[] for _ in range(n + 1)]
            for mask in range(1 << n):
                buckets[mask.bit_count()].append(mask)
            self._masks_by_count = buckets
        return self._masks_by_count

    def merge_positions(self, subset: int, e: int) -> tuple[int, int] | None:
        """Component positions merged when edge e joins [G:s], or None.

        None means e closes a cycle (or is a loop): the partition, and hence
        the canonical component order, is unchanged.  Otherwise returns
        (p1, p2) with p1 < p2; the merged component keeps position p1 and
        later colors shift down, because components are ordered by minimal
        vertex and the merged class inherits the smaller minimum.
        """
        key = (subset, e)
        if key in self._merges:
            return self._merges[key]
        u, w = self.g.edges[e]
        ids = self.part(subset).component_id
        cu, cw = ids[u], ids[w]
        res = None if cu == cw else (min(cu, cw), max(cu, cw))
        self._merges[key] = res
        return res

    def colorings(self, k: int, j: int) -> list[tuple[int, ...]]:
        """All length-k basis-index tuples of total degree j, lex order."""
        key = (k, j)
        cached = self._colorings.get(key)
        if cached is not None:
            return cached
        degrees = self.a.degrees
        lo = min(degrees)
        hi = max(degrees)
        out: list[tuple[int, ...]] = []
        buf = [0] * k

        def rec(pos: int, remaining: int):
            left = k - pos
            if remaining < left * lo or remaining > left * hi:
                return
            if pos == k:
                out.append(tuple(buf))
                return
            for b, d in enumerate(degrees):
                if d <= remaining:
                    buf[pos] = b
                    rec(pos + 1, remaining - d)

        rec(0, j)
        self._colorings[key] = out
        return out

    def coloring_count(self, k: int, j: int) -> int:
        """len(colorings(k, j)) without materializing the tuples."""
        key = (k, j)
        got = self._counts.get(key)
        if got is not None:
            return got
        if key in self._colorings:
            n = len(self._colorings[key])
        elif k == 0:
            n = 1 if j == 0 else 0
        else:
            n = sum(
                self.coloring_count(k - 1, j - d)
                for d in self.a.degrees
                if d <= j
            )
        self._counts[key] = n
        return n


def enumerate_basis(
    g: Graph, a: Algebra, i: int, j: int, cube: Cube | None = None
) -> StateBasis:
    """Basis of C^{i,j}: states with i edges and total color degree j."""
    cube = cube or Cube(g, a)
    states: list[EnhancedState] = []
    if 0 <= i <= g.edge_count and j >= 0:
        for mask in cube.masks_by_count()[i]:
            k = cube.part(mask).component_count
            for col in cube.colorings(k, j):
                states.append(EnhancedState(mask, col))
    index = {s: n for n, s in enumerate(states)}
    return StateBasis(i, j, states, index)


def slice_dimension(g: Graph, a: Algebra, i: int, j: int, cube: Cube | None = None) -> int:
    cube = cube or Cube(g, a)
    if not (0 <= i <= g.edge_count) or j < 0:
        return 0
    return sum(
        cube.coloring_count(cube.part(mask).component_count, j)
        for mask in cube.masks_by_count()[i]
    )


def _image_terms(cube: Cube, subset: int, coloring: tuple[int, ...], e: int):
    """Unsigned per-edge image as plain (subset, coloring) tuples.

    Plain tuples hash and compare equal to EnhancedState, so they can index
    a StateBasis directly without the NamedTuple construction cost.
    """
    new_subset = subset | (1 << e)
    merge = cube.merge_positions(subset, e)
    if merge is None:
        return (((new_subset, coloring), 1),)
    p1, p2 = merge
    row = cube.a.mult[coloring[p1]][coloring[p2]]
    head = coloring[:p1]
    mid = coloring[p1 + 1 : p2]
    tail = coloring[p2 + 1 :]
    return tuple(
        ((new_subset, head + (m,) + mid + tail), c)
        for m, c in enumerate(row)
        if c
    )


def per_edge_image(
    g: Graph, a: Algebra, state: EnhancedState, e: int
) -> list[tuple[EnhancedState, int]]:
    """Image of one state under the unsigned per-edge map for absent edge e.

    A cycle-closing edge (loops included) keeps the coloring with
    coefficient 1; a merging edge replaces the two component colors by each
    basis term of their product.
    """
    if not (0 <= e < g.edge_count):
        raise IndexError(f"edge index {e} out of range")
    if state.subset >> e & 1:
        raise ValueError(f"edge {e} already in the subset")
    terms = _image_terms(Cube(g, a), state.subset, state.coloring, e)
    return [(EnhancedState(*s), c) for s, c in terms]


def differential(
    g: Graph,
    a: Algebra,
    i: int,
    j: int,
    cube: Cube | None = None,
    src: StateBasis | None = None,
    dst: StateBasis | None = None,
) -> IntMatrix:
    """Matrix of d^{i,j}: C^{i,j} -> C^{i+1,j} over the canonical bases."""
    cube = cube or Cube(g, a)
    if src is None:
        src = enumerate_basis(g, a, i, j, cube)
    if dst is None:
        dst = enumerate_basis(g, a, i + 1, j, cube)
    n = g.edge_count
    entries: dict[tuple[int, int], int] = {}
    dst_index = dst.index
    for col, (subset, coloring) in enumerate(src.states):
        absent = ~subset & ((1 << n) - 1)
        while absent:
            bit = absent & -absent
            absent ^= bit
            e = bit.bit_length() - 1
            sign = -1 if (subset & (bit - 1)).bit_count() & 1 else 1
            for target, coeff in _image_terms(cube, subset, coloring, e):
                key = (dst_index[target], col)
                s = entries.get(key, 0) + sign * coeff
                if s:
                    entries[key] = s
                else:
                    del entries[key]
    return IntMatrix(len(dst.states), len(src.states), entries)


def dump_slice(g: Graph, a: Algebra, i: int, j: int) -> str:
    """Debug dump: state listing and differential triplets for one slice."""
    cube = Cube(g, a)
    src = enumerate_basis(g, a, i, j, cube)
    dst = enumerate_basis(g, a, i + 1, j, cube)
    lines = [f"slice i={i} j={j} dim={len(src)}"]
    for k, s in enumerate(src.states):
        lines.append(
            f"state#{k}: subset=0b{s.subset:0{max(g.edge_count, 1)}b}, "
            f"colors={list(s.coloring)}"
        )
    mat = differential(g, a, i, j, cube, src, dst)
    lines.append(f"d^{{{i},{j}}}: {mat.rows}x{mat.cols}, nnz={mat.nnz}")
    for r, c, v in mat.triplets():
        lines.append(f"({r}, {c}, {v})")
    return "\n".join(lines)
