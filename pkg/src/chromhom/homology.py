"""Cohomology groups: exact Smith reduction and slice-by-slice assembly.

H^{i,j} = ker d^{i,j} / im d^{i-1,j} is reported as a free rank plus the
ascending invariant-factor chain of its torsion.  Smith normal form runs on
the compiled kernel when the extension is importable (falling back per
matrix on int64 overflow), otherwise on the pure-Python twin; both implement
the same two-phase elimination.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import _snfpure
from .algebra import Algebra
from .complexes import Cube, IntMatrix, differential, enumerate_basis, slice_dimension
from .graph import MAX_EDGES, Graph

try:  # compiled kernel is optional
    from . import _snfcore
except ImportError:  # pragma: no cover - depends on build environment
    _snfcore = None


class EngineError(RuntimeError):
    """A structural invariant of the chain complex failed: engine bug."""


class WindowError(ValueError):
    """A degree above the certified window of a poly-window algebra was requested."""


_KERNEL = "auto" if os.environ.get("CHROMHOM_PURE_SNF", "") in ("", "0") else "pure"


def use_kernel(name: str) -> None:
    """Select the SNF kernel: 'auto' (compiled when available) or 'pure'."""
    global _KERNEL
    if name not in ("auto", "pure"):
        raise ValueError("kernel must be 'auto' or 'pure'")
    _KERNEL = name


def compiled_kernel_available() -> bool:
    return _snfcore is not None


@dataclass(frozen=True)
class SNFResult:
    """Nonzero invariant factors (ascending, each dividing the next)."""

    factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.factors)


_EMPTY_SNF = SNFResult(())


def smith_normal_form(m: IntMatrix) -> SNFResult:
    if m.rows == 0 or m.cols == 0 or not m.entries:
        return _EMPTY_SNF
    triplets = [(r, c, v) for (r, c), v in m.entries.items()]
    factors = None
    if _KERNEL == "auto" and _snfcore is not None:
        try:
            factors = _snfcore.snf_invariant_factors(m.rows, m.cols, triplets)
        except OverflowError:
            factors = None
    if factors is None:
        factors = _snfpure.snf_invariant_factors(m.rows, m.cols, triplets)
    return SNFResult(tuple(factors))


# ---------------------------------------------------------------------------
# abelian groups


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors_from_cyclic(parts) -> tuple[int, ...]:
    """Canonical divisibility chain of a direct sum of cyclic groups Z_k."""
    primary: dict[int, list[int]] = {}
    for k in parts:
        if k <= 1:
            continue
        for p, e in _factorize(k).items():
            primary.setdefault(p, []).append(e)
    if not primary:
        return ()
    for exps in primary.values():
        exps.sort(reverse=True)
    depth = max(len(e) for e in primary.values())
    chain = []
    for idx in range(depth):
        d = 1
        for p, exps in primary.items():
            if idx < len(exps):
                d *= p ** exps[idx]
        chain.append(d)
    chain.reverse()
    return tuple(chain)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in canonical form.

    ``torsion`` is the ascending invariant-factor chain (entries >= 2 and
    each dividing the next), so equal groups compare equal structurally.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion is not a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("invariant factors must be >= 2")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def primary_parts(self) -> dict[int, list[int]]:
        """Torsion as prime powers: prime -> ascending exponents."""
        out: dict[int, list[int]] = {}
        for t in self.torsion:
            for p, e in _factorize(t).items():
                out.setdefault(p, []).append(e)
        for exps in out.values():
            exps.sort()
        return out

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(
            self.free_rank + other.free_rank,
            invariant_factors_from_cyclic(self.torsion + other.torsion),
        )

    def has_torsion_of_order_divisible_by(self, m: int) -> bool:
        return any(t % m == 0 for t in self.torsion)

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z_{t}" for t in self.torsion]
        return " + ".join(parts)


TRIVIAL_GROUP = AbelianGroup()


def group_from_cyclic(free_rank: int, parts) -> AbelianGroup:
    return AbelianGroup(free_rank, invariant_factors_from_cyclic(parts))


def homology_group(
    dim_cij: int, d_in: SNFResult | None, d_out_rank: int
) -> AbelianGroup:
    """ker/im quotient of one slice from the surrounding SNF data."""
    rank_in = d_in.rank if d_in is not None else 0
    free = dim_cij - d_out_rank - rank_in
    if free < 0:
        raise EngineError(
            "rank(d_in) + rank(d_out) exceeds the chain dimension; "
            "the differential assembly is broken"
        )
    torsion = tuple(f for f in (d_in.factors if d_in else ()) if f > 1)
    return AbelianGroup(free, torsion)


# ---------------------------------------------------------------------------
# bigraded homology


@dataclass
class BigradedHomology:
    """Nonzero cohomology groups of one (graph, algebra) computation."""

    groups: dict[tuple[int, int], AbelianGroup]
    algebra_spec: str
    graph_fingerprint: dict
    window: int | None = None

    def group(self, i: int, j: int) -> AbelianGroup:
        return self.groups.get((i, j), TRIVIAL_GROUP)

    def total(self, i: int) -> AbelianGroup:
        """Direct sum over j of H^{i,j} (degree information dropped)."""
        out = TRIVIAL_GROUP
        for (gi, _), grp in self.groups.items():
            if gi == i:
                out = out.direct_sum(grp)
        return out

    def max_height(self) -> int:
        return max((i for i, _ in self.groups), default=-1)

    def items_sorted(self):
        return sorted(self.groups.items())

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.algebra_spec,
            "graph": self.graph_fingerprint,
            "window": self.window,
            "groups": [
                {"i": i, "j": j, "free": g.free_rank, "torsion": list(g.torsion)}
                for (i, j), g in self.items_sorted()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BigradedHomology":
        groups = {
            (int(e["i"]), int(e["j"])): AbelianGroup(
                int(e["free"]), tuple(int(t) for t in e["torsion"])
            )
            for e in data["groups"]
        }
        return cls(groups, data["algebra"], data["graph"], data.get("window"))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BigradedHomology):
            return NotImplemented
        return (
            self.groups == other.groups
            and self.algebra_spec == other.algebra_spec
            and self.graph_fingerprint == other.graph_fingerprint
            and self.window == other.window
        )


def default_j_range(g: Graph, a: Algebra) -> range:
    if not a.graded:
        return range(0, 1)
    if a.window is not None:
        return range(0, a.window + 1)
    return range(0, a.max_degree * g.vertex_count + 1)


def _degree_slice_groups(
    g: Graph, a: Algebra, j: int, verify_dd: bool, cube: Cube | None = None
) -> dict[tuple[int, int], AbelianGroup]:
    """All nonzero H^{i,j} for one internal degree j (pure, self-contained)."""
    n = g.edge_count
    cube = cube or Cube(g, a)
    bases = [enumerate_basis(g, a, i, j, cube) for i in range(n + 2)]
    dims = [len(b) for b in bases]
    groups: dict[tuple[int, int], AbelianGroup] = {}
    if not any(dims):
        return groups
    mats: dict[int, IntMatrix] = {}
    for i in range(n + 1):
        if dims[i] and dims[i + 1]:
            mats[i] = differential(g, a, i, j, cube, bases[i], bases[i + 1])
    if verify_dd:
        for i in range(n):
            if i in mats and (i + 1) in mats:
                if not mats[i + 1].compose(mats[i]).is_zero():
                    raise EngineError(f"d o d != 0 at (i, j) = ({i}, {j})")
    # largest matrices first: their reductions dominate the slice
    snfs = {
        i: smith_normal_form(m)
        for i, m in sorted(mats.items(), key=lambda kv: -kv[1].nnz)
    }
    for i in range(n + 1):
        if not dims[i]:
            continue
        grp = homology_group(
            dims[i],
            snfs.get(i - 1, _EMPTY_SNF) if i > 0 else None,
            snfs.get(i, _EMPTY_SNF).rank,
        )
        if i == 0 and grp.torsion:
            raise EngineError("H^0 acquired torsion; kernel of d^0 must be free")
        if not grp.is_trivial:
            groups[(i, j)] = grp
    return groups


def _degree_batch_groups(
    g: Graph, a: Algebra, js, verify_dd: bool
) -> dict[tuple[int, int], AbelianGroup]:
    cube = Cube(g, a)
    groups: dict[tuple[int, int], AbelianGroup] = {}
    for j in js:
        groups.update(_degree_slice_groups(g, a, j, verify_dd, cube))
    return groups


def compute_all(
    g: Graph,
    a: Algebra,
    j_range=None,
    jobs: int = 1,
    verify_dd: bool = False,
) -> BigradedHomology:
    """All cohomology groups H^{i,j}(G) over A, exactly.

    ``j_range`` restricts the internal degree (an iterable of j values); for
    ungraded algebras there is a single j-collapsed slice at j = 0.  Degree
    slices are independent computations, so with ``jobs`` > 1 they run on a
    process pool, biggest slices first; results merge only at aggregation.
    """
    n = g.edge_count
    if n > MAX_EDGES:
        raise ValueError(f"graphs are capped at {MAX_EDGES} edges")
    if j_range is None:
        js = list(default_j_range(g, a))
    else:
        js = sorted(set(int(j) for j in j_range))
        if a.window is not None and any(j > a.window for j in js):
            raise WindowError(
                f"degree window is {a.window}; higher degrees are not certified"
            )
        if not a.graded and any(j != 0 for j in js):
            raise ValueError("ungraded algebras have a single slice at j = 0")
        if any(j < 0 for j in js):
            raise ValueError("degrees are nonnegative")

    groups: dict[tuple[int, int], AbelianGroup] = {}
    workers = min(jobs, len(js), os.cpu_count() or 1)
    if workers > 1:
        sizing = Cube(g, a)
        by_size = sorted(
            js,
            key=lambda j: -sum(
                slice_dimension(g, a, i, j, sizing) for i in range(n + 1)
            ),
        )
        # Deal degrees round-robin, biggest first, into one batch per worker
        # so each process amortizes its subset/coloring caches over a batch.
        batches = [by_size[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_degree_batch_groups, g, a, batch, verify_dd)
                for batch in batches
            ]
            for fut in futures:
                groups.update(fut.result())
    else:
        cube = Cube(g, a)
        for j in js:
            groups.update(_degree_slice_groups(g, a, j, verify_dd, cube))
    return BigradedHomology(groups, a.spec, g.to_json_dict(), a.window)


def poincare_series(h: BigradedHomology):
    """Free ranks as a two-variable polynomial in (t, q)."""
    from .chromatic import Poly2

    return Poly2(
        {(i, j): grp.free_rank for (i, j), grp in h.groups.items() if grp.free_rank}
    )


def estimate_peak_bytes(g: Graph, a: Algebra, j_range=None) -> int:
    """Coarse estimate of peak memory, computed before any allocation.

    Counts slice dimensions through the coloring-count recursion (no state
    is materialized) and prices each state at a constant plus the matrix
    entries it can generate.  Subset bookkeeping alone costs on the order of
    2^edges machine words; past 22 edges that floor is returned without
    enumerating (refining it would itself take exponential work).
    """
    n = g.edge_count
    mask_floor = (1 << n) * 128
    if n > 22:
        return mask_floor
    cube = Cube(g, a)
    js = list(default_j_range(g, a)) if j_range is None else list(j_range)
    peak = 0
    for j in js:
        total = sum(slice_dimension(g, a, i, j, cube) for i in range(n + 1))
        peak = max(peak, total)
    per_state = 200 + 60 * max(n, 1)
    return max(peak * per_state, mask_floor)


# ---------------------------------------------------------------------------
# independent cokernel oracle


def cokernel_oracle(generators, degree_bound: int) -> AbelianGroup:
    """The group Z[x]/(g_1, ..., g_k), computed as a plain integer cokernel.

    Columns are the shifts x^t * g_s written over the monomial basis
    1, x, ..., x^(bound-1); the quotient of Z^bound by their span is the
    group.  A monic generator must be present, otherwise the quotient has
    unbounded rank and the truncation would be meaningless.  This path never
    touches the chain-complex machinery, so it can act as an oracle for it.
    """
    polys = []
    for gen in generators:
        coeffs = [int(c) for c in gen]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if coeffs:
            polys.append(coeffs)
    if not any(p[-1] in (1, -1) for p in polys):
        raise ValueError("no monic generator: the quotient group is unbounded")
    bound = int(degree_bound)
    if bound < 1:
        raise ValueError("degree bound must be positive")
    entries: dict[tuple[int, int], int] = {}
    col = 0
    for p in polys:
        deg = len(p) - 1
        for t in range(bound - deg):
            for k, c in enumerate(p):
                if c:
                    entries[(t + k, col)] = c
            col += 1
    snf = smith_normal_form(IntMatrix(bound, col, entries))
    return AbelianGroup(
        bound - snf.rank, tuple(f for f in snf.factors if f > 1)
    )
