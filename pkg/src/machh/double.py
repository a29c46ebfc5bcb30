"""The Hochster bigraded decomposition and double cohomology ranks.

Bidegree bookkeeping: the summand H̃^p(K_I) with |I| = l sits in bidegree
(-k, 2l) with k = l - p - 1, so the "row" of cohomological degree p collects
all subsets graded by cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import masks
from .cohomology import CohomologyEngine
from .complexes import SimplicialComplex
from .errors import ResourceLimit
from .fields import RATIONALS, Field
from .linalg import dense_rank
from .masks import sign_epsilon  # re-exported operation

DEFAULT_MAX_M = 22

__all__ = [
    "BigradedRankTable",
    "RowComplex",
    "sign_epsilon",
    "h_ranks",
    "assemble_row",
    "hh_ranks",
    "euler_characteristic_hh",
    "row_rank_profile",
]


@dataclass(frozen=True)
class BigradedRankTable:
    """Map from bidegree (-k, 2l) to a positive rank; absent entries are zero."""

    entries: dict

    def rank(self, k: int, two_l: int) -> int:
        return self.entries.get((-k, two_l), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** (-neg_k) * r for (neg_k, _), r in self.entries.items())

    def rows(self) -> dict:
        """Per-row totals: row p = l - k - 1."""
        out: dict[int, int] = {}
        for (neg_k, two_l), r in self.entries.items():
            p = two_l // 2 + neg_k - 1
            out[p] = out.get(p, 0) + r
        return dict(sorted(out.items()))

    def by_total_degree(self) -> dict:
        """Totals per cohomological degree -k + 2l."""
        out: dict[int, int] = {}
        for (neg_k, two_l), r in self.entries.items():
            out[neg_k + two_l] = out.get(neg_k + two_l, 0) + r
        return dict(sorted(out.items()))

    def convolve(self, other: "BigradedRankTable") -> "BigradedRankTable":
        """Bidegree-additive convolution (the join/tensor rule)."""
        entries: dict = {}
        for a, ra in self.entries.items():
            for b, rb in other.entries.items():
                key = (a[0] + b[0], a[1] + b[1])
                entries[key] = entries.get(key, 0) + ra * rb
        return BigradedRankTable(entries)


@dataclass
class RowComplex:
    """One row (fixed degree p) of the cochain complex on H*(Z_K).

    ``groups[l]`` lists (subset mask, rank) with |I| = l and positive rank;
    ``matrices[l]`` is the block differential from cardinality l to l - 1.
    """

    p: int
    groups: dict
    dims: dict
    matrices: dict

    def differential_rank(self, l: int) -> int:
        mat = self.matrices.get(l)
        return dense_rank(mat) if mat else 0

    def cohomology_ranks(self) -> dict:
        out = {}
        for l, dim in self.dims.items():
            r = dim - self.differential_rank(l) - self.differential_rank(l + 1)
            if r:
                out[l] = r
        return out


def _check_cap(K: SimplicialComplex, max_m: int) -> None:
    if K.m > max_m:
        raise ResourceLimit(f"m = {K.m} exceeds the configured cap {max_m}")


def h_ranks(
    K: SimplicialComplex,
    field: Field = RATIONALS,
    threads: int = 1,
    max_m: int = DEFAULT_MAX_M,
    engine: CohomologyEngine | None = None,
) -> BigradedRankTable:
    """Bigraded ranks of H*(Z_K) by summing H̃^{l-k-1}(K_I) over |I| = l."""
    _check_cap(K, max_m)
    if engine is None:
        engine = CohomologyEngine(K, field)
    engine.precompute(threads)
    entries: dict = {}
    for I in range(1 << K.m):
        sc = engine.subset(I)
        l = masks.card(I)
        for p in range(-1, sc.max_p + 1):
            b = sc.betti(p)
            if b:
                key = (-(l - p - 1), 2 * l)
                entries[key] = entries.get(key, 0) + b
    return BigradedRankTable(entries)


def assemble_row(
    K: SimplicialComplex,
    p: int,
    engine: CohomologyEngine | None = None,
    field: Field = RATIONALS,
) -> RowComplex:
    """Groups and block differentials of the degree-p row, with the sign
    (-1)**(p+1) * epsilon(i, I) on the block (I, I\\{i})."""
    if engine is None:
        engine = CohomologyEngine(K, field)
    groups: dict[int, list] = {}
    for I in range(1 << K.m):
        b = engine.rank(I, p)
        if b:
            groups.setdefault(masks.card(I), []).append((I, b))
    for l in groups:
        groups[l].sort(key=lambda ib: masks.sort_key(ib[0]))
    dims = {l: sum(b for _, b in g) for l, g in groups.items()}
    zero, one = engine.field.zero, engine.field.one
    matrices: dict[int, list] = {}
    for l, sources in groups.items():
        targets = groups.get(l - 1)
        if not targets:
            continue
        row_offset = {}
        pos = 0
        for J, b in targets:
            row_offset[J] = pos
            pos += b
        nrows, ncols = pos, dims[l]
        mat = [[zero] * ncols for _ in range(nrows)]
        col = 0
        for I, b in sources:
            for i in masks.vertices(I):
                J = I & ~masks.bit(i)
                if J not in row_offset:
                    continue
                sgn = sign_epsilon(i, I) * (-1) ** (p + 1)
                coef = one if sgn == 1 else -one
                block = engine.psi(I, i, p)
                r0 = row_offset[J]
                for r, row in enumerate(block):
                    for c, v in enumerate(row):
                        if v:
                            mat[r0 + r][col + c] = coef * v
            col += b
        matrices[l] = mat
    return RowComplex(p=p, groups=groups, dims=dims, matrices=matrices)


def hh_ranks(
    K: SimplicialComplex,
    field: Field = RATIONALS,
    threads: int = 1,
    max_m: int = DEFAULT_MAX_M,
    engine: CohomologyEngine | None = None,
) -> BigradedRankTable:
    """Bigraded double cohomology ranks: cohomology of every row of (H*(Z_K), d')."""
    _check_cap(K, max_m)
    if engine is None:
        engine = CohomologyEngine(K, field)
    engine.precompute(threads)
    entries: dict = {}
    for p in range(-1, K.dim() + 1):
        row = assemble_row(K, p, engine)
        for l, r in row.cohomology_ranks().items():
            entries[(-(l - p - 1), 2 * l)] = r
    return BigradedRankTable(entries)


def euler_characteristic_hh(table: BigradedRankTable) -> int:
    """Sum of (-1)**k * rank over the table; zero whenever K is not a simplex."""
    return table.euler_characteristic()


def row_rank_profile(
    K: SimplicialComplex,
    field: Field = RATIONALS,
    threads: int = 1,
    max_m: int = DEFAULT_MAX_M,
) -> dict:
    """Per-row double cohomology totals, keyed by the row degree p."""
    return hh_ranks(K, field, threads, max_m).rows()
