"""Reduced (augmented) simplicial cohomology over an exact field.

Cochain bases for a full subcomplex K_I keep the ambient vertex labels, so the
map induced by K_{I\\{i}} -> K_I on cohomology is literally a coordinate
projection followed by reduction into the target basis.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

from . import masks
from .complexes import SimplicialComplex
from .errors import InternalInconsistency
from .fields import RATIONALS, Field
from .linalg import SparseReducer, kernel_basis


def insertion_sign(j: int, t: int) -> int:
    """Sign of inserting vertex j into t \\ {j}: (-1)**(# elements of t below j)."""
    return -1 if masks.below_count(t, j) & 1 else 1


class CohomologyBasis:
    """Basis data for one reduced cohomology group H̃^p.

    ``representatives`` are cocycle vectors (sparse, keyed by simplex mask),
    linearly independent modulo coboundaries; ``express`` writes any cocycle in
    these coordinates using the stored elimination.
    """

    __slots__ = ("p", "simplices", "rank", "representatives", "_reducer", "_field")

    def __init__(self, p, simplices, representatives, reducer, field):
        self.p = p
        self.simplices = simplices
        self.rank = len(representatives)
        self.representatives = representatives
        self._reducer = reducer
        self._field = field

    def express(self, vec: dict) -> list:
        """Coordinates of a cocycle modulo coboundaries, dense over representatives."""
        coeffs = self._reducer.express(vec)
        if coeffs is None:
            raise InternalInconsistency("vector is not a cocycle of this group")
        out = [self._field.zero] * self.rank
        for gen, c in coeffs.items():
            out[gen] = c
        return out

    def dense_representatives(self) -> list[list]:
        index = {s: i for i, s in enumerate(self.simplices)}
        out = []
        for rep in self.representatives:
            row = [self._field.zero] * len(self.simplices)
            for s, c in rep.items():
                row[index[s]] = c
            out.append(row)
        return out


class SubsetCohomology:
    """All cochain degrees of one full subcomplex K_I, computed lazily."""

    __slots__ = (
        "I",
        "field",
        "simplices",
        "simplex_sets",
        "orders",
        "max_p",
        "_delta",
        "_basis",
        "_betti",
    )

    def __init__(self, K: SimplicialComplex, I: int, field: Field = RATIONALS):
        self.I = I
        self.field = field
        groups: dict[int, list[int]] = {}
        for f in K.faces:
            if f & ~I == 0:
                groups.setdefault(masks.card(f) - 1, []).append(f)
        self.simplices = {p: masks.lex_sorted(g) for p, g in groups.items()}
        self.simplex_sets = {p: frozenset(g) for p, g in groups.items()}
        self.orders = {
            p: {s: i for i, s in enumerate(g)} for p, g in self.simplices.items()
        }
        self.max_p = max(groups)
        self._delta: dict[int, SparseReducer] = {}
        self._basis: dict[int, CohomologyBasis] = {}
        self._betti: dict[int, int] = {}

    def coboundary_vector(self, p: int, s: int) -> dict:
        """delta(s*) as a sparse vector over the p-simplices, s of degree p-1."""
        targets = self.simplex_sets.get(p, frozenset())
        vec = {}
        for j in masks.vertices(self.I & ~s):
            t = s | masks.bit(j)
            if t in targets:
                vec[t] = self.field.from_int(insertion_sign(j, t))
        return vec

    def delta_reducer(self, p: int) -> SparseReducer:
        """Echelon form of delta_p, rows indexed by the (p+1)-simplices."""
        red = self._delta.get(p)
        if red is None:
            red = SparseReducer(self.orders.get(p, {}), self.field)
            one = self.field.one
            for t in self.simplices.get(p + 1, ()):
                row = {}
                for j in masks.vertices(t):
                    row[t & ~masks.bit(j)] = (
                        one if insertion_sign(j, t) == 1 else -one
                    )
                red.add(row)
            self._delta[p] = red
        return red

    def betti(self, p: int) -> int:
        if p not in self.simplices:
            return 0
        b = self._betti.get(p)
        if b is None:
            b = (
                len(self.simplices[p])
                - self.delta_reducer(p).rank
                - self.delta_reducer(p - 1).rank
            )
            self._betti[p] = b
        return b

    def basis(self, p: int) -> CohomologyBasis:
        cached = self._basis.get(p)
        if cached is not None:
            return cached
        order = self.orders.get(p, {})
        combined = SparseReducer(order, self.field, track=True)
        reps: list[dict] = []
        if p in self.simplices:
            for s in self.simplices.get(p - 1, ()):
                combined.add(self.coboundary_vector(p, s))
            for kv in kernel_basis(self.delta_reducer(p), self.simplices[p]):
                r = combined.residual(kv)
                if r:
                    combined.add(r, gen=len(reps))
                    reps.append(r)
            if len(reps) != self.betti(p):
                raise InternalInconsistency(
                    f"representative count {len(reps)} != betti {self.betti(p)}"
                )
        basis = CohomologyBasis(p, tuple(self.simplices.get(p, ())), reps, combined, self.field)
        self._basis[p] = basis
        return basis


class CohomologyEngine:
    """Per-subset cohomology cache for a fixed ambient complex K.

    Computations for distinct subsets are independent; ``precompute`` may fill
    the cache from a thread pool. Results are value-identical regardless of
    scheduling.
    """

    def __init__(self, K: SimplicialComplex, field: Field = RATIONALS):
        self.K = K
        self.field = field
        self._cache: dict[int, SubsetCohomology] = {}

    def subset(self, I: int) -> SubsetCohomology:
        sc = self._cache.get(I)
        if sc is None:
            sc = SubsetCohomology(self.K, I, self.field)
            self._cache[I] = sc
        return sc

    def rank(self, I: int, p: int) -> int:
        return self.subset(I).betti(p)

    def basis(self, I: int, p: int) -> CohomologyBasis:
        return self.subset(I).basis(p)

    def psi(self, I: int, i: int, p: int) -> list[list]:
        """Matrix of the restriction H̃^p(K_I) -> H̃^p(K_{I\\{i}}) in the stored bases."""
        src = self.basis(I, p)
        dst = self.basis(I & ~masks.bit(i), p)
        ibit = masks.bit(i)
        cols = []
        for rep in src.representatives:
            restricted = {s: c for s, c in rep.items() if not s & ibit}
            cols.append(dst.express(restricted))
        return [[cols[c][r] for c in range(src.rank)] for r in range(dst.rank)]

    def precompute(self, threads: int = 1) -> None:
        """Compute Betti numbers of every full subcomplex, optionally in parallel."""
        todo = [I for I in range(1 << self.K.m) if I not in self._cache]

        def compute(I: int) -> tuple[int, SubsetCohomology]:
            sc = SubsetCohomology(self.K, I, self.field)
            for p in range(-1, sc.max_p + 1):
                sc.betti(p)
            return I, sc

        if threads <= 1:
            for I in todo:
                self._cache[I] = compute(I)[1]
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for I, sc in pool.map(compute, todo):
                    self._cache[I] = sc


@dataclass(frozen=True)
class AugmentedCochainComplex:
    """Ordered simplex bases and coboundary rows of one complex.

    ``coboundaries[p]`` lists, per (p+1)-simplex t, the sparse row
    {s: ±1 for the p-faces s of t}; the augmentation places the empty simplex
    in degree -1.
    """

    m: int
    bases: dict
    coboundaries: dict


def build_cochain_complex(L: SimplicialComplex) -> AugmentedCochainComplex:
    """Augmented cochain complex of L; asserts delta∘delta = 0."""
    groups: dict[int, list[int]] = {}
    for f in L.faces:
        groups.setdefault(masks.card(f) - 1, []).append(f)
    bases = {p: tuple(masks.lex_sorted(g)) for p, g in sorted(groups.items())}
    coboundaries = {}
    for p in bases:
        rows = []
        for t in bases.get(p + 1, ()):
            rows.append(
                (t, {t & ~masks.bit(j): insertion_sign(j, t) for j in masks.vertices(t)})
            )
        coboundaries[p] = rows
    # delta_{p+1} ∘ delta_p = 0, checked symbolically over the integers
    for p in sorted(bases):
        first = dict(coboundaries.get(p, ()))
        second = dict(coboundaries.get(p + 1, ()))
        for s in bases[p]:
            image = {t: row[s] for t, row in first.items() if s in row}
            acc: dict[int, int] = {}
            for t, c in image.items():
                for u, row in second.items():
                    if t in row:
                        acc[u] = acc.get(u, 0) + c * row[t]
            if any(acc.values()):
                raise InternalInconsistency("delta∘delta != 0")
    return AugmentedCochainComplex(L.m, bases, coboundaries)


def reduced_cohomology(
    L: SimplicialComplex, p: int, field: Field = RATIONALS
) -> CohomologyBasis:
    """Reduced cohomology H̃^p(L) with deterministic representatives."""
    sc = SubsetCohomology(L, masks.full_mask(L.m), field)
    if p < -1 or p not in sc.simplices:
        return CohomologyBasis(p, (), [], SparseReducer({}, field, track=True), field)
    return sc.basis(p)


def induced_map_psi(
    K: SimplicialComplex,
    I: int,
    i: int,
    p: int,
    engine: CohomologyEngine | None = None,
    field: Field = RATIONALS,
) -> list[list]:
    """Matrix of psi_{p;i,I}: H̃^p(K_I) -> H̃^p(K_{I\\{i}})."""
    if engine is None:
        engine = CohomologyEngine(K, field)
    return engine.psi(I, i, p)
