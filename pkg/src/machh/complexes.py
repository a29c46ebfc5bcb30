"""Finite simplicial complexes on [m] and the combinatorial constructors."""

from __future__ import annotations

from typing import Iterable, NamedTuple

from . import masks
from .errors import (
    BoundaryMissing,
    FaceAlreadyPresent,
    GhostVertex,
    NotAVertex,
    ResourceLimit,
    VertexOutOfRange,
)


class SimplicialComplex:
    """Downward-closed face family on [m] containing the empty face.

    Instances are immutable; all constructors return new values. For m >= 1
    every singleton must be a face (checked by ``from_facets``); m = 0 is the
    empty complex ``{∅}`` arising from restriction to the empty subset.
    """

    __slots__ = ("m", "faces", "_facets", "_faces_by_card")

    def __init__(self, m: int, faces: frozenset[int]):
        self.m = m
        self.faces = faces
        self._facets: tuple[int, ...] | None = None
        self._faces_by_card: dict[int, list[int]] | None = None

    @classmethod
    def from_facets(cls, m: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of the listed facets; rejects ghost vertices."""
        if m < 1:
            raise ValueError(f"ground set size must be >= 1, got {m}")
        if m > masks.MAX_GROUND_SET:
            raise ResourceLimit(f"m = {m} exceeds the {masks.MAX_GROUND_SET}-vertex cap")
        faces: set[int] = {0}
        for facet in facets:
            top = masks.mask_of(facet, m)
            faces.update(masks.submasks(top))
        for v in range(1, m + 1):
            if masks.bit(v) not in faces:
                raise GhostVertex(v)
        return cls(m, frozenset(faces))

    @property
    def facets(self) -> tuple[int, ...]:
        """Inclusion-maximal faces, lexicographically ordered (cached)."""
        if self._facets is None:
            out = []
            for f in self.faces:
                if not any(
                    f | masks.bit(v) in self.faces
                    for v in range(1, self.m + 1)
                    if not masks.contains(f, v)
                ):
                    out.append(f)
            self._facets = tuple(masks.lex_sorted(out))
        return self._facets

    def faces_by_card(self) -> dict[int, list[int]]:
        """Faces grouped by cardinality, each group lexicographically sorted."""
        if self._faces_by_card is None:
            groups: dict[int, list[int]] = {}
            for f in self.faces:
                groups.setdefault(masks.card(f), []).append(f)
            self._faces_by_card = {c: masks.lex_sorted(g) for c, g in sorted(groups.items())}
        return self._faces_by_card

    def dim(self) -> int:
        return max(masks.card(f) for f in self.faces) - 1

    def has_face(self, mask: int) -> bool:
        return mask in self.faces

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.m == other.m
            and self.faces == other.faces
        )

    def __hash__(self) -> int:
        return hash((self.m, self.faces))

    def __repr__(self) -> str:
        return f"SimplicialComplex(m={self.m}, facets=[{', '.join(masks.mask_str(f) for f in self.facets)}])"


def full_subcomplex(K: SimplicialComplex, I: int) -> SimplicialComplex:
    """Restriction of K to the subset I, relabeled to [|I|] preserving order."""
    verts = masks.vertices(I)
    relabel = {v: i + 1 for i, v in enumerate(verts)}
    new_faces = set()
    for f in K.faces:
        if f & ~I == 0:
            new_faces.add(masks.mask_of((relabel[v] for v in masks.vertices(f)), len(verts)))
    return SimplicialComplex(len(verts), frozenset(new_faces))


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join: L's vertices are shifted past K's ground set."""
    shift = K.m
    faces = frozenset(s | (t << shift) for s in K.faces for t in L.faces)
    return SimplicialComplex(K.m + L.m, faces)


def wedge(K: SimplicialComplex, vK: int, L: SimplicialComplex, vL: int) -> SimplicialComplex:
    """One-point union identifying vertex vL of L with vertex vK of K."""
    if not (1 <= vK <= K.m):
        raise NotAVertex(f"{vK} is not a vertex of the first complex")
    if not (1 <= vL <= L.m):
        raise NotAVertex(f"{vL} is not a vertex of the second complex")
    relabel = {vL: vK}
    nxt = K.m + 1
    for v in range(1, L.m + 1):
        if v != vL:
            relabel[v] = nxt
            nxt += 1
    m = K.m + L.m - 1
    faces = set(K.faces)
    for t in L.faces:
        faces.add(masks.mask_of((relabel[v] for v in masks.vertices(t)), m))
    return SimplicialComplex(m, frozenset(faces))


def glue_simplex(K: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """K with the single top face sigma added; its boundary must be present."""
    if sigma == 0 or sigma & ~masks.full_mask(K.m):
        raise VertexOutOfRange(f"sigma {masks.mask_str(sigma)} not a nonempty subset of [{K.m}]")
    if sigma in K.faces:
        raise FaceAlreadyPresent(f"{masks.mask_str(sigma)} is already a face")
    for v in masks.vertices(sigma):
        facet = sigma & ~masks.bit(v)
        if facet not in K.faces:
            raise BoundaryMissing(masks.vertices(facet))
    return SimplicialComplex(K.m, K.faces | {sigma})


class K2rComplex(NamedTuple):
    """A member of the even-rank family, with its tracked non-edge."""

    complex: SimplicialComplex
    non_edge: tuple[int, int]


def square() -> SimplicialComplex:
    """The 4-cycle 1-2-3-4."""
    return SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


def two_points() -> SimplicialComplex:
    return SimplicialComplex.from_facets(2, [[1], [2]])


def k2r_family(r: int) -> K2rComplex:
    """Recursive family whose member of index r has total double-cohomology rank 2r.

    Base cases: index 2 is the square with non-edge (1,3); index 1 is the square
    with the diagonal {1,3} glued in, non-edge (2,4). Even index doubles by
    joining with two points; odd index glues the two-point join of the next
    smaller even member along its new non-edge.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if r == 1:
        return K2rComplex(glue_simplex(square(), masks.mask_of([1, 3], 4)), (2, 4))
    if r == 2:
        return K2rComplex(square(), (1, 3))
    if r % 2 == 0:
        inner = k2r_family(r // 2)
        a, b = inner.complex.m + 1, inner.complex.m + 2
        return K2rComplex(join(inner.complex, two_points()), (a, b))
    inner = k2r_family((r + 1) // 2)
    a, b = inner.complex.m + 1, inner.complex.m + 2
    glued = glue_simplex(join(inner.complex, two_points()), masks.bit(a) | masks.bit(b))
    return K2rComplex(glued, inner.non_edge)
