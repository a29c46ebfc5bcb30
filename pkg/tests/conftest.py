import random

import pytest
from hypothesis import strategies as st

import machh as M


def random_complex(rng: random.Random, m: int, max_facet: int = 4) -> M.SimplicialComplex:
    """Random complex on [m] with all singletons present."""
    facets = [[i] for i in range(1, m + 1)]
    for _ in range(rng.randint(1, 2 * m)):
        size = rng.randint(2, min(m, max_facet))
        facets.append(rng.sample(range(1, m + 1), size))
    return M.SimplicialComplex.from_facets(m, facets)


def permute_complex(K: M.SimplicialComplex, perm: dict) -> M.SimplicialComplex:
    """Relabel vertices through a permutation of [m]."""
    faces = frozenset(
        M.masks.mask_of((perm[v] for v in M.masks.vertices(f)), K.m) for f in K.faces
    )
    return M.SimplicialComplex(K.m, faces)


def random_permutation(rng: random.Random, m: int) -> dict:
    target = list(range(1, m + 1))
    rng.shuffle(target)
    return {i + 1: target[i] for i in range(m)}


def is_valid_complex(K: M.SimplicialComplex) -> bool:
    if 0 not in K.faces:
        return False
    for v in range(1, K.m + 1):
        if M.masks.bit(v) not in K.faces:
            return False
    for f in K.faces:
        for v in M.masks.vertices(f):
            if f & ~M.masks.bit(v) not in K.faces:
                return False
    return True


@st.composite
def complexes(draw, min_m: int = 2, max_m: int = 6):
    m = draw(st.integers(min_m, max_m))
    extra = draw(
        st.lists(
            st.sets(st.integers(1, m), min_size=2, max_size=min(m, 4)),
            max_size=2 * m,
        )
    )
    facets = [[i] for i in range(1, m + 1)] + [sorted(f) for f in extra]
    return M.SimplicialComplex.from_facets(m, facets)


@pytest.fixture(scope="session")
def square() -> M.SimplicialComplex:
    return M.square()


@pytest.fixture(scope="session")
def square_diag(square) -> M.SimplicialComplex:
    return M.glue_simplex(square, M.masks.mask_of([1, 3], 4))


@pytest.fixture(scope="session")
def case2_complex() -> M.SimplicialComplex:
    # complete graph on 4 vertices minus the edge {1,2}, plus both triangles on {3,4}
    return M.SimplicialComplex.from_facets(4, [[1, 3, 4], [2, 3, 4]])


def simplex(n: int) -> M.SimplicialComplex:
    return M.SimplicialComplex.from_facets(n + 1, [list(range(1, n + 2))])
