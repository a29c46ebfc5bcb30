import random

import pytest

import machh as M
from machh import masks
from machh.errors import BadSigma, NotApplicable
from machh.theorem import check_theorem1, verify_theorem1

from conftest import permute_complex, random_complex, random_permutation


def mask(verts, m):
    return masks.mask_of(verts, m)


def admissible_pair(rng, inner_m=4):
    """A complex with a fillable simplex meeting the gluing hypotheses.

    Joining any complex with two extra points and filling the edge between
    the two apexes always satisfies the hypotheses for n = 1.
    """
    inner = random_complex(rng, rng.randint(3, inner_m))
    K = M.join(inner, M.two_points())
    sigma = mask([inner.m + 1, inner.m + 2], K.m)
    perm = random_permutation(rng, K.m)
    P = permute_complex(K, perm)
    sigma_p = masks.mask_of((perm[v] for v in masks.vertices(sigma)), K.m)
    return P, sigma_p


class TestCheckTheorem1:
    def test_square_diagonal(self, square):
        rep = check_theorem1(square, mask([1, 3], 4))
        assert rep.applicable
        assert rep.conditions == (True, True, True, True)
        assert rep.n == 1
        assert rep.witnessing_J == mask([1, 2, 3, 4], 4)
        assert rep.predicted_delta == -2

    def test_case_two_no_witness(self, case2_complex):
        rep = check_theorem1(case2_complex, mask([1, 2], 4))
        assert rep.applicable
        assert rep.witnessing_J is None
        assert rep.predicted_delta == 0

    def test_face_already_present(self, square):
        rep = check_theorem1(square, mask([1, 2], 4))
        assert not rep.conditions[0]
        assert not rep.applicable

    def test_boundary_missing(self, square):
        rep = check_theorem1(square, mask([1, 2, 3], 4))
        assert not rep.conditions[1]
        assert not rep.applicable

    def test_bad_sigma(self, square):
        with pytest.raises(BadSigma):
            check_theorem1(square, mask([2], 4))
        with pytest.raises(BadSigma):
            check_theorem1(square, 0)

    def test_too_few_outside_vertices(self):
        # need at least two vertices outside sigma
        pts = M.two_points()
        rep = check_theorem1(pts, mask([1, 2], 2))
        assert not rep.applicable

    def test_prediction_is_label_invariant(self):
        rng = random.Random(7)
        for _ in range(20):
            K = random_complex(rng, rng.randint(4, 6))
            candidates = [
                s
                for s in range(1 << K.m)
                if masks.card(s) >= 2
                and s not in K.faces
                and all(s & ~masks.bit(v) in K.faces for v in masks.vertices(s))
            ]
            if not candidates:
                continue
            sigma = rng.choice(candidates)
            base = check_theorem1(K, sigma)
            perm = random_permutation(rng, K.m)
            P = permute_complex(K, perm)
            sp = masks.mask_of((perm[v] for v in masks.vertices(sigma)), K.m)
            moved = check_theorem1(P, sp)
            assert moved.applicable == base.applicable
            assert moved.predicted_delta == base.predicted_delta


class TestVerifyTheorem1:
    def test_square_diagonal(self, square):
        v = verify_theorem1(square, mask([1, 3], 4))
        assert v.verdict
        assert v.rank_before == 4 and v.rank_after == 2
        assert v.rows_before == {-1: 1, 0: 2, 1: 1}
        assert v.rows_after == {-1: 1, 0: 1}

    def test_case_two_rows(self, case2_complex):
        v = verify_theorem1(case2_complex, mask([1, 2], 4))
        assert v.verdict
        assert v.rank_before == v.rank_after == 2
        assert v.rows_before == {-1: 1, 0: 1}
        assert v.rows_after == {-1: 1, 1: 1}

    def test_not_applicable_raises(self, square):
        with pytest.raises(NotApplicable):
            verify_theorem1(square, mask([1, 2], 4))

    def test_random_admissible_pairs(self):
        rng = random.Random(11)
        for _ in range(10):
            K, sigma = admissible_pair(rng)
            v = verify_theorem1(K, sigma)
            assert v.verdict
            n = v.report.n
            assert v.rows_after.get(n - 1, 0) == v.rows_before.get(n - 1, 0) - 1
            if v.report.predicted_delta == -2:
                assert v.rows_after.get(n, 0) == v.rows_before.get(n, 0) - 1
            else:
                assert v.rows_after.get(n, 0) == v.rows_before.get(n, 0) + 1
