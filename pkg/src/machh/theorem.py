"""Hypothesis checking and end-to-end verification of the simplex-gluing rank theorem."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import masks
from .cohomology import CohomologyEngine
from .complexes import SimplicialComplex, glue_simplex
from .double import hh_ranks
from .errors import BadSigma, NotApplicable
from .fields import RATIONALS, Field


@dataclass(frozen=True)
class Thm1Report:
    """Outcome of the four gluing hypotheses for (K, sigma), |sigma| = n + 1.

    ``relabeling`` is the order-preserving permutation sending sigma to the
    initial segment [n+1] (old label -> new label); the hypotheses themselves
    are label-invariant, so they are evaluated directly on sigma.
    """

    sigma: int
    n: int
    conditions: tuple
    witnessing_J: int | None
    predicted_delta: int
    applicable: bool
    relabeling: tuple

    def failed_conditions(self) -> list[int]:
        return [i + 1 for i, ok in enumerate(self.conditions) if not ok]


@dataclass(frozen=True)
class Thm1Verification:
    report: Thm1Report
    rank_before: int
    rank_after: int
    rows_before: dict
    rows_after: dict
    verdict: bool


def _relabeling(m: int, sigma: int) -> tuple:
    inside = masks.vertices(sigma)
    outside = [v for v in range(1, m + 1) if not masks.contains(sigma, v)]
    perm = [0] * m
    for new, old in enumerate(inside + tuple(outside), start=1):
        perm[old - 1] = new
    return tuple(perm)


def check_theorem1(
    K: SimplicialComplex,
    sigma: int,
    engine: CohomologyEngine | None = None,
    field: Field = RATIONALS,
) -> Thm1Report:
    """Evaluate the four hypotheses and predict the total-rank change.

    predicted_delta is -2 when some J = sigma ∪ {j,k} has rank H̃^n(K_J) = 1
    (witnessing_J is the lexicographically least such J), else 0.
    """
    n = masks.card(sigma) - 1
    if n < 1 or sigma & ~masks.full_mask(K.m):
        raise BadSigma(f"sigma must have >= 2 vertices inside [{K.m}]")
    if engine is None:
        engine = CohomologyEngine(K, field)
    outside = [v for v in range(1, K.m + 1) if not masks.contains(sigma, v)]
    sigma_verts = masks.vertices(sigma)

    cond1 = sigma not in K.faces
    cond2 = all(
        (sigma | masks.bit(j)) & ~masks.bit(i) in K.faces
        for j in outside
        for i in sigma_verts
    )
    cond3 = True
    cond4 = True
    witness = None
    for j, k in combinations(outside, 2):
        J = sigma | masks.bit(j) | masks.bit(k)
        r = engine.rank(J, n)
        if r > 1:
            cond3 = False
        elif r == 1 and witness is None:
            witness = J  # combinations of sorted labels -> lexicographically least first
        member = [J & ~masks.bit(i) in K.faces for i in sigma_verts]
        if any(member) != all(member):
            cond4 = False
    conditions = (cond1, cond2, cond3, cond4)
    applicable = all(conditions) and K.m >= n + 2
    predicted = -2 if applicable and witness is not None else 0
    return Thm1Report(
        sigma=sigma,
        n=n,
        conditions=conditions,
        witnessing_J=witness if applicable else None,
        predicted_delta=predicted,
        applicable=applicable,
        relabeling=_relabeling(K.m, sigma),
    )


def verify_theorem1(
    K: SimplicialComplex,
    sigma: int,
    field: Field = RATIONALS,
    threads: int = 1,
    max_m: int = 22,
) -> Thm1Verification:
    """Compare double cohomology before and after gluing sigma.

    The verdict also checks the per-row behavior: row n-1 drops by one, row n
    drops by one (witness present) or gains one (no witness), all other rows
    are unchanged.
    """
    report = check_theorem1(K, sigma, field=field)
    if not report.applicable:
        raise NotApplicable(
            f"hypotheses {report.failed_conditions() or ['m >= n+2']} fail for sigma {masks.mask_str(sigma)}"
        )
    n = report.n
    before = hh_ranks(K, field, threads, max_m)
    after = hh_ranks(glue_simplex(K, sigma), field, threads, max_m)
    rows_before = before.rows()
    rows_after = after.rows()
    ok = after.total() - before.total() == report.predicted_delta
    all_rows = set(rows_before) | set(rows_after)
    for p in all_rows:
        b = rows_before.get(p, 0)
        a = rows_after.get(p, 0)
        if p == n - 1:
            ok = ok and a == b - 1
        elif p == n:
            ok = ok and a == (b - 1 if report.witnessing_J is not None else b + 1)
        else:
            ok = ok and a == b
    return Thm1Verification(
        report=report,
        rank_before=before.total(),
        rank_after=after.total(),
        rows_before=rows_before,
        rows_after=rows_after,
        verdict=ok,
    )
