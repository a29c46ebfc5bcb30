"""Ordinary and double (bigraded) cohomology of moment-angle complexes.

The ambient topology never appears: everything is driven by a finite
simplicial complex K on [m], its full subcomplexes, and exact linear algebra
over the rationals or GF(p).
"""

from .complexes import (
    K2rComplex,
    SimplicialComplex,
    full_subcomplex,
    glue_simplex,
    join,
    k2r_family,
    square,
    two_points,
    wedge,
)
from .cohomology import (
    AugmentedCochainComplex,
    CohomologyBasis,
    CohomologyEngine,
    build_cochain_complex,
    induced_map_psi,
    reduced_cohomology,
)
from .double import (
    BigradedRankTable,
    RowComplex,
    assemble_row,
    euler_characteristic_hh,
    h_ranks,
    hh_ranks,
    row_rank_profile,
    sign_epsilon,
)
from .fields import RATIONALS, Field, prime_field
from .oracle import oracle_hh_rows, oracle_hh_total, oracle_reduced_betti
from .theorem import Thm1Report, Thm1Verification, check_theorem1, verify_theorem1
from . import errors, masks

__all__ = [
    "SimplicialComplex",
    "K2rComplex",
    "full_subcomplex",
    "join",
    "wedge",
    "glue_simplex",
    "k2r_family",
    "square",
    "two_points",
    "AugmentedCochainComplex",
    "CohomologyBasis",
    "CohomologyEngine",
    "build_cochain_complex",
    "reduced_cohomology",
    "induced_map_psi",
    "BigradedRankTable",
    "RowComplex",
    "assemble_row",
    "h_ranks",
    "hh_ranks",
    "euler_characteristic_hh",
    "row_rank_profile",
    "sign_epsilon",
    "RATIONALS",
    "Field",
    "prime_field",
    "oracle_reduced_betti",
    "oracle_hh_rows",
    "oracle_hh_total",
    "Thm1Report",
    "Thm1Verification",
    "check_theorem1",
    "verify_theorem1",
    "errors",
    "masks",
]
