"""Exact calculator for the mod-2 Morava K-theory of BO(q) and MO(q).

Computes Q_n homology of the mod-2 homology of BO(q) by linear algebra
over GF(2), enumerates the explicit b/c basis of the answer, and
reconciles both, degree by degree, with the symmetric-function quotient
describing the cohomology ring.
"""

from .bo_homology import BMonomial, DegreeSlice, enumerate_BO, enumerate_M, sw_correspondence
from .coalgebra import TensorTerm, check_coassociativity, coproduct
from .f2linalg import F2Matrix, F2Vector, kernel_basis, member, quotient_dim, rank
from .morava_basis import BCMonomial, enumerate_basis, poincare_counts
from .qn_action import HomologyReport, MoravaParams, qn_derivation, qn_homology, qn_matrix, qn_on_generator
from .reconcile import ReconcileReport, from_partition, to_partition, verify_all
from .symfun import (
    SymPoly,
    enumerate_canonical,
    factor_check,
    ideal_slice,
    is_canonical,
    msym_product,
    quotient_report,
    reduce_to_canonical,
    relation_element,
)

__version__ = "0.1.0"
