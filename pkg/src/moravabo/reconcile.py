"""Degree-by-degree reconciliation of the three descriptions of
K(n)-tilde of BO(q): the Q_n homology of the AHSS, the explicit b/c basis,
and the symmetric-function quotient of the cohomology presentation.

The degree dictionary lives here and nowhere else: a homological degree d
corresponds to symmetric-function weight d/2 (each variable has
cohomological degree 2), and the weight-0 unit of the quotient ring is
excluded because the homology side is reduced.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Tuple

from . import qn_action
from .morava_basis import BCMonomial, enumerate_basis
from .qn_action import MoravaParams
from .symfun import Partition, is_canonical, quotient_report


def to_partition(params: MoravaParams, m: BCMonomial) -> Partition:
    """Exponent partition of a basis monomial: b_{2i} gives a part i,
    c_{4j} gives the pair (j, j). Weight is half the degree."""
    m.validate_for(params)
    parts = list(m.b_part) + [j for j in m.c_part for _ in range(2)]
    return tuple(sorted(parts, reverse=True))


def from_partition(params: MoravaParams, lam: Partition) -> BCMonomial:
    """Inverse of to_partition on canonical partitions.

    Values below 2^n become b-indices with their multiplicity; values at or
    above 2^n come in pairs and become c-indices.
    """
    if not is_canonical(params, lam):
        raise ValueError(f"partition {lam} is not canonical for n={params.n}")
    bound = params.b_index_bound
    b_part = []
    c_part = []
    for value, mult in sorted(Counter(lam).items()):
        if value < bound:
            b_part.extend([value] * mult)
        else:
            c_part.extend([value] * (mult // 2))
    return BCMonomial(tuple(b_part), tuple(c_part))


@dataclass(frozen=True)
class ReconcileRow:
    degree: int
    homology_dim: int
    basis_count: int
    quotient_dim: int

    @property
    def passed(self) -> bool:
        return self.homology_dim == self.basis_count == self.quotient_dim


@dataclass(frozen=True)
class ReconcileReport:
    params: MoravaParams
    q: int
    max_degree: int
    rows: Tuple[ReconcileRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)


def verify_all(params: MoravaParams, q: int, max_degree: int) -> ReconcileReport:
    """Compare the three per-degree counts for every even degree up to
    max_degree (which must be even)."""
    if max_degree % 2:
        raise ValueError("max_degree must be even")
    rows = []
    for d in range(2, max_degree + 1, 2):
        homology = qn_action.qn_homology(params, q, d, exact_length=False).homology_dim
        basis_count = len(enumerate_basis(params, q, d, exact=False))
        quotient = quotient_report(params, q, d // 2).quotient_dim
        rows.append(ReconcileRow(d, homology, basis_count, quotient))
    return ReconcileReport(params, q, max_degree, tuple(rows))
