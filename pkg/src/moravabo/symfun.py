"""Monomial symmetric functions in q variables over GF(2) and the
leading-term relation ideal of the Morava K cohomology of BO(q).

Partitions are nonincreasing tuples of positive ints with at most q
parts; the empty tuple is the constant 1. The relation the theory
imposes in each Chern degree k contributes, at the associated-graded
level, the single monomial symmetric function with exponent pattern
(2^n, 1, ..., 1); the quotient of each weight slice by the ideal these
generate is measured here and compared against the canonical basis:
partitions whose odd-multiplicity values all lie below 2^n.

Only the v_n-leading coefficients of the relations are known exactly, so
all statements are per-weight dimension counts of the associated graded,
not identities among power series representatives.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Tuple

from .f2linalg import Echelon, F2Matrix, F2Vector, member, rank
from .qn_action import MoravaParams

Partition = Tuple[int, ...]
IdealLabel = Tuple[int, Partition]  # (k, mu): the product m_mu * g_k


def check_partition(lam: Partition, q: int) -> Partition:
    """Validate a nonincreasing positive partition with at most q parts."""
    if len(lam) > q:
        raise ValueError(f"partition {lam} has more than {q} parts")
    if any(p < 1 for p in lam):
        raise ValueError(f"partition {lam} has nonpositive parts")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"partition {lam} is not nonincreasing")
    return lam


def partition_str(lam: Partition) -> str:
    return "m(" + ",".join(str(p) for p in lam) + ")" if lam else "1"


def _parts_at_most(w: int, q: int, maxpart: int | None = None) -> Iterator[Partition]:
    if maxpart is None:
        maxpart = w
    if w == 0:
        yield ()
        return
    if q == 0:
        return
    for first in range(min(w, maxpart), 0, -1):
        for rest in _parts_at_most(w - first, q - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_at_most(w: int, q: int) -> Tuple[Partition, ...]:
    """Partitions of w into at most q parts, in canonical (ascending) order."""
    return tuple(sorted(_parts_at_most(w, q)))


@dataclass(frozen=True)
class SymPoly:
    """GF(2) combination of monomial symmetric functions in q variables."""

    q: int
    terms: FrozenSet[Partition]

    def __post_init__(self):
        for lam in self.terms:
            check_partition(lam, self.q)

    @classmethod
    def zero(cls, q: int) -> "SymPoly":
        return cls(q, frozenset())

    @classmethod
    def monomial(cls, q: int, lam: Partition) -> "SymPoly":
        return cls(q, frozenset({lam}))

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if self.q != other.q:
            raise ValueError("variable count mismatch")
        return SymPoly(self.q, self.terms ^ other.terms)

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        if self.q != other.q:
            raise ValueError("variable count mismatch")
        acc = SymPoly.zero(self.q)
        for a in self.terms:
            for b in other.terms:
                acc = acc + msym_product(self.q, a, b)
        return acc

    def is_homogeneous(self) -> bool:
        return len({sum(lam) for lam in self.terms}) <= 1

    def weight(self) -> int:
        """Common weight of all terms; zero polynomial has no weight."""
        weights = {sum(lam) for lam in self.terms}
        if len(weights) != 1:
            raise ValueError("polynomial is zero or non-homogeneous")
        return weights.pop()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(partition_str(lam) for lam in sorted(self.terms))


@lru_cache(maxsize=None)
def _distinct_perms(vec: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(sorted(set(itertools.permutations(vec))))


def _strip(vec: Tuple[int, ...]) -> Partition:
    return tuple(sorted((x for x in vec if x), reverse=True))


@lru_cache(maxsize=None)
def msym_product(q: int, a: Partition, b: Partition) -> SymPoly:
    """Product m_a * m_b in q variables, recollected mod 2.

    The coefficient of m_lam is the number of distinct rearrangements beta
    of b's padded exponent vector for which mu - beta is a rearrangement of
    a's, where mu is the sorted exponent vector of lam. Candidate lams are
    exactly the sorted sums of a's vector with each rearrangement of b's.
    """
    check_partition(a, q)
    check_partition(b, q)
    a_pad = a + (0,) * (q - len(a))
    b_pad = b + (0,) * (q - len(b))
    if len(_distinct_perms(a_pad)) < len(_distinct_perms(b_pad)):
        a_pad, b_pad = b_pad, a_pad
    b_perms = _distinct_perms(b_pad)
    candidates = sorted({_strip(tuple(x + y for x, y in zip(a_pad, beta))) for beta in b_perms})
    out = set()
    for lam in candidates:
        mu = lam + (0,) * (q - len(lam))
        count = 0
        for beta in b_perms:
            diff = tuple(x - y for x, y in zip(mu, beta))
            if min(diff) < 0:
                continue
            if tuple(sorted(diff, reverse=True)) == a_pad:
                count += 1
        if count % 2:
            out.add(lam)
    return SymPoly(q, frozenset(out))


def relation_element(params: MoravaParams, k: int, q: int) -> Partition:
    """Leading coefficient of the k-th Chern relation: the partition (2^n, 1^(k-1))."""
    if not 1 <= k <= q:
        raise ValueError(f"relation index k={k} out of range 1..{q}")
    return (2 ** params.n,) + (1,) * (k - 1)


def factor_check(params: MoravaParams, q: int) -> bool:
    """Check that the top relation element factors as (x_1...x_q) * m_(2^n - 1)."""
    if q < 1:
        raise ValueError("q must be >= 1")
    product = msym_product(q, (1,) * q, (2 ** params.n - 1,))
    expected = SymPoly.monomial(q, relation_element(params, q, q))
    return product == expected


def is_canonical(params: MoravaParams, lam: Partition) -> bool:
    """True iff every part value of odd multiplicity is below 2^n.

    Such partitions split as distinct sub-2^n values plus equal pairs,
    which is the shape of the canonical quotient basis.
    """
    bound = params.b_index_bound
    return all(v < bound for v, mult in Counter(lam).items() if mult % 2)


def enumerate_canonical(params: MoravaParams, q: int, w: int) -> Tuple[Partition, ...]:
    """Canonical partitions of weight w with at most q parts, in canonical order."""
    return tuple(lam for lam in partitions_at_most(w, q) if is_canonical(params, lam))


@lru_cache(maxsize=None)
def _ideal_products(
    params: MoravaParams, q: int, w: int
) -> Tuple[Tuple[IdealLabel, SymPoly], ...]:
    """All products m_mu * g_k of weight w, labelled, in deterministic order."""
    out: List[Tuple[IdealLabel, SymPoly]] = []
    for k in range(1, q + 1):
        g = relation_element(params, k, q)
        rem = w - sum(g)
        if rem < 0:
            continue
        for mu in partitions_at_most(rem, q):
            out.append(((k, mu), msym_product(q, mu, g)))
    return tuple(out)


def _encode(terms: FrozenSet[Partition], index: Dict[Partition, int], length: int) -> F2Vector:
    return F2Vector.from_support(length, (index[lam] for lam in terms))


def ideal_slice(params: MoravaParams, q: int, w: int) -> List[F2Vector]:
    """Weight-w slice of the relation ideal, as vectors over the canonical
    partition basis of the slice."""
    basis = partitions_at_most(w, q)
    index = {lam: i for i, lam in enumerate(basis)}
    return [_encode(poly.terms, index, len(basis)) for _, poly in _ideal_products(params, q, w)]


class QuotientReport(NamedTuple):
    slice_dim: int
    ideal_rank: int
    quotient_dim: int


def quotient_report(params: MoravaParams, q: int, w: int) -> QuotientReport:
    """Dimensions of the weight-w slice, its ideal part, and the quotient."""
    basis = partitions_at_most(w, q)
    vectors = ideal_slice(params, q, w)
    ideal_rank = rank(F2Matrix.from_row_vectors(len(basis), vectors))
    return QuotientReport(len(basis), ideal_rank, len(basis) - ideal_rank)


def reduce_to_canonical(
    params: MoravaParams, q: int, p: SymPoly
) -> Tuple[SymPoly, Tuple[IdealLabel, ...]]:
    """Normal form of a homogeneous polynomial modulo the relation ideal.

    Returns (canonical part, certificate): the canonical part is supported
    on canonical partitions only and is independent of how the ideal slice
    was spanned; the certificate lists the labelled generator products that
    sum to the ideal part. Elimination pivots on non-canonical coordinates
    first, which is what makes the residue canonical.
    """
    if p.q != q:
        raise ValueError("variable count mismatch")
    if not p.is_homogeneous():
        raise ValueError("input must be homogeneous")
    if not p.terms:
        return SymPoly.zero(q), ()
    w = p.weight()
    basis = partitions_at_most(w, q)
    index = {lam: i for i, lam in enumerate(basis)}
    noncanon = [lam for lam in basis if not is_canonical(params, lam)]
    canon = [lam for lam in basis if is_canonical(params, lam)]
    order = noncanon + canon
    pos = {lam: i for i, lam in enumerate(order)}

    def encode_permuted(terms: FrozenSet[Partition]) -> int:
        bits = 0
        for lam in terms:
            bits |= 1 << pos[lam]
        return bits

    products = _ideal_products(params, q, w)
    ech = Echelon()
    for _, poly in products:
        ech.add(encode_permuted(poly.terms))
    residue = ech.reduce(encode_permuted(p.terms))
    residue_terms = frozenset(order[i] for i in range(len(order)) if (residue >> i) & 1)
    if any(not is_canonical(params, lam) for lam in residue_terms):
        raise ArithmeticError(
            f"leading-term ideal does not cover weight {w} at q={q}, n={params.n}"
        )
    canonical_part = SymPoly(q, residue_terms)

    ideal_part = p.terms ^ residue_terms
    vectors = [_encode(poly.terms, index, len(basis)) for _, poly in products]
    certificate = member(vectors, _encode(ideal_part, index, len(basis)))
    if certificate is None:
        raise ArithmeticError("residue decomposition lost track of the ideal part")
    labels = tuple(products[i][0] for i in certificate)
    return canonical_part, labels
