"""Monomial bases of the reduced mod-2 homology of BO(q).

A class is a product of generators b_i (i >= 1) from BO(1), recorded as a
sorted multiset of indices. Fixing the number of factors at exactly q cuts
out the summand M_q, the homology of the Thom space MO(q); allowing up to q
factors gives all of reduced H_*(BO(q)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterator, Tuple


@dataclass(frozen=True, order=True)
class BMonomial:
    """Product b_{i_1}...b_{i_k} with 0 < i_1 <= ... <= i_k."""

    indices: Tuple[int, ...]

    def __post_init__(self):
        if not self.indices:
            raise ValueError("monomial needs at least one factor")
        if any(i < 1 for i in self.indices):
            raise ValueError("b-indices must be positive")
        if any(a > b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("indices must be sorted nondecreasing")

    @property
    def degree(self) -> int:
        return sum(self.indices)

    @property
    def length(self) -> int:
        return len(self.indices)

    def __str__(self) -> str:
        return "*".join(f"b{i}" for i in self.indices)


@dataclass(frozen=True)
class DegreeSlice:
    """All degree-d monomials of length exactly q (exact_length) or <= q."""

    q: int
    degree: int
    exact_length: bool
    basis: Tuple[BMonomial, ...]

    @cached_property
    def _index(self) -> Dict[BMonomial, int]:
        return {m: i for i, m in enumerate(self.basis)}

    def index(self, m: BMonomial) -> int:
        return self._index[m]

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self) -> Iterator[BMonomial]:
        return iter(self.basis)


def _exact_partitions(d: int, k: int, minpart: int = 1) -> Iterator[Tuple[int, ...]]:
    """Partitions of d into exactly k nondecreasing parts >= minpart, lex order."""
    if k == 0:
        if d == 0:
            yield ()
        return
    for first in range(minpart, d // k + 1):
        for rest in _exact_partitions(d - first, k - 1, first):
            yield (first,) + rest


def iter_monomials(q: int, d: int, exact_length: bool) -> Iterator[BMonomial]:
    """Degree-d monomials in canonical order: by length, then lex on indices."""
    lengths = (q,) if exact_length else range(1, q + 1)
    for k in lengths:
        for parts in _exact_partitions(d, k):
            yield BMonomial(parts)


@lru_cache(maxsize=None)
def enumerate_M(q: int, d: int) -> DegreeSlice:
    """Basis of the degree-d part of M_q (length exactly q); empty for d < q."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return DegreeSlice(q, d, True, tuple(iter_monomials(q, d, True)))


@lru_cache(maxsize=None)
def enumerate_BO(q: int, d: int) -> DegreeSlice:
    """Basis of degree-d reduced homology of BO(q) (lengths 1 through q)."""
    if q < 1 or d < 1:
        raise ValueError("q and d must be >= 1")
    return DegreeSlice(q, d, False, tuple(iter_monomials(q, d, False)))


def slice_basis(q: int, d: int, exact_length: bool) -> DegreeSlice:
    """Shared entry point for the two slice flavours; empty slice for d < 1."""
    if q < 1:
        raise ValueError("q must be >= 1")
    if d < 1:
        return DegreeSlice(q, d, exact_length, ())
    return enumerate_M(q, d) if exact_length else enumerate_BO(q, d)


def sw_correspondence(m: BMonomial, q: int) -> Tuple[int, ...]:
    """Exponent vector (e_q, ..., e_1) of the Stiefel-Whitney monomial
    w_q^{e_q} * ... * w_1^{e_1} matched to a length-q monomial.

    e_q = i_1 and e_{q-t} = i_{t+1} - i_t, so e_q >= 1: the image is exactly
    the ideal generated by w_q, and sum(k * e_k) equals the degree of m.
    """
    if m.length != q:
        raise ValueError(f"monomial has length {m.length}, expected {q}")
    idx = m.indices
    return (idx[0],) + tuple(idx[t + 1] - idx[t] for t in range(q - 1))


def sw_degree(exponents: Tuple[int, ...]) -> int:
    """Cohomological degree of w_q^{e_q} * ... * w_1^{e_1} given (e_q, ..., e_1)."""
    q = len(exponents)
    return sum((q - t) * e for t, e in enumerate(exponents))
