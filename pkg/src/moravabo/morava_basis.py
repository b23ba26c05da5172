"""Explicit basis of the reduced Morava K-theory of BO(q) and MO(q).

Basis monomials are products of classes b_{2i} with 0 < i < 2^n and
c_{4j} with j >= 2^n. A b contributes 1 and a c contributes 2 to the
width of a monomial; width exactly q picks out K(n)-tilde of MO(q),
width up to q gives BO(q). Monomials are stored as the two index
multisets; c_{4j} is represented by b_{2j}^2 in ordinary homology but is
not itself a product, so no product structure is implied here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .qn_action import MoravaParams


@dataclass(frozen=True)
class BCMonomial:
    """Product of b_{2i} (indices in b_part) and c_{4j} (indices in c_part).

    The empty monomial is the coalgebra unit; enumeration never emits it.
    """

    b_part: Tuple[int, ...]
    c_part: Tuple[int, ...]

    def __post_init__(self):
        for part in (self.b_part, self.c_part):
            if any(i < 1 for i in part):
                raise ValueError("indices must be positive")
            if any(a > b for a, b in zip(part, part[1:])):
                raise ValueError("indices must be sorted nondecreasing")

    def validate_for(self, params: MoravaParams) -> "BCMonomial":
        """Check the height-dependent index bounds; returns self."""
        bound = params.b_index_bound
        if any(i >= bound for i in self.b_part):
            raise ValueError(f"b-index must be < 2^n = {bound}")
        if any(j < bound for j in self.c_part):
            raise ValueError(f"c-index must be >= 2^n = {bound}")
        return self

    @property
    def degree(self) -> int:
        return 2 * sum(self.b_part) + 4 * sum(self.c_part)

    @property
    def width(self) -> int:
        return len(self.b_part) + 2 * len(self.c_part)

    @property
    def is_unit(self) -> bool:
        return not self.b_part and not self.c_part

    def sort_key(self):
        return (self.width, self.b_part, self.c_part)

    def __mul__(self, other: "BCMonomial") -> "BCMonomial":
        return BCMonomial(
            tuple(sorted(self.b_part + other.b_part)),
            tuple(sorted(self.c_part + other.c_part)),
        )

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        factors = [f"b{2 * i}" for i in self.b_part] + [f"c{4 * j}" for j in self.c_part]
        return "*".join(factors)


UNIT = BCMonomial((), ())


def _bounded_parts(total: int, k: int, lo: int, hi: int) -> Iterator[Tuple[int, ...]]:
    """Nondecreasing k-tuples with entries in [lo, hi] summing to total."""
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(lo, min(hi, total) + 1):
        if first * k > total:
            break
        for rest in _bounded_parts(total - first, k - 1, first, hi):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_basis(
    params: MoravaParams, q: int, d: int, exact: bool
) -> Tuple[BCMonomial, ...]:
    """All basis monomials of degree d and width q (exact) or 1..q.

    Odd d yields the empty tuple: the theory is concentrated in even
    degrees. Output is sorted by (width, b_part, c_part).
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if d <= 0 or d % 2:
        return ()
    bound = params.b_index_bound
    found: List[BCMonomial] = []
    widths = (q,) if exact else range(1, q + 1)
    for w in widths:
        for m_count in range(w // 2 + 1):
            k = w - 2 * m_count
            for c_part in _bounded_parts_any_total(m_count, bound, d // 4):
                rem = d - 4 * sum(c_part)
                if rem < 0 or rem % 2:
                    continue
                for b_part in _bounded_parts(rem // 2, k, 1, bound - 1):
                    found.append(BCMonomial(b_part, c_part))
    return tuple(sorted(found, key=BCMonomial.sort_key))


def _bounded_parts_any_total(k: int, lo: int, budget: int) -> Iterator[Tuple[int, ...]]:
    """Nondecreasing k-tuples with entries >= lo and sum <= budget."""
    if k == 0:
        yield ()
        return
    for first in range(lo, budget + 1):
        for rest in _bounded_parts_any_total(k - 1, first, budget - first):
            yield (first,) + rest


def poincare_counts(
    params: MoravaParams, q: int, max_degree: int, exact: bool
) -> Dict[int, int]:
    """Basis counts for every even degree 2..max_degree, zeros included."""
    return {
        d: len(enumerate_basis(params, q, d, exact))
        for d in range(2, max_degree + 1, 2)
    }
