"""The Milnor primitive Q_n on H_*(BO(q); Z/2) and its homology.

Q_n sends b_{2k} to b_{2k+1-2^(n+1)} whenever the target index is positive,
kills every other generator, and extends to products as a derivation. It is
the first differential of the Atiyah-Hirzebruch spectral sequence converging
to K(n)_*, and nothing differentiates after it, so the per-degree Q_n
homology computed here already counts K(n)-module generators.

Generators with odd index are taken to be Q_n-cycles. See README for why
this convention is forced.
"""

from __future__ import annotations

from bisect import insort
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from .bo_homology import BMonomial, slice_basis
from .f2linalg import Echelon, F2Matrix, kernel_basis, rank


@dataclass(frozen=True)
class MoravaParams:
    """Height parameter n of K(n) at the prime 2."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("height n must be >= 1")

    @property
    def shift(self) -> int:
        """Homological degree dropped by Q_n: 2^(n+1) - 1."""
        return 2 ** (self.n + 1) - 1

    @property
    def v_degree(self) -> int:
        """Degree of the periodicity class v_n: 2*(2^n - 1)."""
        return 2 * (2 ** self.n - 1)

    @property
    def b_index_bound(self) -> int:
        """Surviving generators b_{2i} have 0 < i < 2^n."""
        return 2 ** self.n


@dataclass(frozen=True)
class HomologyReport:
    """Q_n homology of one degree slice, with chosen cycle representatives."""

    params: MoravaParams
    q: int
    degree: int
    exact_length: bool
    kernel_dim: int
    image_dim: int
    homology_dim: int
    representatives: Tuple[Tuple[BMonomial, ...], ...]


def qn_on_generator(params: MoravaParams, i: int) -> Optional[int]:
    """Index hit by Q_n on b_i, or None when Q_n kills it."""
    if i < 1:
        raise ValueError("generator index must be positive")
    if i % 2 == 0 and i > params.shift:
        return i - params.shift
    return None


def qn_derivation(params: MoravaParams, m: BMonomial) -> Tuple[BMonomial, ...]:
    """Q_n of a monomial via the Leibniz rule, as a mod-2 sum of monomials.

    Replacing one factor b_i produces the same monomial for every one of the
    mult(i) occurrences, so only odd multiplicities contribute.
    """
    out: Counter = Counter()
    for value, mult in Counter(m.indices).items():
        if mult % 2 == 0:
            continue
        target = qn_on_generator(params, value)
        if target is None:
            continue
        new = list(m.indices)
        new.remove(value)
        insort(new, target)
        out[tuple(new)] += 1
    return tuple(sorted(BMonomial(t) for t, c in out.items() if c % 2))


@lru_cache(maxsize=None)
def qn_matrix(params: MoravaParams, q: int, d: int, exact_length: bool) -> F2Matrix:
    """Matrix of Q_n from the (q, d) slice to the (q, d - shift) slice.

    Row r is the image of the r-th source monomial written over the target
    basis, both slices in canonical monomial order.
    """
    src = slice_basis(q, d, exact_length)
    tgt = slice_basis(q, d - params.shift, exact_length)
    rows = []
    for m in src:
        bits = 0
        for term in qn_derivation(params, m):
            bits |= 1 << tgt.index(term)
        rows.append(bits)
    return F2Matrix(len(src), len(tgt), tuple(rows))


def qn_homology(params: MoravaParams, q: int, d: int, exact_length: bool) -> HomologyReport:
    """Kernel, image and homology of Q_n in one degree slice.

    Cycles come from the slice at d, boundaries from the slice at d + shift.
    Representatives are the kernel basis vectors reduced against the image
    (and against each other), decoded back into monomial combinations.
    """
    src = slice_basis(q, d, exact_length)
    mat = qn_matrix(params, q, d, exact_length)
    cycles = kernel_basis(mat.transpose())
    mat_above = qn_matrix(params, q, d + params.shift, exact_length)
    image_dim = rank(mat_above)

    ech = Echelon()
    for row in mat_above.row_bits:
        ech.add(row)
    reps = []
    for v in cycles:
        residue = ech.add(v.bits)
        if residue:
            combo = tuple(src.basis[i] for i in range(len(src)) if (residue >> i) & 1)
            reps.append(combo)

    kernel_dim = len(cycles)
    homology_dim = kernel_dim - image_dim
    if homology_dim < 0 or len(reps) != homology_dim:
        raise ArithmeticError(
            f"inconsistent homology at (n={params.n}, q={q}, d={d}): "
            f"kernel {kernel_dim}, image {image_dim}, representatives {len(reps)}"
        )
    return HomologyReport(
        params=params,
        q=q,
        degree=d,
        exact_length=exact_length,
        kernel_dim=kernel_dim,
        image_dim=image_dim,
        homology_dim=homology_dim,
        representatives=tuple(reps),
    )
