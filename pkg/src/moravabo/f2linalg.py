"""Dense exact linear algebra over GF(2).

Vectors and matrix rows are bit-packed into Python ints (bit ``c`` of a row
is the entry in column ``c``), so every row operation is a single wide XOR.
Elimination pivots deterministically on the first nonzero column at the
lowest row index, which keeps ranks, kernel bases and membership
certificates reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class F2Vector:
    """Fixed-length vector over GF(2) with entries packed into an int."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("vector length must be nonnegative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("set bits beyond vector length")

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> "F2Vector":
        bits = 0
        for i, e in enumerate(entries):
            if e & 1:
                bits |= 1 << i
        return cls(len(entries), bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "F2Vector":
        bits = 0
        for i in support:
            bits ^= 1 << i
        return cls(length, bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"index {i} out of range for length {self.length}")
        return (self.bits >> i) & 1

    def __xor__(self, other: "F2Vector") -> "F2Vector":
        if self.length != other.length:
            raise ValueError("vector length mismatch")
        return F2Vector(self.length, self.bits ^ other.bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.bits >> i) & 1)

    def entries(self) -> List[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]


@dataclass(frozen=True)
class F2Matrix:
    """Dense GF(2) matrix; ``row_bits[r]`` packs row ``r`` (bit c = entry (r, c))."""

    rows: int
    cols: int
    row_bits: Tuple[int, ...]

    def __post_init__(self):
        if len(self.row_bits) != self.rows:
            raise ValueError("row count does not match row data")
        for r in self.row_bits:
            if r < 0 or r >> self.cols:
                raise ValueError("row entries beyond column count")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "F2Matrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "F2Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        packed = tuple(F2Vector.from_entries(r).bits for r in rows)
        return cls(len(packed), cols, packed)

    @classmethod
    def from_row_vectors(cls, cols: int, vectors: Sequence[F2Vector]) -> "F2Matrix":
        for v in vectors:
            if v.length != cols:
                raise ValueError("vector length mismatch")
        return cls(len(vectors), cols, tuple(v.bits for v in vectors))

    def row(self, r: int) -> F2Vector:
        return F2Vector(self.cols, self.row_bits[r])

    def entry(self, r: int, c: int) -> int:
        if not 0 <= c < self.cols:
            raise IndexError(f"column {c} out of range")
        return (self.row_bits[r] >> c) & 1

    def transpose(self) -> "F2Matrix":
        cols = []
        for c in range(self.cols):
            bits = 0
            for r in range(self.rows):
                if (self.row_bits[r] >> c) & 1:
                    bits |= 1 << r
            cols.append(bits)
        return F2Matrix(self.cols, self.rows, tuple(cols))

    def mul_vec(self, v: F2Vector) -> F2Vector:
        """Matrix-vector product m*v; v has length cols, result length rows."""
        if v.length != self.cols:
            raise ValueError("vector length mismatch")
        bits = 0
        for r, row in enumerate(self.row_bits):
            if (row & v.bits).bit_count() & 1:
                bits |= 1 << r
        return F2Vector(self.rows, bits)

    @cached_property
    def _rref(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Reduced row echelon form: (reduced nonzero rows, pivot columns)."""
        work = list(self.row_bits)
        pivots: List[int] = []
        pivot_row = 0
        for col in range(self.cols):
            mask = 1 << col
            found = -1
            for r in range(pivot_row, len(work)):
                if work[r] & mask:
                    found = r
                    break
            if found < 0:
                continue
            work[pivot_row], work[found] = work[found], work[pivot_row]
            for r in range(len(work)):
                if r != pivot_row and work[r] & mask:
                    work[r] ^= work[pivot_row]
            pivots.append(col)
            pivot_row += 1
            if pivot_row == len(work):
                break
        return tuple(work[: len(pivots)]), tuple(pivots)


def rank(m: F2Matrix) -> int:
    """GF(2) rank (dimension of the row space) by exact elimination."""
    return len(m._rref[1])


def kernel_basis(m: F2Matrix) -> List[F2Vector]:
    """Basis of the right kernel {v : m*v = 0}, one vector per free column.

    Vectors are ordered by their free column index; with the deterministic
    pivoting this makes kernel bases reproducible.
    """
    reduced, pivots = m._rref
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for i, pcol in enumerate(pivots):
            if (reduced[i] >> free) & 1:
                bits |= 1 << pcol
        basis.append(F2Vector(m.cols, bits))
    return basis


def member(space: Sequence[F2Vector], v: F2Vector) -> Optional[Tuple[int, ...]]:
    """Test membership of v in the span of ``space``.

    Returns None when v is not in the span; otherwise the indices of a
    subset of ``space`` summing to v (the certificate; empty for v = 0).
    """
    length = v.length
    for s in space:
        if s.length != length:
            raise ValueError("vector length mismatch")
    # Incremental elimination; each echelon row remembers, in ``comb``, which
    # input vectors were XORed into it.
    echelon: List[Tuple[int, int, int]] = []  # (pivot mask, row bits, comb bits)
    for idx, s in enumerate(space):
        bits, comb = s.bits, 1 << idx
        for pmask, rbits, rcomb in echelon:
            if bits & pmask:
                bits ^= rbits
                comb ^= rcomb
        if bits:
            echelon.append((bits & (-bits), bits, comb))
    bits, comb = v.bits, 0
    for pmask, rbits, rcomb in echelon:
        if bits & pmask:
            bits ^= rbits
            comb ^= rcomb
    if bits:
        return None
    return tuple(i for i in range(len(space)) if (comb >> i) & 1)


def quotient_dim(space_dim: int, sub: Sequence[F2Vector]) -> int:
    """Dimension of the quotient of an ambient space by the span of ``sub``."""
    for s in sub:
        if s.length != space_dim:
            raise ValueError("vector length mismatch")
    m = F2Matrix.from_row_vectors(space_dim, list(sub))
    return space_dim - rank(m)


class Echelon:
    """Incrementally built row space with lowest-set-bit pivoting.

    Insertion order is the only source of nondeterminism, so callers that
    feed rows in a canonical order get canonical residues.
    """

    def __init__(self):
        self._rows: List[Tuple[int, int]] = []  # (pivot mask, row bits)

    def reduce(self, bits: int) -> int:
        """Residue of ``bits`` after XORing away every matching pivot."""
        for pmask, rbits in self._rows:
            if bits & pmask:
                bits ^= rbits
        return bits

    def add(self, bits: int) -> int:
        """Reduce and, if independent, insert; returns the residue."""
        residue = self.reduce(bits)
        if residue:
            self._rows.append((residue & (-residue), residue))
        return residue

    @property
    def rank(self) -> int:
        return len(self._rows)
