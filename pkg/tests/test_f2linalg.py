import itertools
import random

import pytest

from moravabo.f2linalg import (
    Echelon,
    F2Matrix,
    F2Vector,
    kernel_basis,
    member,
    quotient_dim,
    rank,
)


def brute_rank(rows, cols):
    """Oracle: rank = log2 of the number of distinct row combinations."""
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return len(span).bit_length() - 1


def random_matrix(rng, rows, cols):
    bits = tuple(rng.getrandbits(cols) for _ in range(rows))
    return F2Matrix(rows, cols, bits)


def test_rank_examples():
    assert rank(F2Matrix.identity(2)) == 2
    assert rank(F2Matrix.zero(3, 3)) == 0
    assert rank(F2Matrix.from_rows([[1, 1], [1, 1]])) == 1


def test_rank_against_brute_force():
    rng = random.Random(0)
    for _ in range(200):
        r, c = rng.randint(0, 5), rng.randint(1, 6)
        m = random_matrix(rng, r, c)
        assert rank(m) == brute_rank(m.row_bits, c)


def test_rank_transpose_invariant():
    rng = random.Random(1)
    for _ in range(100):
        m = random_matrix(rng, rng.randint(0, 6), rng.randint(1, 6))
        assert rank(m) == rank(m.transpose())


def test_kernel_examples():
    assert kernel_basis(F2Matrix.identity(2)) == []
    (v,) = kernel_basis(F2Matrix.from_rows([[1, 1]]))
    assert v.entries() == [1, 1]
    assert len(kernel_basis(F2Matrix.zero(2, 3))) == 3


def test_kernel_rank_nullity_and_annihilation():
    rng = random.Random(2)
    for _ in range(100):
        m = random_matrix(rng, rng.randint(0, 5), rng.randint(1, 7))
        basis = kernel_basis(m)
        assert len(basis) + rank(m) == m.cols
        for v in basis:
            assert m.mul_vec(v).is_zero()
        # kernel vectors are independent
        assert rank(F2Matrix.from_row_vectors(m.cols, basis)) == len(basis)


def test_member_examples():
    e1 = F2Vector.from_entries([1, 0])
    e2 = F2Vector.from_entries([0, 1])
    both = F2Vector.from_entries([1, 1])
    assert member([e1], e1) == (0,)
    assert member([e1], e2) is None
    cert = member([both, e2], e1)
    assert cert == (0, 1)  # (1,1) + (0,1) = (1,0)


def test_member_certificate_reconstructs():
    rng = random.Random(3)
    for _ in range(100):
        cols = rng.randint(1, 8)
        space = [F2Vector(cols, rng.getrandbits(cols)) for _ in range(rng.randint(0, 6))]
        # every subset sum is a member and the certificate must reproduce it
        for _ in range(5):
            picks = [v for v in space if rng.random() < 0.5]
            target = F2Vector(cols)
            for v in picks:
                target = target ^ v
            cert = member(space, target)
            assert cert is not None
            acc = F2Vector(cols)
            for i in cert:
                acc = acc ^ space[i]
            assert acc == target


def test_member_detects_non_members():
    e1 = F2Vector.from_entries([1, 0, 0])
    e2 = F2Vector.from_entries([0, 1, 0])
    assert member([e1, e2], F2Vector.from_entries([0, 0, 1])) is None
    assert member([e1, e2], F2Vector.from_entries([1, 1, 1])) is None


def test_member_length_mismatch():
    with pytest.raises(ValueError):
        member([F2Vector(2, 0b11)], F2Vector(3, 0b1))


def test_quotient_dim_examples():
    assert quotient_dim(2, []) == 2
    assert quotient_dim(2, [F2Vector.from_entries([1, 0]), F2Vector.from_entries([0, 1])]) == 0
    dup = F2Vector.from_entries([1, 1, 0])
    assert quotient_dim(3, [dup, dup]) == 2


def test_vector_validation_and_access():
    v = F2Vector.from_entries([1, 0, 1])
    assert (v[0], v[1], v[2]) == (1, 0, 1)
    assert v.support() == (0, 2)
    with pytest.raises(IndexError):
        v[3]
    with pytest.raises(ValueError):
        F2Vector(2, 0b100)
    with pytest.raises(ValueError):
        F2Vector(2, 0b1) ^ F2Vector(3, 0b1)


def test_matrix_validation():
    with pytest.raises(ValueError):
        F2Matrix(2, 2, (0,))
    with pytest.raises(ValueError):
        F2Matrix(1, 2, (0b100,))


def test_echelon_residues_are_canonical():
    ech = Echelon()
    assert ech.add(0b011)
    assert ech.add(0b101)
    assert ech.rank == 2
    assert ech.reduce(0b011) == 0
    assert ech.reduce(0b110) == 0  # sum of the two rows
    assert ech.add(0b110) == 0
    assert ech.rank == 2


def test_subset_sums_stay_in_span():
    rng = random.Random(4)
    space = [F2Vector(5, rng.getrandbits(5)) for _ in range(4)]
    for k in range(len(space) + 1):
        for combo in itertools.combinations(range(len(space)), k):
            acc = F2Vector(5)
            for i in combo:
                acc = acc ^ space[i]
            assert member(space, acc) is not None
