from functools import lru_cache

import pytest

from moravabo.bo_homology import (
    BMonomial,
    enumerate_BO,
    enumerate_M,
    iter_monomials,
    slice_basis,
    sw_correspondence,
    sw_degree,
)


@lru_cache(maxsize=None)
def partition_count(d, k):
    """Oracle: number of partitions of d into exactly k positive parts."""
    if k == 0:
        return 1 if d == 0 else 0
    if d < k:
        return 0
    return partition_count(d - 1, k - 1) + partition_count(d - k, k)


def mono(*indices):
    return BMonomial(tuple(indices))


def test_bmonomial_validation():
    m = mono(1, 2, 2)
    assert m.degree == 5 and m.length == 3
    assert str(m) == "b1*b2*b2"
    with pytest.raises(ValueError):
        BMonomial(())
    with pytest.raises(ValueError):
        mono(2, 1)
    with pytest.raises(ValueError):
        mono(0, 1)


def test_enumerate_M_examples():
    for d in (1, 5, 9):
        assert list(enumerate_M(1, d)) == [mono(d)]
    assert list(enumerate_M(2, 4)) == [mono(1, 3), mono(2, 2)]
    assert list(enumerate_M(3, 5)) == [mono(1, 1, 3), mono(1, 2, 2)]
    assert list(enumerate_M(2, 1)) == []  # d < q


def test_enumerate_BO_examples():
    assert list(enumerate_BO(2, 2)) == [mono(2), mono(1, 1)]
    assert list(enumerate_BO(1, 3)) == [mono(3)]
    assert list(enumerate_BO(3, 3)) == [mono(3), mono(1, 2), mono(1, 1, 1)]


def test_enumeration_matches_partition_counter():
    for q in range(1, 7):
        for d in range(0, 61):
            assert len(enumerate_M(q, d)) == partition_count(d, q)


def test_bo_sizes_monotone_in_q():
    for d in range(1, 31):
        sizes = [len(enumerate_BO(q, d)) for q in range(1, 6)]
        assert sizes == sorted(sizes)


def test_slice_basis_degenerate():
    assert len(slice_basis(3, 0, False)) == 0
    assert len(slice_basis(3, -2, True)) == 0


def test_slice_index_lookup():
    s = enumerate_BO(3, 6)
    for i, m in enumerate(s):
        assert s.index(m) == i


def test_sw_examples():
    assert sw_correspondence(mono(1, 2, 2), 3) == (1, 1, 0)
    assert sw_degree((1, 1, 0)) == 5
    assert sw_correspondence(mono(7), 1) == (7,)
    assert sw_correspondence(mono(3, 3), 2) == (3, 0)
    assert sw_degree((3, 0)) == 6


def test_sw_arity_error():
    with pytest.raises(ValueError):
        sw_correspondence(mono(1, 2), 3)


def exponent_vectors(q, d):
    """Oracle: vectors (e_q, ..., e_1) with e_q >= 1 and sum k*e_k = d."""
    def rec(k, remaining):
        # exponents for w_k down to w_1
        if k == 0:
            if remaining == 0:
                yield ()
            return
        lo = 1 if k == q else 0
        for e in range(lo, remaining // k + 1):
            for rest in rec(k - 1, remaining - k * e):
                yield (e,) + rest
    return set(rec(q, d))


def test_sw_is_degree_preserving_bijection():
    for q in range(1, 5):
        for d in range(q, 41):
            images = set()
            for m in enumerate_M(q, d):
                exps = sw_correspondence(m, q)
                assert exps[0] >= 1
                assert sw_degree(exps) == d
                # round trip: partial sums recover the monomial
                indices = []
                total = 0
                for e in exps:
                    total += e
                    indices.append(total)
                assert mono(*indices) == m
                images.add(exps)
            assert len(images) == len(enumerate_M(q, d))
            assert images == exponent_vectors(q, d)


def test_iter_monomials_orders_by_length_then_lex():
    listed = list(iter_monomials(3, 5, exact_length=False))
    assert listed == sorted(listed, key=lambda m: (m.length, m.indices))
