from itertools import permutations, product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkz.errors import BadParameter, NotSquare, ZeroInverse
from gkz.field import (
    FieldScalar,
    all_vectors,
    batched_det,
    det_and_inverse,
    encode,
    is_prime,
    kernel_basis,
    rank,
    row_reduce,
    scalar_inverse,
)

PRIMES = (2, 3, 5, 7)


def cofactor_det(m, p):
    """Leibniz expansion: the independent determinant oracle."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= int(m[i][perm[i]])
        total += term
    return total % p


def test_is_prime_small():
    assert [k for k in range(20) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("p", PRIMES)
def test_scalar_arithmetic_exhaustive(p):
    for a, b in product(range(p), repeat=2):
        x, y = FieldScalar(a, p), FieldScalar(b, p)
        assert (x + y).value == (a + b) % p
        assert (x - y).value == (a - b) % p
        assert (x * y).value == (a * b) % p
        if b:
            assert ((x / y) * y).value == a
        else:
            with pytest.raises(ZeroInverse):
                x / y


@pytest.mark.parametrize("p", PRIMES)
def test_scalar_inverse_brute_force(p):
    for a in range(1, p):
        inv = [b for b in range(p) if a * b % p == 1]
        assert scalar_inverse(a, p) == inv[0]
        assert scalar_inverse(FieldScalar(a, p)) == inv[0]
    with pytest.raises(ZeroInverse):
        scalar_inverse(0, p)


def test_scalar_rejects_composite_and_mixed_moduli():
    with pytest.raises(BadParameter):
        FieldScalar(1, 4)
    with pytest.raises(BadParameter):
        FieldScalar(1, 3) + FieldScalar(1, 5)


def test_scalar_examples():
    assert FieldScalar(2, 3) + FieldScalar(2, 3) == 1
    assert scalar_inverse(3, 7) == 5
    assert str(FieldScalar(7, 5)) == "2"


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_determinants_exhaustive(p, n):
    mats = all_vectors(p, n * n).reshape(-1, n, n)
    expected = np.array([cofactor_det(m, p) for m in mats])
    assert np.array_equal(batched_det(mats, p), expected)
    # the single-matrix routine on every matrix for the small cases, a stride otherwise
    step = 1 if len(mats) <= 512 else 37
    for m, d in zip(mats[::step], expected[::step]):
        det, inv = det_and_inverse(m, p)
        assert det == d
        if d:
            assert np.array_equal(m @ inv % p, np.eye(n, dtype=int))
        else:
            assert inv is None


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3)])
def test_inverse_matches_brute_force_search(p, n):
    mats = all_vectors(p, n * n).reshape(-1, n, n)
    eye = np.eye(n, dtype=int)
    for m in mats[:: max(1, len(mats) // 60)]:
        candidates = [c for c in mats if np.array_equal(m @ c % p, eye)]
        _, inv = det_and_inverse(m, p)
        if candidates:
            assert len(candidates) == 1 and np.array_equal(inv, candidates[0])
        else:
            assert inv is None


def test_det_rejects_non_square():
    with pytest.raises(NotSquare):
        det_and_inverse(np.zeros((2, 3), dtype=int), 3)


def test_row_reduce_examples():
    r, rk, piv = row_reduce([[1, 2], [2, 1]], 3)
    assert rk == 1 and piv == (0,)
    assert r.tolist() == [[1, 2], [0, 0]]
    assert rank(np.eye(3, dtype=int), 5) == 3


matrices = st.integers(1, 4).flatmap(
    lambda rows: st.integers(1, 4).flatmap(
        lambda cols: st.sampled_from(PRIMES).flatmap(
            lambda p: st.tuples(
                st.just(p),
                st.lists(st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows),
            )
        )
    )
)


@given(matrices)
def test_rref_properties(pm):
    p, m = pm
    m = np.array(m)
    r, rk, piv = row_reduce(m, p)
    assert rk == len(piv)
    for i, c in enumerate(piv):
        col = r[:, c]
        assert col[i] == 1 and col.sum() % p == 1 and np.count_nonzero(col) == 1
    assert not r[rk:].any()
    # same row space: rank of the stack does not grow
    assert rank(np.vstack([m, r[:rk]]), p) == rk


@given(matrices)
def test_kernel_basis_is_exact(pm):
    p, m = pm
    m = np.array(m)
    k = kernel_basis(m, p)
    assert k.shape[0] == m.shape[1] - rank(m, p)
    assert not (m @ k.T % p).any()
    if len(k):
        assert rank(k, p) == len(k)


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2), (5, 2)])
def test_all_vectors_order_and_encoding(p, n):
    v = all_vectors(p, n)
    assert len(v) == p**n
    assert [tuple(x) for x in v] == sorted(tuple(x) for x in v)
    assert np.array_equal(encode(v, p), np.arange(p**n))
