import numpy as np
import pytest

from gkz import constructions as C
from gkz.corpus import builtin_corpus
from gkz.errors import CapExceeded, NotCommutative, NotPrime
from gkz.ideals import (
    all_ideals,
    all_subspaces,
    closure_witness,
    hyperplane_covector,
    hyperplanes,
    ideal_generated,
    is_ideal,
    is_local,
    jacobson_radical,
    localize_at_prime,
    maximal_one_sided_ideals,
    normalized_covectors,
    prime_ideals,
    radical_from_maximal_ideals,
)
from gkz.subspace import Subspace

UNITAL = [a for a in builtin_corpus() if a.is_unital and a.n <= 4]


@pytest.mark.parametrize("p,n", [(2, 1), (2, 4), (3, 3), (5, 2)])
def test_hyperplane_count_and_normalisation(p, n):
    covs = normalized_covectors(p, n)
    assert len(covs) == (p**n - 1) // (p - 1)
    for c in covs:
        nz = np.nonzero(c)[0]
        assert c[nz[-1]] == 1
    a = C.function_algebra(p, n)
    hs = list(hyperplanes(a))
    assert len(set(hs)) == len(hs)
    for h, c in zip(hs, covs):
        assert h.codim == 1 and np.array_equal(hyperplane_covector(h), c)


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2), (2, 4)])
def test_subspace_enumeration_counts(p, n):
    def gaussian(n, k):
        num = den = 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        return num // den

    subs = all_subspaces(C.function_algebra(p, n))
    assert len(subs) == sum(gaussian(n, k) for k in range(n + 1))
    assert len(set(subs)) == len(subs)


def test_subspace_enumeration_cap():
    with pytest.raises(CapExceeded):
        all_subspaces(C.function_algebra(7, 2))


@pytest.mark.parametrize("a", UNITAL, ids=lambda a: a.name)
def test_jacobson_radical_cross_oracle(a):
    jac = jacobson_radical(a)
    assert jac == radical_from_maximal_ideals(a, "left")
    assert jac == radical_from_maximal_ideals(a, "right")


def test_radical_examples():
    assert jacobson_radical(C.dual_numbers(3)).dim == 1
    assert jacobson_radical(C.group_algebra(3, C.cyclic_group_table(3))).dim == 2
    assert jacobson_radical(C.upper_triangular(3, 2)) == Subspace([[0, 1, 0]], 3, 3)
    assert jacobson_radical(C.matrix_algebra(3, 2)).dim == 0


def test_ideals_of_function_algebra_are_coordinate_subspaces():
    a = C.function_algebra(3, 3)
    ideals = all_ideals(a)
    assert len(ideals) == 8
    for v in ideals:
        assert all(np.count_nonzero(r) == 1 for r in v.basis)


def test_matrix_algebra_one_sided_ideals():
    a = C.matrix_algebra(3, 2)
    assert len(all_ideals(a)) == 2
    # maximal left ideals of M2(F3) correspond to the 4 lines of F3^2
    assert len(maximal_one_sided_ideals(a, "left")) == 4
    assert len(maximal_one_sided_ideals(a, "right")) == 4


def test_ideal_generated_and_closure():
    a = C.function_algebra(3, 3)
    assert ideal_generated(a, [1, 1, 0]) == Subspace([[1, 0, 0], [0, 1, 0]], 3, 3)
    w = closure_witness(a, Subspace.full(3, 3))
    assert len(w) == 3
    assert is_ideal(a, ideal_generated(a, [[0, 0, 1]]), "left")


def test_primes_and_localisation_of_f3_squared():
    a = C.function_algebra(3, 2)
    primes = prime_ideals(a)
    assert set(primes) == {Subspace([[0, 1]], 3, 2), Subspace([[1, 0]], 3, 2)}
    for pr in primes:
        loc, proj = localize_at_prime(a, pr)
        assert loc.n == 1 and is_local(loc)


def test_localisation_errors():
    with pytest.raises(NotCommutative):
        prime_ideals(C.matrix_algebra(2, 2))
    with pytest.raises(NotPrime):
        localize_at_prime(C.function_algebra(3, 2), Subspace.zero(3, 2))


def test_local_algebras():
    assert is_local(C.dual_numbers(3))
    assert is_local(C.field_extension(3, 2))
    assert not is_local(C.function_algebra(3, 2))
