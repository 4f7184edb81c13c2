import random
from fractions import Fraction

import pytest

from gkz.engine import check_witness
from gkz.errors import BadParameter
from gkz.field import FieldScalar
from gkz.symbolic import (
    Dirac,
    Laurent,
    augmentation,
    dirac_convolve,
    dirac_counterexample,
    dirac_is_unit,
    dirac_lambda_phi,
    laurent_counterexample,
    laurent_is_unit,
    laurent_mul,
    quadratic_has_no_real_root,
)


def L(terms, modulus=None):
    return Laurent(terms, modulus)


def D(terms):
    return Dirac(terms)


def test_laurent_examples():
    x = Laurent.monomial(1)
    assert laurent_mul(x, x) == Laurent.monomial(2)
    assert laurent_mul(L({0: 1, 1: 1}), L({0: 1, 1: -1})) == L({0: 1, 2: -1})
    assert laurent_mul(Laurent.monomial(-1), x) == Laurent.one()
    assert laurent_is_unit(L({-2: 3}))
    assert not laurent_is_unit(L({0: 1, 1: 1}))
    assert not laurent_is_unit(L({}))


def test_dirac_examples():
    assert dirac_convolve(Dirac.delta(1), Dirac.delta(1)) == Dirac.delta(2)
    assert dirac_convolve(D({0: 1, 1: 1}), Dirac.delta(-1)) == D({-1: 1, 0: 1})
    a = Fraction(3, 7)
    assert dirac_convolve(Dirac.delta(a), Dirac.delta(0)) == Dirac.delta(a)
    assert dirac_is_unit(Dirac.delta(Fraction(1, 2), 5))
    assert not dirac_is_unit(D({0: 1, 1: 1}))
    assert not dirac_is_unit(D({}))
    assert dirac_lambda_phi(Dirac.delta(1)) == 2
    assert dirac_lambda_phi(Dirac.delta(0)) == 1
    assert dirac_lambda_phi(Dirac.delta(2, 3)) == 15
    assert dirac_lambda_phi(Dirac.delta(3, 7)) == 70


def test_augmentation_examples():
    assert augmentation(Dirac.delta(0)) == 1
    assert augmentation(D({1: 2, 2: 3})) == 5


def random_laurent(rng, modulus=None):
    return L({rng.randint(-5, 5): rng.randint(-4, 4) for _ in range(rng.randint(0, 4))}, modulus)


def random_dirac(rng):
    return D({Fraction(rng.randint(-6, 6), rng.randint(1, 3)): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
              for _ in range(rng.randint(0, 4))})


@pytest.mark.parametrize("make", [random_laurent, lambda r: random_laurent(r, 5), random_dirac])
def test_models_are_commutative_associative_and_augmentation_is_multiplicative(make):
    rng = random.Random(11)
    for _ in range(1000):
        s, t, u = make(rng), make(rng), make(rng)
        assert s * t == t * s
        assert (s * t) * u == s * (t * u)
        assert s * (t + u) == s * t + s * u
        assert augmentation(s * t) == augmentation(s) * augmentation(t)


def test_unit_sets_closed_under_products_and_inverses():
    rng = random.Random(3)
    for _ in range(200):
        a = Dirac.delta(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), rng.choice([1, -2, Fraction(1, 3)]))
        b = Dirac.delta(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), rng.choice([1, 5, Fraction(-7, 2)]))
        assert (a * b).is_unit()
        assert a * a.inverse() == Dirac.delta(0)
        x = Laurent.monomial(rng.randint(-9, 9), rng.randint(1, 4), 5)
        assert x * x.inverse() == Laurent.one(5)


def test_laurent_counterexample_over_q():
    w = laurent_counterexample(2)
    assert w.values == (2, 1)
    res = w.validate()
    assert res.ok and len(w.sample_units) >= 1000
    exps = {k for u in w.sample_units for k in u.terms}
    assert set(range(-10, 11)) <= exps


def test_laurent_counterexample_over_gf5():
    w = laurent_counterexample(2, modulus=5)
    assert w.values == (FieldScalar(2, 5), FieldScalar(1, 5))
    assert w.validate().ok


@pytest.mark.parametrize("c", [0, 1])
def test_laurent_counterexample_needs_c_outside_0_1(c):
    with pytest.raises(BadParameter):
        laurent_counterexample(c)
    with pytest.raises(BadParameter):
        laurent_counterexample(c + 5, modulus=5)


def test_dirac_counterexample():
    w = dirac_counterexample()
    assert w.values == (5, 4)
    assert w.functional(w.one) == 1
    assert w.nonvanishing()
    assert w.validate().ok and len(w.sample_units) >= 1000
    near = check_witness(w.functional, w.mul, w.one, w.sample_units, (Dirac.delta(1), Dirac.delta(2)))
    assert not near.ok and near.values == (10, 10)


def test_quadratic_root_test():
    assert quadratic_has_no_real_root(1, 0, 1)
    assert not quadratic_has_no_real_root(-1, 0, 1)
    assert not quadratic_has_no_real_root(1, 2, 1)
    assert quadratic_has_no_real_root(3, 0, 0)
    assert not quadratic_has_no_real_root(0, 1, 0)


def test_symbolic_records_serialise():
    d = dirac_counterexample().to_dict()
    assert d["model"] == "dirac" and d["values"] == ["5", "4"] and d["nonvanishing"] is True
    d = laurent_counterexample(2, modulus=5).to_dict()
    assert d["model"] == "laurent" and d["values"] == ["2", "1"]
