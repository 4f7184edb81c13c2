import numpy as np
import pytest

from gkz import constructions as C
from gkz.algebra import Algebra
from gkz.engine import brute_force_units
from gkz.errors import DimensionMismatch, NonUnitalAlgebra, NotAUnit, ValidationError

KNOWN_UNIT_COUNTS = [
    (lambda: C.function_algebra(3, 2), 4),
    (lambda: C.field_extension(3, 2), 8),
    (lambda: C.field_extension(3, 3), 26),
    (lambda: C.field_extension(2, 2), 3),
    (lambda: C.dual_numbers(3), 6),
    (lambda: C.group_algebra(3, C.cyclic_group_table(3)), 18),
    (lambda: C.group_algebra(3, C.cyclic_group_table(2)), 4),
    (lambda: C.matrix_algebra(2, 2), 6),
    (lambda: C.matrix_algebra(3, 2), 48),
    (lambda: C.upper_triangular(3, 2), 12),
    (lambda: C.function_algebra(5, 4), 256),
    (lambda: C.unitisation(C.upper_triangular(3, 3, strict=True)), 54),
]


@pytest.mark.parametrize("make,count", KNOWN_UNIT_COUNTS)
def test_unit_counts(make, count):
    a = make()
    assert a.is_valid()
    assert a.unit_count == count


def small_algebras():
    out = [make() for make, _ in KNOWN_UNIT_COUNTS]
    return [a for a in out if a.size <= 81]


@pytest.mark.parametrize("a", small_algebras(), ids=lambda a: a.name)
def test_units_and_inverses_against_brute_force(a):
    """Determinant-based units and inverses agree with a search over all pairs."""
    brute = brute_force_units(a)
    assert np.array_equal(brute, a.units)
    elems = a.elements
    one = a.one()
    for u in a.units:
        inv = a.inverse(u)
        matches = [y for y in elems if np.array_equal(a.mul(u, y), one) and np.array_equal(a.mul(y, u), one)]
        assert len(matches) == 1 and np.array_equal(matches[0], inv)


@pytest.mark.parametrize("a", small_algebras(), ids=lambda a: a.name)
def test_multiplication_is_bilinear_and_associative_on_elements(a):
    rng = np.random.default_rng(0)
    x, y, z = (a.elements[rng.integers(0, a.size, 40)] for _ in range(3))
    assert np.array_equal(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z)))
    assert np.array_equal(a.mul(x, (y + z) % a.p), (a.mul(x, y) + a.mul(x, z)) % a.p)
    assert np.array_equal(a.left_matrix(x) @ y[..., None] % a.p, a.mul(x, y)[..., None])
    assert np.array_equal(a.right_matrix(y) @ x[..., None] % a.p, a.mul(x, y)[..., None])


def test_validation_reports_violations():
    sc = np.zeros((2, 2, 2), dtype=int)
    sc[0, 0, 0] = 1
    sc[1, 1, 1] = 1
    sc[1, 0, 1] = 1
    bad = Algebra(3, sc, [1, 1])
    problems = bad.validate()
    assert any("associativity" in s for s in problems)
    assert any("unity" in s for s in problems)
    with pytest.raises(ValidationError):
        bad.check()


def test_basic_errors():
    with pytest.raises(DimensionMismatch):
        Algebra(3, np.zeros((2, 2, 3), dtype=int))
    with pytest.raises(NonUnitalAlgebra):
        C.null_algebra(3, 2).one()
    with pytest.raises(NotAUnit):
        C.function_algebra(3, 2).inverse([1, 0])


def test_sum_of_units_and_span():
    assert C.function_algebra(3, 2).sum_of_units_bound() == 2
    assert C.field_extension(3, 2).sum_of_units_bound() == 1
    span, full = C.function_algebra(2, 3).span_of_units()
    assert not full and span.dim == 1
    assert C.function_algebra(2, 3).sum_of_units_bound() is None


def test_spectrum_examples():
    a = C.function_algebra(3, 2)
    assert a.spectrum([0, 1]) == [0, 1]
    assert a.resolvent([0, 1]) == [2]
    g = C.field_extension(3, 2)
    t = g.basis_vector(1)
    assert g.spectrum(t) == []
    assert np.array_equal(g.inverse(t), 2 * t % 3)
    assert g.spectrum_empty_mask().sum() == 9 - 3


def test_idempotents_of_function_algebra_are_indicators():
    a = C.function_algebra(3, 3)
    idem = {tuple(v) for v in a.idempotents()}
    assert idem == {tuple(v) for v in np.array(np.meshgrid(*[[0, 1]] * 3, indexing="ij")).reshape(3, -1).T}
