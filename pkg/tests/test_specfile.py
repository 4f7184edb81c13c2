import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkz import constructions as C
from gkz.corpus import builtin_corpus, random_algebra
from gkz.errors import ParseError, ValidationError
from gkz.specfile import parse_cayley, parse_spec, serialize_cayley, serialize_spec

F3_SQUARED = """field 3
dim 2
unity 1 1
mul 0 0 : 1 0
mul 0 1 : 0 0
mul 1 0 : 0 0
mul 1 1 : 0 1
"""


def test_parse_example():
    a = parse_spec(F3_SQUARED)
    assert a.p == 3 and a.n == 2
    assert a.same_table(C.function_algebra(3, 2))
    assert serialize_spec(a) == F3_SQUARED


def test_any_mul_order_and_comments():
    lines = F3_SQUARED.splitlines()
    text = "# a comment\n\n" + "\n".join(lines[:3] + lines[3:][::-1]) + "  # trailing\n"
    assert parse_spec(text).same_table(C.function_algebra(3, 2))


def expect_error(text, fragment, line=None):
    with pytest.raises(ParseError) as exc:
        parse_spec(text)
    assert fragment in str(exc.value)
    if line is not None:
        assert exc.value.line == line
    return exc.value


def test_missing_product():
    expect_error(F3_SQUARED.replace("mul 1 0 : 0 0\n", ""), "missing product mul 1 0")


def test_residue_out_of_range():
    err = expect_error(F3_SQUARED.replace("mul 1 1 : 0 1", "mul 1 1 : 0 3"), "residue out of range", line=7)
    assert err.column == 13


def test_duplicate_product():
    expect_error(F3_SQUARED + "mul 0 0 : 1 0\n", "duplicate product", line=8)


@pytest.mark.parametrize("text,fragment", [
    ("", "expected 'field'"),
    ("field 4\ndim 1\nunity 1\nmul 0 0 : 1\n", "not a prime"),
    ("field 3\ndim x\n", "expected an integer"),
    ("field 3\ndims 2\n", "expected 'dim'"),
    ("field 3\ndim 1\nunity 1 0\nmul 0 0 : 1\n", "unity needs 1 residues"),
    ("field 3\ndim 1\nunity 1\nmul 0 0 1\n", "expected 'mul <i> <j> : <residues>'"),
    ("field 3\ndim 1\nunity 1\nmul 0 1 : 1\n", "index 1 out of range"),
    ("field 3\ndim 1\nunity 1\nmul 0 0 : 1 1\n", "product needs 1 residues"),
    ("field 3\ndim 1\nunity 1\nadd 0 0 : 1\n", "expected 'mul'"),
])
def test_malformed_documents(text, fragment):
    expect_error(text, fragment)


def test_axiom_violations_are_listed():
    text = F3_SQUARED.replace("mul 1 0 : 0 0", "mul 1 0 : 0 1")
    with pytest.raises(ValidationError) as exc:
        parse_spec(text)
    assert any("associativity" in v for v in exc.value.violations)


def test_nonunital_documents():
    a = parse_spec("field 2\ndim 1\nunity none\nmul 0 0 : 0\n")
    assert not a.is_unital


@pytest.mark.parametrize("a", builtin_corpus(), ids=lambda a: a.name)
def test_round_trip_corpus(a):
    text = serialize_spec(a)
    b = parse_spec(text)
    assert b.same_table(a) and b.name == a.name
    assert serialize_spec(b) == text


@given(st.integers(0, 2**32), st.sampled_from([2, 3, 5]), st.integers(1, 3))
def test_round_trip_random(seed, p, dim):
    a = random_algebra(p, dim, np.random.default_rng(seed))
    assert serialize_spec(parse_spec(serialize_spec(a))) == serialize_spec(a)


def test_cayley_round_trip():
    t = C.cyclic_group_table(4)
    assert np.array_equal(parse_cayley(serialize_cayley(t)), t)
    with pytest.raises(ParseError):
        parse_cayley("0 1\n1\n")
