import pytest

from gkz.errors import BadParameter, CapExceeded
from gkz.search import census


def test_exhaustive_p2_dim2():
    c = census(2, 2, 0, 0, exhaustive=True)
    counts = c.counts()
    assert counts["samples"] == 256
    assert counts["valid"] == 12
    assert counts["oracle_checked"] == counts["valid"]
    assert counts["oracle_disagreements"] == 0 and c.ok
    # the three two-dimensional unital algebras over GF(2), each in all its tables
    assert sorted(r["count"] for r in c.classes()) == [3, 3, 6]


def test_random_census_is_seeded_and_valid():
    a = census(3, 2, 3000, 42)
    b = census(3, 2, 3000, 42)
    assert a.records == b.records
    assert a.counts()["valid"] > 0 and a.ok
    assert census(3, 2, 3000, 43).records != a.records


def test_parallel_census_matches_serial():
    a = census(2, 2, 5000, 5, jobs=1)
    b = census(2, 2, 5000, 5, jobs=2)
    assert a.machine_lines() == b.machine_lines()


def test_empty_census():
    c = census(3, 2, 0, 1)
    assert c.counts()["valid"] == 0 and c.classes() == [] and c.ok


def test_search_limits():
    with pytest.raises(BadParameter):
        census(3, 4, 10, 0)
    with pytest.raises(CapExceeded):
        census(2, 3, 0, 0, exhaustive=True)
