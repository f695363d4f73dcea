"""Shared fixtures: the small named posets used throughout, and the cached
exhaustive universe of labeled posets with at most five elements."""

import pytest

from posetkit.core import Poset
from posetkit.oracle import enumerate_posets


@pytest.fixture
def chain3():
    return Poset.from_relations("abc", [("a", "b"), ("b", "c")])


@pytest.fixture
def antichain3():
    return Poset.from_relations("abc", [])


@pytest.fixture
def poset_n():
    """The N-shaped poset: a<c, b<c, b<d."""
    return Poset.from_relations("abcd", [("a", "c"), ("b", "c"), ("b", "d")])


@pytest.fixture
def poset_2x2():
    """The 2x2 diamond: bot < m1, m2 < top."""
    return Poset.from_relations(
        ["bot", "m1", "m2", "top"],
        [("bot", "m1"), ("bot", "m2"), ("m1", "top"), ("m2", "top")],
    )


@pytest.fixture
def poset_3p1():
    """A 3-chain x<y<z plus an isolated element w."""
    return Poset.from_relations("xyzw", [("x", "y"), ("y", "z")])


@pytest.fixture
def poset_sum():
    """The linear sum of two 2-antichains: {a,b} entirely below {c,d}."""
    return Poset.from_relations(
        "abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    )


@pytest.fixture(scope="session")
def posets_by_size():
    """Every labeled poset on n <= 5 elements, keyed by size."""
    return {n: list(enumerate_posets(n)) for n in range(6)}


@pytest.fixture(scope="session")
def small_posets(posets_by_size):
    """Flat list of all labeled posets with n <= 4 (fast exhaustive checks)."""
    return [p for n in range(5) for p in posets_by_size[n]]
