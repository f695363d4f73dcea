import itertools

import pytest

from posetkit.core import Poset
from posetkit.decomposition import Witness
from posetkit.duality import BudgetExceededError, dilworth
from posetkit.oracle import (
    bruteforce_max_antichain,
    bruteforce_pattern,
    bruteforce_witness,
    enumerate_posets,
)
from posetkit.recognition import Pattern
from posetkit.witness import validate_witness

EXPECTED_COUNTS = (1, 1, 3, 19, 219, 4231)  # regression values, n = 0..5


def relations_by_filtering(n):
    """Second, independent enumeration: filter all subsets of ordered pairs."""
    labels = "abcdefg"[:n]
    ordered = [(x, y) for x in labels for y in labels if x != y]
    found = set()
    for bits in range(1 << len(ordered)):
        pairs = {ordered[i] for i in range(len(ordered)) if bits >> i & 1}
        if any((y, x) in pairs for x, y in pairs):
            continue
        if all(
            (x, z) in pairs
            for x, y in pairs
            for w, z in pairs
            if y == w and x != z
        ):
            found.add(frozenset(pairs))
    return found


class TestEnumeratePosets:
    def test_n2_by_hand(self):
        posets = list(enumerate_posets(2))
        assert len(posets) == 3
        relations = {p.lt_pairs() for p in posets}
        assert relations == {
            frozenset(),
            frozenset({("a", "b")}),
            frozenset({("b", "a")}),
        }

    def test_counts_match_regression_values(self, posets_by_size):
        assert tuple(len(posets_by_size[n]) for n in range(6)) == EXPECTED_COUNTS

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_agrees_with_filtering_method(self, n):
        backtracked = {p.lt_pairs() for p in enumerate_posets(n)}
        assert backtracked == relations_by_filtering(n)

    def test_each_exactly_once(self, posets_by_size):
        for n in range(6):
            seen = {p.lt_pairs() for p in posets_by_size[n]}
            assert len(seen) == len(posets_by_size[n])

    def test_outputs_are_valid_posets(self, posets_by_size):
        for p in posets_by_size[4]:
            assert Poset.from_relations(p.elements, p.lt_pairs()) == p

    def test_deterministic_order(self):
        first = [p.lt_pairs() for p in enumerate_posets(3)]
        second = [p.lt_pairs() for p in enumerate_posets(3)]
        assert first == second

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            next(enumerate_posets(8, allow_large=True))
        with pytest.raises(BudgetExceededError):
            next(enumerate_posets(7))

    def test_negative(self):
        with pytest.raises(ValueError):
            next(enumerate_posets(-1))


class TestBruteforceMaxAntichain:
    def test_named_posets(self, chain3, antichain3, poset_2x2):
        assert bruteforce_max_antichain(chain3) == frozenset("a")
        assert bruteforce_max_antichain(antichain3) == frozenset("abc")
        assert bruteforce_max_antichain(poset_2x2) == frozenset({"m1", "m2"})

    def test_2x2_subset_scan(self, poset_2x2):
        p = poset_2x2
        maxima = []
        for r in range(len(p), 0, -1):
            for combo in itertools.combinations(sorted(p.elements), r):
                if p.is_antichain(combo):
                    maxima.append(frozenset(combo))
            if maxima:
                break
        assert bruteforce_max_antichain(p) in maxima

    def test_canonically_least(self):
        p = Poset.from_relations("abcd", [("a", "c"), ("b", "c"), ("b", "d")])
        # maximum antichains of size 2: {a,b}, {a,d}, {c,d}
        assert bruteforce_max_antichain(p) == frozenset("ab")

    def test_agrees_with_dilworth(self, small_posets):
        for p in small_posets:
            if not len(p):
                continue
            _, anti = dilworth(p)
            assert len(bruteforce_max_antichain(p)) == len(anti)


class TestBruteforceWitness:
    def test_singleton(self):
        p = Poset.from_relations(["x"], [])
        assert bruteforce_witness(p) == Witness(("x",), (frozenset("x"),))

    def test_empty(self):
        p = Poset.from_relations([], [])
        assert bruteforce_witness(p) == Witness((), ())

    def test_poset_n_validates(self, poset_n):
        w = bruteforce_witness(poset_n)
        assert w is not None
        assert validate_witness(poset_n, w).is_valid

    def test_found_on_all_small(self, small_posets):
        for p in small_posets:
            w = bruteforce_witness(p)
            assert w is not None
            assert validate_witness(p, w).is_valid

    def test_budget(self):
        p = Poset.from_relations([f"e{i}" for i in range(7)], [])
        with pytest.raises(BudgetExceededError):
            bruteforce_witness(p)


class TestBruteforcePattern:
    def test_3p1(self, poset_3p1):
        emb = bruteforce_pattern(poset_3p1, Pattern.THREE_PLUS_ONE)
        assert emb.elements == ("x", "y", "z", "w")

    def test_chain_clean(self):
        p = Poset.from_relations("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
        assert bruteforce_pattern(p, Pattern.THREE_PLUS_ONE) is None
        assert bruteforce_pattern(p, Pattern.TWO_PLUS_TWO) is None

    def test_2p2(self):
        p = Poset.from_relations("abcd", [("a", "b"), ("c", "d")])
        emb = bruteforce_pattern(p, Pattern.TWO_PLUS_TWO)
        assert emb.elements == ("a", "b", "c", "d")

    def test_budget(self):
        p = Poset.from_relations([f"e{i}" for i in range(11)], [])
        with pytest.raises(BudgetExceededError):
            bruteforce_pattern(p, Pattern.THREE_PLUS_ONE)
