import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posetkit.core import (
    Comparison,
    CycleError,
    DuplicateLabelError,
    EmptyPosetError,
    Poset,
    UnknownElementError,
)

LT, GT, EQ, INC = Comparison.LT, Comparison.GT, Comparison.EQ, Comparison.INC


def brute_lt(elements, pairs):
    """Independent transitive closure by path search over the raw pairs."""
    succ = {e: set() for e in elements}
    for x, y in pairs:
        succ[x].add(y)
    closed = set()
    for x in elements:
        stack, seen = list(succ[x]), set()
        while stack:
            y = stack.pop()
            if y in seen:
                continue
            seen.add(y)
            closed.add((x, y))
            stack.extend(succ[y])
    return closed


class TestFromRelations:
    def test_transitivity_forced(self):
        p = Poset.from_relations("abc", [("a", "b"), ("b", "c")])
        assert p.lt("a", "c")

    def test_empty_relation_is_antichain(self):
        p = Poset.from_relations("abc", [])
        assert p.lt_pairs() == frozenset()

    def test_two_cycle_rejected(self):
        with pytest.raises(CycleError) as exc:
            Poset.from_relations("ab", [("a", "b"), ("b", "a")])
        assert exc.value.cycle == ("a", "b")

    def test_self_pair_rejected(self):
        with pytest.raises(CycleError) as exc:
            Poset.from_relations("ab", [("a", "a")])
        assert exc.value.cycle == ("a",)

    def test_longer_cycle_reported(self):
        with pytest.raises(CycleError) as exc:
            Poset.from_relations("abc", [("a", "b"), ("b", "c"), ("c", "a")])
        assert set(exc.value.cycle) == {"a", "b", "c"}

    def test_duplicate_label(self):
        with pytest.raises(DuplicateLabelError):
            Poset.from_relations("aba", [])

    def test_unknown_endpoint(self):
        with pytest.raises(UnknownElementError):
            Poset.from_relations("ab", [("a", "z")])

    def test_closure_matches_path_search(self):
        elements = "abcde"
        pairs = [("a", "b"), ("b", "c"), ("a", "d"), ("d", "e")]
        p = Poset.from_relations(elements, pairs)
        assert p.lt_pairs() == frozenset(brute_lt(elements, pairs))


class TestCompare:
    def test_chain_ends(self, chain3):
        assert chain3.compare("a", "c") is LT
        assert chain3.compare("c", "a") is GT

    def test_reflexive(self, chain3):
        assert chain3.compare("b", "b") is EQ

    def test_antichain(self, antichain3):
        assert antichain3.compare("a", "b") is INC

    def test_unknown(self, chain3):
        with pytest.raises(UnknownElementError):
            chain3.compare("a", "z")

    def test_antisymmetric_table(self, small_posets):
        for p in small_posets:
            for x in p:
                for y in p:
                    c, rc = p.compare(x, y), p.compare(y, x)
                    assert (c is LT) == (rc is GT)
                    assert (c is INC) == (rc is INC)


class TestDownSet:
    def test_poset_n(self, poset_n):
        assert poset_n.down_set({"c"}) == {"a", "b", "c"}

    def test_empty(self, poset_n):
        assert poset_n.down_set(set()) == frozenset()

    def test_chain_middle(self, chain3):
        assert chain3.down_set({"b"}) == {"a", "b"}

    def test_unknown(self, chain3):
        with pytest.raises(UnknownElementError):
            chain3.down_set({"z"})

    def test_closure_operator(self, small_posets):
        # extensive, monotone, idempotent, on every subset of every small poset
        for p in small_posets:
            elems = list(p.elements)
            subsets = [
                frozenset(c)
                for r in range(len(elems) + 1)
                for c in itertools.combinations(elems, r)
            ]
            for s in subsets:
                d = p.down_set(s)
                assert s <= d
                assert p.down_set(d) == d
            for s in subsets:
                for t in subsets:
                    if s <= t:
                        assert p.down_set(s) <= p.down_set(t)


class TestDual:
    def test_chain_reversed(self, chain3):
        d = chain3.dual()
        assert d.lt("c", "a") and d.lt("b", "a") and d.lt("c", "b")

    def test_involution(self, poset_n):
        assert poset_n.dual().dual() == poset_n

    def test_inc_edges_invariant_2x2(self, poset_2x2):
        def inc_edges(p):
            return {
                frozenset((x, y))
                for x in p
                for y in p
                if x < y and p.compare(x, y) is INC
            }

        assert inc_edges(poset_2x2.dual()) == inc_edges(poset_2x2) == {
            frozenset(("m1", "m2"))
        }


class TestInduced:
    def test_3p1_chain_part(self, poset_3p1):
        q = poset_3p1.induced({"x", "y", "z"})
        assert q.lt("x", "z") and len(q) == 3

    def test_empty_subset(self, poset_2x2):
        assert len(poset_2x2.induced(set())) == 0

    def test_2x2_middle_antichain(self, poset_2x2):
        q = poset_2x2.induced({"m1", "m2"})
        assert q.compare("m1", "m2") is INC
        assert q.lt_pairs() == frozenset()

    def test_unknown(self, poset_2x2):
        with pytest.raises(UnknownElementError):
            poset_2x2.induced({"m1", "zz"})


class TestHasse:
    def test_chain(self, chain3):
        assert chain3.hasse() == {("a", "b"), ("b", "c")}

    def test_antichain(self, antichain3):
        assert antichain3.hasse() == frozenset()

    def test_2x2_against_bruteforce(self, poset_2x2):
        p = poset_2x2
        brute = {
            (x, y)
            for x in p
            for y in p
            if p.lt(x, y) and not any(p.lt(x, z) and p.lt(z, y) for z in p)
        }
        assert p.hasse() == brute == {
            ("bot", "m1"),
            ("bot", "m2"),
            ("m1", "top"),
            ("m2", "top"),
        }


def longest_chain_to(p, x):
    """Independent longest-path-by-enumeration oracle for element height."""
    best = 0
    stack = [(x, 0)]
    while stack:
        y, d = stack.pop()
        best = max(best, d)
        for z in p:
            if p.lt(z, y):
                stack.append((z, d + 1))
    return best


class TestHeight:
    def test_chain_heights(self, chain3):
        assert [chain3.element_height(x) for x in "abc"] == [0, 1, 2]
        assert chain3.height() == 2

    def test_antichain(self, antichain3):
        assert all(antichain3.element_height(x) == 0 for x in "abc")
        assert antichain3.height() == 0

    def test_poset_n(self, poset_n):
        expected = {x: longest_chain_to(poset_n, x) for x in poset_n}
        assert expected == {"a": 0, "b": 0, "c": 1, "d": 1}
        for x, h in expected.items():
            assert poset_n.element_height(x) == h
        assert poset_n.height() == 1

    def test_empty(self):
        with pytest.raises(EmptyPosetError):
            Poset.from_relations([], []).height()


class TestIdentity:
    def test_equality_ignores_presentation_order(self):
        p = Poset.from_relations("ab", [("a", "b")])
        q = Poset.from_relations("ba", [("a", "b")])
        assert p == q and hash(p) == hash(q)

    def test_inequality(self):
        p = Poset.from_relations("ab", [("a", "b")])
        q = Poset.from_relations("ab", [])
        assert p != q


@st.composite
def raw_posets(draw):
    n = draw(st.integers(min_value=0, max_value=6))
    labels = [f"e{i}" for i in range(n)]
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                pairs.append((labels[i], labels[j]))
    return Poset.from_relations(labels, pairs)


class TestProperties:
    @given(raw_posets())
    @settings(max_examples=200)
    def test_closure_idempotent(self, p):
        assert Poset.from_relations(p.elements, p.lt_pairs()) == p

    @given(raw_posets())
    @settings(max_examples=200)
    def test_hasse_regenerates_relation(self, p):
        assert Poset.from_relations(p.elements, p.hasse()) == p

    def test_chain_meets_antichain_at_most_once(self, posets_by_size):
        # Enumerate chains and antichains as index masks per poset.
        for n in range(6):
            for p in posets_by_size[n]:
                elems = list(p.elements)
                chains, antichains = [], []
                for r in range(1, n + 1):
                    for combo in itertools.combinations(range(n), r):
                        members = [elems[i] for i in combo]
                        mask = sum(1 << i for i in combo)
                        comps = [
                            p.compare(a, b)
                            for a, b in itertools.combinations(members, 2)
                        ]
                        if all(c in (LT, GT) for c in comps):
                            chains.append(mask)
                        if all(c is INC for c in comps):
                            antichains.append(mask)
                for c in chains:
                    for a in antichains:
                        assert (c & a).bit_count() <= 1
