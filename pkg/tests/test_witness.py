import pytest

from posetkit.cli import random_order_poset
from posetkit.core import EmptyPosetError, Poset, UnknownElementError
from posetkit.decomposition import Witness, inc_components
from posetkit.duality import KWitness
from posetkit.witness import (
    WitnessMethod,
    build_witness,
    validate_k_witness,
    validate_witness,
)

DIRECT, DECOMPOSED = WitnessMethod.DIRECT, WitnessMethod.DECOMPOSED


class TestBuildWitness:
    def test_chain_both_methods(self, chain3):
        for method in WitnessMethod:
            w = build_witness(chain3, method)
            assert w.chain == ("a", "b", "c")
            assert w.partition == (
                frozenset("a"),
                frozenset("b"),
                frozenset("c"),
            )

    def test_poset_n_direct(self, poset_n):
        w = build_witness(poset_n, DIRECT)
        assert w.chain == ("a", "c")
        assert w.partition == (frozenset("ab"), frozenset("cd"))

    def test_poset_sum_decomposed(self, poset_sum):
        w = build_witness(poset_sum, DECOMPOSED)
        assert w.chain == ("a", "c")
        assert w.partition == (frozenset("ab"), frozenset("cd"))

    def test_empty(self):
        p = Poset.from_relations([], [])
        for method in WitnessMethod:
            with pytest.raises(EmptyPosetError):
                build_witness(p, method)

    def test_both_methods_validate_small(self, small_posets):
        for p in small_posets:
            if not len(p):
                continue
            for method in WitnessMethod:
                w = build_witness(p, method)
                assert validate_witness(p, w).is_valid

    def test_methods_agree_per_component_part_counts(self, small_posets):
        # The direct levels restricted to a component always form exactly
        # as many nonempty slices as the component's own level partition.
        for p in small_posets:
            if not len(p):
                continue
            direct = build_witness(p, DIRECT)
            for comp in inc_components(p).components:
                sub = p.induced(comp)
                slices = sum(
                    1 for part in direct.partition if part & set(comp)
                )
                assert slices == sub.height() + 1

    def test_totality_on_random_n40(self):
        for seed in range(1000):
            p = random_order_poset(40, seed=seed)
            for method in WitnessMethod:
                w = build_witness(p, method)
                assert validate_witness(p, w).is_valid


class TestValidateWitness:
    def test_valid_poset_n(self, poset_n):
        w = Witness(("a", "c"), (frozenset("ab"), frozenset("cd")))
        report = validate_witness(poset_n, w)
        assert report.is_valid and report.violations == ()

    def test_collects_all_violations(self, chain3):
        w = Witness(("a",), (frozenset("a"), frozenset("bc")))
        report = validate_witness(chain3, w)
        assert not report.is_valid
        assert any("not an antichain" in v for v in report.violations)
        assert any("disjoint from the chain" in v for v in report.violations)

    def test_not_a_partition(self, chain3):
        w = Witness(("a",), (frozenset("a"),))
        report = validate_witness(chain3, w)
        assert any("uncovered" in v for v in report.violations)

    def test_unknown_label(self, chain3):
        w = Witness(("z",), (frozenset("abc"),))
        with pytest.raises(UnknownElementError):
            validate_witness(chain3, w)

    def test_each_part_met_exactly_once(self, small_posets):
        for p in small_posets:
            if not len(p):
                continue
            w = build_witness(p, DIRECT)
            chain = set(w.chain)
            assert all(len(part & chain) == 1 for part in w.partition)


class TestValidateKWitness:
    def test_2x2_example(self, poset_2x2):
        kw = KWitness(
            chains=(("bot", "m1", "top"), ("m2",)),
            partition=(
                frozenset({"bot"}),
                frozenset({"m1", "m2"}),
                frozenset({"top"}),
            ),
        )
        assert validate_k_witness(poset_2x2, kw, 2).is_valid

    def test_wrapped_witness_is_k1_witness(self, poset_n):
        w = build_witness(poset_n, DIRECT)
        kw = KWitness(chains=(w.chain,), partition=w.partition)
        assert validate_k_witness(poset_n, kw, 1).is_valid

    def test_detects_part_missing_chains(self, poset_2x2):
        kw = KWitness(
            chains=(("bot", "m1", "top"),),
            partition=(
                frozenset({"bot"}),
                frozenset({"m1", "m2"}),
                frozenset({"top"}),
            ),
        )
        report = validate_k_witness(poset_2x2, kw, 2)
        assert not report.is_valid
        assert any("meets 1 chains, expected 2" in v for v in report.violations)

    def test_too_many_chains(self, antichain3):
        kw = KWitness(
            chains=(("a",), ("b",)),
            partition=(frozenset("a"), frozenset("b"), frozenset("c")),
        )
        report = validate_k_witness(antichain3, kw, 1)
        assert any("at most 1" in v for v in report.violations)

    def test_duplicate_chains_flagged(self, antichain3):
        kw = KWitness(
            chains=(("a",), ("a",)),
            partition=(frozenset("abc"),),
        )
        report = validate_k_witness(antichain3, kw, 2)
        assert any("pairwise distinct" in v for v in report.violations)

    def test_unknown_label(self, chain3):
        kw = KWitness(chains=(("z",),), partition=(frozenset("abc"),))
        with pytest.raises(UnknownElementError):
            validate_k_witness(chain3, kw, 1)
