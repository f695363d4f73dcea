"""Build and validate chain/antichain-partition witnesses for finite posets.

Two construction routes: DIRECT pairs the Mirsky level partition with a
maximum chain; DECOMPOSED splits the poset along its incomparability
components, builds a direct witness per component, and glues them back
along the component order. Both always succeed on nonempty finite posets;
having two independent routes is the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import EmptyPosetError, Poset, UnknownElementError
from .decomposition import (
    Witness,
    combine_witnesses,
    inc_components,
    witness_violations,
)
from .duality import KWitness, maximum_chain, mirsky_levels

__all__ = [
    "ValidationReport",
    "WitnessMethod",
    "build_witness",
    "validate_k_witness",
    "validate_witness",
]


class WitnessMethod(Enum):
    DIRECT = "direct"
    DECOMPOSED = "decomposed"


@dataclass(frozen=True)
class ValidationReport:
    """All violations found; an empty tuple means the witness is valid."""

    violations: tuple[str, ...]

    @property
    def is_valid(self) -> bool:
        return not self.violations


def _direct(p: Poset) -> Witness:
    return Witness(chain=maximum_chain(p), partition=mirsky_levels(p))


def build_witness(p: Poset, method: WitnessMethod = WitnessMethod.DIRECT) -> Witness:
    """A chain plus an antichain partition whose every part meets the chain."""
    if len(p) == 0:
        raise EmptyPosetError("no witness exists for the empty poset")
    if method is WitnessMethod.DIRECT:
        return _direct(p)
    if method is WitnessMethod.DECOMPOSED:
        pieces = []
        for comp in inc_components(p).components:
            sub = p.induced(comp)
            pieces.append((sub, _direct(sub)))
        return combine_witnesses(pieces)
    raise ValueError(f"unknown method {method!r}")


def validate_witness(p: Poset, w: Witness) -> ValidationReport:
    """Check chain-ness, antichain-ness, partition-ness, and coverage.

    Violations are collected rather than failing fast, so a report reads as
    a complete diagnosis. Labels outside `p` raise UnknownElementError.
    """
    for x in w.chain:
        if x not in p:
            raise UnknownElementError(f"unknown element {x!r}")
    for part in w.partition:
        for x in part:
            if x not in p:
                raise UnknownElementError(f"unknown element {x!r}")
    return ValidationReport(witness_violations(p, w))


def validate_k_witness(p: Poset, kw: KWitness, k: int) -> ValidationReport:
    """Check a k-chain witness: every part meets exactly min(|part|, k) chains.

    The witness may carry fewer than k chains (trailing chains of a formal
    k-tuple may be empty and are simply not listed); it may never carry more.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    for chain in kw.chains:
        for x in chain:
            if x not in p:
                raise UnknownElementError(f"unknown element {x!r}")
    for part in kw.partition:
        for x in part:
            if x not in p:
                raise UnknownElementError(f"unknown element {x!r}")

    out: list[str] = []
    if len(kw.chains) > k:
        out.append(f"{len(kw.chains)} chains listed, at most {k} allowed")
    for chain in kw.chains:
        if not chain:
            out.append("empty chain listed explicitly")
        elif not p.is_chain(chain):
            out.append(f"{list(chain)} is not a chain of the poset")
    if len(set(kw.chains)) != len(kw.chains):
        out.append("chains are not pairwise distinct")

    counts: dict[str, int] = {x: 0 for x in p.elements}
    for part in kw.partition:
        if not part:
            out.append("partition contains an empty part")
            continue
        if not p.is_antichain(part):
            out.append(f"part {sorted(part)} is not an antichain")
        for x in part:
            counts[x] += 1
    missing = sorted(x for x, c in counts.items() if c == 0)
    repeated = sorted(x for x, c in counts.items() if c > 1)
    if missing:
        out.append(f"not a partition: elements {missing} uncovered")
    if repeated:
        out.append(f"not a partition: elements {repeated} in several parts")

    chain_sets = [set(c) for c in kw.chains]
    for part in kw.partition:
        met = sum(1 for cs in chain_sets if part & cs)
        expected = min(len(part), k)
        if met != expected:
            out.append(
                f"part {sorted(part)} meets {met} chains, expected {expected}"
            )
    return ValidationReport(tuple(out))
