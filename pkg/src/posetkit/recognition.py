"""Forbidden-pattern recognition and incomparability-degree profiling.

A semiorder is a poset avoiding both the 3+1 pattern (a 3-chain plus an
element incomparable to all of it) and the 2+2 pattern (two disjoint
2-chains, cross-incomparable). In a 3+1-free poset no incomparability
neighbourhood can contain a 3-chain, which bounds the neighbourhood height
by 1 and the incomparability degree by twice the width.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from .core import Comparison, Poset

__all__ = [
    "IncDegreeProfile",
    "Pattern",
    "PatternEmbedding",
    "find_pattern",
    "inc_degree_profile",
    "inc_neighborhood_height",
    "is_semiorder",
    "semiorder_from_unit_intervals",
]

INC = Comparison.INC


class Pattern(Enum):
    THREE_PLUS_ONE = "3p1"
    TWO_PLUS_TWO = "2p2"


@dataclass(frozen=True)
class PatternEmbedding:
    """Witnessing elements in role order.

    THREE_PLUS_ONE: (x, y, z, w) with x < y < z and w incomparable to all
    three. TWO_PLUS_TWO: (a0, a1, b0, b1) with a0 < a1, b0 < b1, and all
    four cross pairs incomparable.
    """

    pattern: Pattern
    elements: tuple[str, str, str, str]


def find_pattern(p: Poset, pattern: Pattern) -> PatternEmbedding | None:
    """Lexicographically least embedding of the pattern, or None if absent."""
    labs = sorted(p.elements)
    if pattern is Pattern.THREE_PLUS_ONE:
        for x in labs:
            for y in labs:
                if not p.lt(x, y):
                    continue
                for z in labs:
                    if not p.lt(y, z):
                        continue
                    for w in labs:
                        if (
                            p.compare(w, x) is INC
                            and p.compare(w, y) is INC
                            and p.compare(w, z) is INC
                        ):
                            return PatternEmbedding(pattern, (x, y, z, w))
        return None
    if pattern is Pattern.TWO_PLUS_TWO:
        for a0 in labs:
            for a1 in labs:
                if not p.lt(a0, a1):
                    continue
                for b0 in labs:
                    if (
                        p.compare(b0, a0) is not INC
                        or p.compare(b0, a1) is not INC
                    ):
                        continue
                    for b1 in labs:
                        if (
                            p.lt(b0, b1)
                            and p.compare(b1, a0) is INC
                            and p.compare(b1, a1) is INC
                        ):
                            return PatternEmbedding(pattern, (a0, a1, b0, b1))
        return None
    raise ValueError(f"unknown pattern {pattern!r}")


def is_semiorder(p: Poset) -> bool:
    """True iff both the 3+1 and the 2+2 pattern are absent."""
    return (
        find_pattern(p, Pattern.THREE_PLUS_ONE) is None
        and find_pattern(p, Pattern.TWO_PLUS_TWO) is None
    )


@dataclass(frozen=True)
class IncDegreeProfile:
    """Per-element incomparability degrees with max and mean."""

    degrees: dict[str, int]
    max_degree: int
    mean_degree: float


def inc_degree_profile(p: Poset) -> IncDegreeProfile:
    degrees = {x: len(p.incomparables(x)) for x in p.elements}
    if not degrees:
        return IncDegreeProfile({}, 0, 0.0)
    return IncDegreeProfile(
        degrees=degrees,
        max_degree=max(degrees.values()),
        mean_degree=sum(degrees.values()) / len(degrees),
    )


def inc_neighborhood_height(p: Poset, x: str) -> int:
    """Height of the subposet induced on the elements incomparable to x.

    Returns -1 when x has no incomparable neighbours.
    """
    neighbours = p.incomparables(x)
    if not neighbours:
        return -1
    return p.induced(neighbours).height()


def semiorder_from_unit_intervals(reps: Sequence[float]) -> Poset:
    """The unit-interval semiorder of the given representatives.

    Element i is below element j iff reps[i] + 1 < reps[j]; a difference of
    exactly 1 counts as incomparable.
    """
    reps = list(reps)
    pad = max(1, len(str(max(len(reps) - 1, 0))))
    labels = [f"x{i:0{pad}d}" for i in range(len(reps))]
    pairs = [
        (labels[i], labels[j])
        for i in range(len(reps))
        for j in range(len(reps))
        if reps[i] + 1 < reps[j]
    ]
    return Poset.from_relations(labels, pairs)
