"""Comparability/incomparability graph views and sum decompositions.

The connected components of the incomparability graph inherit a total order
from the poset (every cross-component pair is comparable, consistently
oriented), and the poset is exactly the linear sum of its components.
`combine_witnesses` glues per-part chain/partition witnesses along such a
sum.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key

from .core import (
    AntichainPartition,
    Chain,
    Comparison,
    Poset,
    PosetError,
    UnknownElementError,
)

__all__ = [
    "ComponentChain",
    "GraphKind",
    "GraphView",
    "InvalidPartWitnessError",
    "LabelCollisionError",
    "Witness",
    "combine_witnesses",
    "graph_view",
    "inc_components",
    "lex_sum",
    "linear_sum",
    "witness_violations",
]


class LabelCollisionError(PosetError):
    """Two summands of a lexicographic sum share a label."""


class InvalidPartWitnessError(PosetError):
    """A per-part witness handed to combine_witnesses does not validate."""


class GraphKind(Enum):
    COMP = "comp"
    INC = "inc"


@dataclass(frozen=True)
class GraphView:
    """Undirected comparability or incomparability graph of a poset.

    The two views of one poset partition all unordered pairs between them.
    Edges are stored with endpoints in label order.
    """

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    kind: GraphKind


@dataclass(frozen=True)
class ComponentChain:
    """Incomparability components listed in their induced linear order."""

    components: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class Witness:
    """A chain plus an antichain partition whose every part meets the chain."""

    chain: Chain
    partition: AntichainPartition


def graph_view(p: Poset, kind: GraphKind) -> GraphView:
    verts = tuple(sorted(p.elements))
    edges = set()
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            incomparable = p.compare(x, y) is Comparison.INC
            if incomparable == (kind is GraphKind.INC):
                edges.add((x, y))
    return GraphView(vertices=verts, edges=frozenset(edges), kind=kind)


def inc_components(p: Poset) -> ComponentChain:
    """Connected components of the incomparability graph, linearly ordered.

    The order compares one representative pair and is then asserted across
    all cross-component pairs; an assertion failure here would mean the
    input is not a valid poset.
    """
    remaining = sorted(p.elements)
    seen: set[str] = set()
    components: list[tuple[str, ...]] = []
    for start in remaining:
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for w in p.incomparables(v):
                    if w not in comp:
                        comp.add(w)
                        nxt.append(w)
            frontier = nxt
        seen |= comp
        components.append(tuple(sorted(comp)))

    def by_representatives(a: tuple[str, ...], b: tuple[str, ...]) -> int:
        c = p.compare(a[0], b[0])
        assert c in (Comparison.LT, Comparison.GT), (
            "cross-component pair is incomparable"
        )
        return -1 if c is Comparison.LT else 1

    components.sort(key=cmp_to_key(by_representatives))
    for i, lower in enumerate(components):
        for upper in components[i + 1 :]:
            for x in lower:
                for y in upper:
                    assert p.lt(x, y), "component order is not a domination order"
    return ComponentChain(tuple(components))


def lex_sum(index: Poset, parts: Mapping[str, Poset]) -> Poset:
    """Lexicographic sum of `parts` over the `index` poset.

    Inside a part the part's order applies; across parts, everything in the
    part at i lies below everything in the part at j whenever i < j in the
    index. A singleton index (a degenerate sum) is accepted, as is an empty
    one, which yields the empty poset.
    """
    if set(parts) != set(index.elements):
        raise ValueError("parts must be keyed by exactly the index elements")
    elems: list[str] = []
    seen: set[str] = set()
    blocks: list[tuple[str, Poset, int]] = []  # (index label, part, offset)
    for ilab in index.elements:
        part = parts[ilab]
        blocks.append((ilab, part, len(elems)))
        for e in part.elements:
            if e in seen:
                raise LabelCollisionError(f"label {e!r} occurs in two parts")
            seen.add(e)
            elems.append(e)
    pos = {e: i for i, e in enumerate(elems)}
    block_mask = {
        ilab: sum(1 << (off + i) for i in range(len(part)))
        for ilab, part, off in blocks
    }
    up = [0] * len(elems)
    for ilab, part, off in blocks:
        above = 0
        for jlab, _, _ in blocks:
            if ilab != jlab and index.lt(ilab, jlab):
                above |= block_mask[jlab]
        for x in part.elements:
            up[pos[x]] |= above
        for x, y in part.lt_pairs():
            up[pos[x]] |= 1 << pos[y]
    return Poset(elems, up)


def linear_sum(parts: Sequence[Poset]) -> Poset:
    """Lexicographic sum over a chain index: part i entirely below part i+1."""
    parts = tuple(parts)
    labels = [str(i) for i in range(len(parts))]
    index = Poset.from_relations(
        labels,
        [(labels[i], labels[j]) for i in range(len(parts)) for j in range(i + 1, len(parts))],
    )
    return lex_sum(index, dict(zip(labels, parts)))


def witness_violations(p: Poset, w: Witness) -> tuple[str, ...]:
    """All ways `w` fails to be a witness for `p`; empty means valid.

    Labels in `w` must belong to `p` (UnknownElementError otherwise).
    """
    out: list[str] = []
    if not p.is_chain(w.chain):
        out.append("chain is not a chain of the poset")
    counts: dict[str, int] = {x: 0 for x in p.elements}
    for part in w.partition:
        if not part:
            out.append("partition contains an empty part")
            continue
        if not p.is_antichain(part):
            out.append(f"part {sorted(part)} is not an antichain")
        for x in part:
            if x not in counts:
                raise UnknownElementError(f"unknown element {x!r}")
            counts[x] += 1
    missing = sorted(x for x, c in counts.items() if c == 0)
    repeated = sorted(x for x, c in counts.items() if c > 1)
    if missing:
        out.append(f"not a partition: elements {missing} uncovered")
    if repeated:
        out.append(f"not a partition: elements {repeated} in several parts")
    chain_set = set(w.chain)
    for x in chain_set:
        if x not in counts:
            raise UnknownElementError(f"unknown element {x!r}")
    for part in w.partition:
        met = len(part & chain_set)
        if met == 0:
            out.append(f"part {sorted(part)} is disjoint from the chain")
        elif met > 1:
            out.append(f"part {sorted(part)} meets the chain {met} times")
    return tuple(out)


def combine_witnesses(parts: Sequence[tuple[Poset, Witness]]) -> Witness:
    """Concatenate per-part witnesses of a linear sum into one witness.

    The parts must be the summands in sum order; each witness must be valid
    for its own part (InvalidPartWitnessError otherwise). The combined chain
    is the concatenation of the part chains and the combined partition the
    union of the part partitions.
    """
    chain: list[str] = []
    partition: list[frozenset[str]] = []
    for i, (part, w) in enumerate(parts):
        try:
            bad = witness_violations(part, w)
        except UnknownElementError as exc:
            raise InvalidPartWitnessError(f"part {i}: {exc}") from exc
        if bad:
            raise InvalidPartWitnessError(f"part {i}: " + "; ".join(bad))
        chain.extend(w.chain)
        partition.extend(w.partition)
    return Witness(tuple(chain), tuple(partition))
