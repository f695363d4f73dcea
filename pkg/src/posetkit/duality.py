"""Chain-antichain duality algorithms.

Mirsky level partitions and maximum chains realize the "partition into
antichains met by one chain" direction; the split-bipartite reduction,
augmenting-path matching, and Koenig cover realize Dilworth decomposition
with an explicit certificate. `k_witness_search` exhaustively searches tiny
posets for k chains and an antichain partition in which every part meets
exactly min(|part|, k) of the chains.
"""

from __future__ import annotations

import time
from collections.abc import Iterator
from dataclasses import dataclass

from .core import (
    Antichain,
    AntichainPartition,
    Chain,
    Comparison,
    EmptyPosetError,
    Poset,
    PosetError,
)

__all__ = [
    "KWitness",
    "LEFT",
    "Matching",
    "NotMaximumMatchingError",
    "BudgetExceededError",
    "RIGHT",
    "SearchBudget",
    "SplitBipartite",
    "SplitVertex",
    "VertexCover",
    "dilworth",
    "k_witness_search",
    "koenig_cover",
    "max_matching",
    "maximum_chain",
    "mirsky_levels",
    "split_bipartite",
    "width",
]


class NotMaximumMatchingError(PosetError):
    """The supplied matching admits an augmenting path."""


class BudgetExceededError(PosetError):
    """An exhaustive search was asked to exceed its configured limits."""


# Vertices of the split graph are tagged copies: ("left", x) is the lower
# copy of x, ("right", y) the upper copy of y.
LEFT = "left"
RIGHT = "right"
SplitVertex = tuple[str, str]
Matching = frozenset[tuple[str, str]]
VertexCover = frozenset[SplitVertex]


@dataclass(frozen=True)
class SplitBipartite:
    """Bipartite split of a poset: edge (x, y) for every strict pair x < y."""

    left: tuple[str, ...]
    right: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class KWitness:
    """Up to k pairwise distinct chains plus an antichain partition in which
    every part meets exactly min(|part|, k) of the chains."""

    chains: tuple[Chain, ...]
    partition: AntichainPartition


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the exponential k-witness search."""

    max_elements: int = 6
    max_k: int = 3
    time_limit_s: float | None = 60.0


def mirsky_levels(p: Poset) -> AntichainPartition:
    """Partition by element height; level i holds the elements of height i.

    Every level is an antichain and level count equals height + 1.
    """
    if len(p) == 0:
        raise EmptyPosetError("cannot partition the empty poset into levels")
    levels: list[set[str]] = [set() for _ in range(p.height() + 1)]
    for x in p:
        levels[p.element_height(x)].add(x)
    return tuple(frozenset(level) for level in levels)


def maximum_chain(p: Poset) -> Chain:
    """A longest chain; among those, least by the label order of its members.

    The i-th member always has element height exactly i, so the result meets
    every Mirsky level exactly once.
    """
    if len(p) == 0:
        raise EmptyPosetError("the empty poset has no chains")
    top = p.height()
    by_level: dict[int, list[str]] = {}
    for x in sorted(p.elements):
        by_level.setdefault(p.element_height(x), []).append(x)
    # good[x]: a chain climbing one level per step can reach the top from x
    good: set[str] = set(by_level[top])
    for level in range(top - 1, -1, -1):
        for x in by_level[level]:
            if any(p.lt(x, y) for y in by_level[level + 1] if y in good):
                good.add(x)
    chain: list[str] = []
    for level in range(top + 1):
        for x in by_level[level]:
            if x in good and (not chain or p.lt(chain[-1], x)):
                chain.append(x)
                break
        else:
            raise AssertionError("level unreachable in a finite poset")
    return tuple(chain)


def split_bipartite(p: Poset) -> SplitBipartite:
    """The standard matching reduction: lower/upper copies joined along <."""
    verts = tuple(sorted(p.elements))
    edges = tuple(sorted(p.lt_pairs()))
    return SplitBipartite(left=verts, right=verts, edges=edges)


def _adjacency(g: SplitBipartite) -> dict[str, list[str]]:
    adj: dict[str, list[str]] = {x: [] for x in g.left}
    for x, y in sorted(g.edges):
        adj[x].append(y)
    return adj


def max_matching(g: SplitBipartite) -> Matching:
    """Maximum-cardinality matching by augmenting paths, deterministic scan."""
    adj = _adjacency(g)
    match_right: dict[str, str] = {}

    def augment(x: str, banned: set[str]) -> bool:
        for y in adj[x]:
            if y in banned:
                continue
            banned.add(y)
            if y not in match_right or augment(match_right[y], banned):
                match_right[y] = x
                return True
        return False

    for x in g.left:
        augment(x, set())
    return frozenset((x, y) for y, x in match_right.items())


def koenig_cover(g: SplitBipartite, m: Matching) -> VertexCover:
    """A vertex cover with exactly one endpoint per edge of `m`.

    Built by alternating reachability from the unmatched left vertices: the
    cover is the unreached left vertices plus the reached right vertices.
    Raises NotMaximumMatchingError if `m` admits an augmenting path.
    """
    edge_set = set(g.edges)
    left_match: dict[str, str] = {}
    right_match: dict[str, str] = {}
    for x, y in m:
        if (x, y) not in edge_set:
            raise ValueError(f"matching edge ({x!r}, {y!r}) is not a graph edge")
        if x in left_match or y in right_match:
            raise ValueError("matching edges share a vertex")
        left_match[x] = y
        right_match[y] = x

    adj = _adjacency(g)
    frontier = sorted(x for x in g.left if x not in left_match)
    reached_left = set(frontier)
    reached_right: set[str] = set()
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y == left_match.get(x) or y in reached_right:
                    continue
                reached_right.add(y)
                if y not in right_match:
                    raise NotMaximumMatchingError(
                        f"augmenting path ends at unmatched vertex {y!r}"
                    )
                x2 = right_match[y]
                if x2 not in reached_left:
                    reached_left.add(x2)
                    nxt.append(x2)
        frontier = nxt

    cover: set[SplitVertex] = {
        (LEFT, x) for x in g.left if x in left_match and x not in reached_left
    }
    cover |= {(RIGHT, y) for y in reached_right}
    for x, y in g.edges:
        assert (LEFT, x) in cover or (RIGHT, y) in cover, "uncovered edge"
    return frozenset(cover)


def dilworth(p: Poset) -> tuple[tuple[Chain, ...], Antichain]:
    """Partition into width-many chains plus a maximum antichain certificate.

    Chains follow matched edges of the split graph as successor links; the
    antichain collects the elements neither of whose copies is in the Koenig
    cover.
    """
    if len(p) == 0:
        raise EmptyPosetError("cannot decompose the empty poset")
    g = split_bipartite(p)
    m = max_matching(g)
    cover = koenig_cover(g, m)
    successor = dict(m)
    has_predecessor = {y for _, y in m}
    chains = []
    for x in sorted(p.elements):
        if x in has_predecessor:
            continue
        chain = [x]
        while chain[-1] in successor:
            chain.append(successor[chain[-1]])
        chains.append(tuple(chain))
    antichain = frozenset(
        x for x in p.elements if (LEFT, x) not in cover and (RIGHT, x) not in cover
    )
    assert len(chains) == len(antichain), "duality certificate out of balance"
    return tuple(chains), antichain


def width(p: Poset) -> int:
    """Size of a maximum antichain."""
    return len(dilworth(p)[1])


def _all_chains(p: Poset) -> list[Chain]:
    """Every nonempty chain, in depth-first prefix order over sorted labels."""
    elems = sorted(p.elements)
    out: list[Chain] = []

    def extend(chain: list[str]) -> None:
        for y in elems:
            if p.lt(chain[-1], y):
                chain.append(y)
                out.append(tuple(chain))
                extend(chain)
                chain.pop()

    for x in elems:
        out.append((x,))
        extend([x])
    return out


def _antichain_partitions(p: Poset) -> Iterator[AntichainPartition]:
    """Set partitions whose blocks are antichains, in restricted-growth order
    over the canonically sorted elements."""
    elems = sorted(p.elements)
    n = len(elems)
    if n == 0:
        yield ()
        return
    blocks: list[list[str]] = []

    def rec(i: int) -> Iterator[AntichainPartition]:
        if i == n:
            yield tuple(frozenset(b) for b in blocks)
            return
        x = elems[i]
        for block in blocks:
            if all(p.compare(x, y) is Comparison.INC for y in block):
                block.append(x)
                yield from rec(i + 1)
                block.pop()
        blocks.append([x])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def k_witness_search(
    p: Poset, k: int, budget: SearchBudget | None = None
) -> KWitness | None:
    """Exhaustive search for a k-chain witness on a small poset.

    Enumerates antichain partitions in restricted-growth order and, per
    partition, backtracks over strictly increasing tuples of at most k
    chains. Returns the first witness found (hence the canonically least
    one) or None when the whole space is empty -- which for a finite poset
    would be a counterexample to the duality this searches for.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    budget = budget or SearchBudget()
    if len(p) > budget.max_elements:
        raise BudgetExceededError(
            f"poset has {len(p)} elements, budget allows {budget.max_elements}"
        )
    if k > budget.max_k:
        raise BudgetExceededError(f"k={k} above budget limit {budget.max_k}")
    deadline = (
        time.monotonic() + budget.time_limit_s if budget.time_limit_s else None
    )
    if len(p) == 0:
        return KWitness((), ())

    chains = _all_chains(p)
    for partition in _antichain_partitions(p):
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceededError("k-witness search ran out of time")
        target = [min(len(part), k) for part in partition]
        part_of = {
            x: idx for idx, part in enumerate(partition) for x in part
        }
        # parts hit by each chain; distinct since a chain meets an antichain
        # at most once
        hits = [tuple(part_of[x] for x in ch) for ch in chains]
        counts = [0] * len(partition)
        chosen: list[int] = []

        def dfs(start: int) -> bool:
            if counts == target:
                return True
            if len(chosen) == k:
                return False
            slots_left = k - len(chosen)
            if any(t - c > slots_left for c, t in zip(counts, target)):
                return False
            for idx in range(start, len(chains)):
                hs = hits[idx]
                if any(counts[h] + 1 > target[h] for h in hs):
                    continue
                for h in hs:
                    counts[h] += 1
                chosen.append(idx)
                if dfs(idx + 1):
                    return True
                chosen.pop()
                for h in hs:
                    counts[h] -= 1
            return False

        if dfs(0):
            return KWitness(tuple(chains[i] for i in chosen), partition)
    return None
