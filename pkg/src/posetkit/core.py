"""Finite poset data model.

Elements are opaque string labels. The strict order is kept transitively
closed internally (as per-element bitmasks), so every comparability query is
a constant-time lookup. Ties anywhere in the library are broken by the
natural total order on labels, which makes every operation reproducible.

All values are immutable after construction; operations are pure functions
and safe for concurrent reads.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from enum import Enum
from functools import cached_property

__all__ = [
    "Antichain",
    "AntichainPartition",
    "Chain",
    "Comparison",
    "CycleError",
    "DuplicateLabelError",
    "EmptyPosetError",
    "Poset",
    "PosetError",
    "UnknownElementError",
]

# A chain is a tuple of labels, strictly increasing in the order; an
# antichain is a frozenset of pairwise incomparable labels.
Chain = tuple[str, ...]
Antichain = frozenset[str]
AntichainPartition = tuple[Antichain, ...]


class PosetError(Exception):
    """Base class for all order-theoretic errors raised by this package."""


class DuplicateLabelError(PosetError):
    """Two elements of one poset carry the same label."""


class UnknownElementError(PosetError):
    """A label was used that does not belong to the poset at hand."""


class EmptyPosetError(PosetError):
    """The operation is undefined on the empty poset."""


class CycleError(PosetError):
    """The input relation is not acyclic; carries one offending cycle."""

    def __init__(self, cycle: Iterable[str]):
        self.cycle = tuple(cycle)
        loop = " < ".join(self.cycle) + f" < {self.cycle[0]}"
        super().__init__(f"relation contains a cycle: {loop}")


class Comparison(Enum):
    """Outcome of comparing two elements of a poset."""

    LT = "<"
    GT = ">"
    EQ = "="
    INC = "||"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite strict partial order on string labels.

    Construct with :meth:`from_relations`; the raw pairs are transitively
    closed and checked for cycles. The constructor itself trusts its caller
    to pass an already-closed relation (as upward bitmasks over element
    indices) and is meant for internal use.

    Two posets are equal when they have the same element set and the same
    strict relation; the element *sequence* is presentation order only and
    does not take part in equality.
    """

    def __init__(self, elements: Iterable[str], up_masks: Iterable[int]):
        self._elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self._elements)}
        self._up = list(up_masks)
        n = len(self._elements)
        down = [0] * n
        for i in range(n):
            for j in _bits(self._up[i]):
                down[j] |= 1 << i
        self._down = down

    @classmethod
    def from_relations(
        cls, elements: Iterable[str], pairs: Iterable[tuple[str, str]]
    ) -> "Poset":
        """Build a poset from raw strict pairs, taking the transitive closure.

        Raises DuplicateLabelError for repeated labels, UnknownElementError
        for pair endpoints outside `elements`, and CycleError (carrying one
        offending cycle) if the closure would violate irreflexivity.
        """
        elems = tuple(elements)
        index: dict[str, int] = {}
        for e in elems:
            if e in index:
                raise DuplicateLabelError(f"duplicate label {e!r}")
            index[e] = len(index)
        n = len(elems)
        raw = [0] * n
        for x, y in pairs:
            if x not in index:
                raise UnknownElementError(f"unknown element {x!r}")
            if y not in index:
                raise UnknownElementError(f"unknown element {y!r}")
            if x == y:
                raise CycleError((x,))
            raw[index[x]] |= 1 << index[y]
        up = list(raw)
        for k in range(n):
            bit_k = 1 << k
            for i in range(n):
                if up[i] & bit_k:
                    up[i] |= up[k]
        offenders = [i for i in range(n) if up[i] >> i & 1]
        if offenders:
            start = min(offenders, key=lambda i: elems[i])
            raise CycleError(_shortest_cycle(elems, index, raw, start))
        return cls(elems, up)

    # -- basic queries ----------------------------------------------------

    @property
    def elements(self) -> tuple[str, ...]:
        return self._elements

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self._elements)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def _require(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElementError(f"unknown element {label!r}") from None

    def lt(self, x: str, y: str) -> bool:
        """True iff x is strictly below y."""
        return bool(self._up[self._require(x)] >> self._require(y) & 1)

    def compare(self, x: str, y: str) -> Comparison:
        """Classify the pair: LT, GT, EQ, or INC(omparable)."""
        i, j = self._require(x), self._require(y)
        if i == j:
            return Comparison.EQ
        if self._up[i] >> j & 1:
            return Comparison.LT
        if self._up[j] >> i & 1:
            return Comparison.GT
        return Comparison.INC

    def lt_pairs(self) -> frozenset[tuple[str, str]]:
        """All strict pairs (x, y) with x < y, transitively closed."""
        e = self._elements
        return frozenset(
            (e[i], e[j]) for i in range(len(e)) for j in _bits(self._up[i])
        )

    def relation_count(self) -> int:
        return sum(m.bit_count() for m in self._up)

    # -- derived structure -------------------------------------------------

    def down_set(self, labels: Iterable[str]) -> frozenset[str]:
        """All elements below-or-equal to some member of `labels`."""
        mask = 0
        for x in labels:
            i = self._require(x)
            mask |= self._down[i] | (1 << i)
        return frozenset(self._elements[j] for j in _bits(mask))

    def incomparables(self, x: str) -> frozenset[str]:
        """The incomparability-graph neighbourhood of x."""
        i = self._require(x)
        full = (1 << len(self._elements)) - 1
        mask = full & ~(self._up[i] | self._down[i] | (1 << i))
        return frozenset(self._elements[j] for j in _bits(mask))

    def dual(self) -> "Poset":
        """The same elements with the order reversed."""
        return Poset(self._elements, self._down)

    def induced(self, subset: Iterable[str]) -> "Poset":
        """Restriction of the order to `subset`, presentation order kept."""
        keep = sorted(self._require(x) for x in set(subset))
        pos = {old: new for new, old in enumerate(keep)}
        up = []
        for old in keep:
            m = 0
            for oldj in _bits(self._up[old]):
                if oldj in pos:
                    m |= 1 << pos[oldj]
            up.append(m)
        return Poset(tuple(self._elements[i] for i in keep), up)

    def hasse(self) -> frozenset[tuple[str, str]]:
        """Covering pairs: x < y with nothing strictly between."""
        e = self._elements
        covers = set()
        for i in range(len(e)):
            for j in _bits(self._up[i]):
                if self._up[i] & self._down[j] == 0:
                    covers.add((e[i], e[j]))
        return frozenset(covers)

    @cached_property
    def _heights(self) -> tuple[int, ...]:
        n = len(self._elements)
        h = [0] * n
        for i in sorted(range(n), key=lambda i: self._down[i].bit_count()):
            below = [h[j] for j in _bits(self._down[i])]
            h[i] = max(below) + 1 if below else 0
        return tuple(h)

    def element_height(self, x: str) -> int:
        """Edge count of a longest chain ending at x."""
        return self._heights[self._require(x)]

    def height(self) -> int:
        """Edge count of a longest chain; undefined on the empty poset."""
        if not self._elements:
            raise EmptyPosetError("height of the empty poset is undefined")
        return max(self._heights)

    # -- validity predicates ------------------------------------------------

    def is_chain(self, members: Iterable[str]) -> bool:
        """True iff `members` lists distinct elements strictly increasing."""
        seq = tuple(members)
        if len(set(seq)) != len(seq):
            return False
        return all(self.lt(a, b) for a, b in zip(seq, seq[1:]))

    def is_antichain(self, members: Iterable[str]) -> bool:
        """True iff all distinct pairs of `members` are incomparable."""
        seq = sorted(set(members))
        for k, x in enumerate(seq):
            for y in seq[k + 1 :]:
                if self.compare(x, y) is not Comparison.INC:
                    return False
        return True

    # -- identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        if self._elements == other._elements:
            return self._up == other._up
        return (
            set(self._elements) == set(other._elements)
            and self.lt_pairs() == other.lt_pairs()
        )

    def __hash__(self) -> int:
        return hash((frozenset(self._elements), self.lt_pairs()))

    def __repr__(self) -> str:
        return f"Poset({len(self._elements)} elements, {self.relation_count()} relations)"


def _shortest_cycle(
    elems: tuple[str, ...], index: dict[str, int], raw: list[int], start: int
) -> tuple[str, ...]:
    """Shortest cycle through `start` in the raw (pre-closure) digraph."""
    order = sorted(range(len(elems)), key=lambda i: elems[i])
    parent: dict[int, int] = {}
    frontier = [start]
    seen = {start}
    while frontier:
        nxt = []
        for u in frontier:
            for v in order:
                if not raw[u] >> v & 1:
                    continue
                if v == start:
                    path = [u]
                    while path[-1] != start:
                        path.append(parent[path[-1]])
                    return tuple(elems[i] for i in reversed(path))
                if v not in seen:
                    seen.add(v)
                    parent[v] = u
                    nxt.append(v)
        frontier = nxt
    raise AssertionError("no cycle found from a vertex known to lie on one")
