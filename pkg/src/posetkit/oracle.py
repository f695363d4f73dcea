"""Independent brute-force reference implementations.

Everything here is ground truth for the fast paths elsewhere and therefore
deliberately shares no algorithmic code with them: partitions and chains
are re-enumerated from scratch, patterns are found by scanning all ordered
4-tuples, and the poset universe itself is generated by backtracking over
orientations of the unordered pairs.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from string import ascii_lowercase

from .core import Comparison, Poset
from .decomposition import Witness
from .duality import BudgetExceededError
from .recognition import Pattern, PatternEmbedding

__all__ = [
    "bruteforce_max_antichain",
    "bruteforce_pattern",
    "bruteforce_witness",
    "enumerate_posets",
]

LT, GT, INC = Comparison.LT, Comparison.GT, Comparison.INC


def enumerate_posets(n: int, allow_large: bool = False) -> Iterator[Poset]:
    """Every labeled strict partial order on n canonical letter labels.

    Each unordered pair is oriented one of three ways (incomparable, up, or
    down); partial orientations are pruned as soon as a decided triangle
    violates transitivity, so exactly the valid orders reach the leaves,
    each exactly once, in a fixed order. n is capped at 6 (7 with
    `allow_large`) because the count explodes.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = 7 if allow_large else 6
    if n > cap:
        raise BudgetExceededError(f"enumeration of size {n} exceeds cap {cap}")
    labels = tuple(ascii_lowercase[:n])
    if n == 0:
        yield Poset((), [])
        return
    pair_list = [(i, j) for j in range(n) for i in range(j)]
    up = [0] * n  # up[a] bit b set means a < b

    def lt(a: int, b: int) -> bool:
        return bool(up[a] >> b & 1)

    def triangle_ok(i: int, j: int) -> bool:
        # pairs are assigned in order (0,1),(0,2),(1,2),(0,3),...; at pair
        # (i,j) the triple {x,i,j} is fully decided exactly for x < i
        for x in range(i):
            for a, b, c in (
                (x, i, j), (x, j, i), (i, x, j),
                (i, j, x), (j, x, i), (j, i, x),
            ):
                if lt(a, b) and lt(b, c) and not lt(a, c):
                    return False
        return True

    def rec(t: int) -> Iterator[Poset]:
        if t == len(pair_list):
            yield Poset(labels, list(up))
            return
        i, j = pair_list[t]
        for choice in range(3):  # incomparable, i < j, j < i
            if choice == 1:
                up[i] |= 1 << j
            elif choice == 2:
                up[j] |= 1 << i
            if triangle_ok(i, j):
                yield from rec(t + 1)
            if choice == 1:
                up[i] &= ~(1 << j)
            elif choice == 2:
                up[j] &= ~(1 << i)

    yield from rec(0)


def bruteforce_max_antichain(p: Poset):
    """Maximum antichain by include-first backtracking over sorted labels.

    Keeping the first subset found of each record size makes the result the
    canonically least maximum antichain.
    """
    if len(p) > 20:
        raise BudgetExceededError(f"{len(p)} elements is past the brute limit")
    labs = sorted(p.elements)
    best: list[str] = []

    def rec(i: int, current: list[str]) -> None:
        nonlocal best
        if len(current) + (len(labs) - i) <= len(best):
            return
        if i == len(labs):
            best = list(current)
            return
        x = labs[i]
        if all(p.compare(x, y) is INC for y in current):
            current.append(x)
            rec(i + 1, current)
            current.pop()
        rec(i + 1, current)

    rec(0, [])
    return frozenset(best)


def _set_partitions(items: list[str]) -> Iterator[list[list[str]]]:
    """All set partitions via restricted-growth codes, iteratively."""
    n = len(items)
    if n == 0:
        yield []
        return
    code = [0] * n
    while True:
        blocks: dict[int, list[str]] = {}
        for x, c in zip(items, code):
            blocks.setdefault(c, []).append(x)
        yield [blocks[c] for c in sorted(blocks)]
        i = n - 1
        while i > 0:
            if code[i] <= max(code[:i]):
                code[i] += 1
                for k in range(i + 1, n):
                    code[k] = 0
                break
            i -= 1
        else:
            return


def bruteforce_witness(p: Poset) -> Witness | None:
    """Exhaustive search for a chain meeting every part of some antichain
    partition. None would disprove the finite duality; it is never expected.
    """
    if len(p) > 6:
        raise BudgetExceededError(f"{len(p)} elements is past the brute limit")
    labs = sorted(p.elements)
    n = len(labs)
    if n == 0:
        return Witness((), ())

    def is_chain_subset(members: list[str]) -> bool:
        return all(
            p.compare(a, b) in (LT, GT)
            for a, b in itertools.combinations(members, 2)
        )

    chains: list[tuple[str, ...]] = []
    for mask in range(1, 1 << n):
        members = [labs[i] for i in range(n) if mask >> i & 1]
        if is_chain_subset(members):
            chains.append(
                tuple(sorted(members, key=lambda x: sum(p.lt(y, x) for y in members)))
            )

    for blocks in _set_partitions(labs):
        if not all(p.is_antichain(b) for b in blocks):
            continue
        block_sets = [set(b) for b in blocks]
        for chain in chains:
            cs = set(chain)
            if all(cs & b for b in block_sets):
                return Witness(chain, tuple(frozenset(b) for b in blocks))
    return None


def bruteforce_pattern(p: Poset, pattern: Pattern) -> PatternEmbedding | None:
    """Naive scan of all ordered 4-tuples for the pattern, least tuple first."""
    if len(p) > 10:
        raise BudgetExceededError(f"{len(p)} elements is past the brute limit")
    for quad in itertools.permutations(sorted(p.elements), 4):
        a, b, c, d = quad
        if pattern is Pattern.THREE_PLUS_ONE:
            ok = (
                p.lt(a, b)
                and p.lt(b, c)
                and p.compare(d, a) is INC
                and p.compare(d, b) is INC
                and p.compare(d, c) is INC
            )
        elif pattern is Pattern.TWO_PLUS_TWO:
            ok = (
                p.lt(a, b)
                and p.lt(c, d)
                and p.compare(a, c) is INC
                and p.compare(a, d) is INC
                and p.compare(b, c) is INC
                and p.compare(b, d) is INC
            )
        else:
            raise ValueError(f"unknown pattern {pattern!r}")
        if ok:
            return PatternEmbedding(pattern, quad)
    return None
