"""Lazily-defined countable posets, consumed through finite prefixes.

A LazyPoset is an enumeration of labels plus a comparability oracle.
Prefixes materialize as ordinary finite posets (with the oracle checked for
consistency on the prefix), and `verify_omega_split` checks, on a prefix,
the splitting behaviour of an embedded ascending chain with a top element:
the down-set of the chain should see no incomparability edge towards, and
be entirely below, the rest of the prefix.

Oracles must be pure; truncation and verification are read-only.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .core import Comparison, Poset, PosetError, UnknownElementError
from .decomposition import GraphView

__all__ = [
    "BfsLayering",
    "CertificateViolationError",
    "FAMILIES",
    "LazyPoset",
    "OmegaCertificate",
    "OracleInconsistencyError",
    "SplitReport",
    "UnknownFamilyError",
    "bfs_layers",
    "builtin_certificate",
    "builtin_family",
    "prefix",
    "verify_omega_split",
]

LT, GT, EQ, INC = Comparison.LT, Comparison.GT, Comparison.EQ, Comparison.INC


class OracleInconsistencyError(PosetError):
    """The comparability oracle contradicts itself on a finite prefix."""


class CertificateViolationError(PosetError):
    """An omega-plus-one certificate fails its invariants on a prefix."""


class UnknownFamilyError(PosetError):
    """No built-in family (or certificate) under that name."""


@dataclass(frozen=True)
class LazyPoset:
    """A countable poset given by an enumeration and a comparison oracle.

    `element_at(i)` names the i-th element (labels must be pairwise
    distinct); `compare(x, y)` must be symmetric-consistent and transitive
    on every finite prefix, which `prefix` checks by default.
    """

    element_at: Callable[[int], str]
    compare: Callable[[str, str], Comparison]
    name: str = ""


@dataclass(frozen=True)
class OmegaCertificate:
    """An embedded copy of an infinite ascending chain with a top above it.

    `ascending(j)` is the enumeration index of the j-th chain element;
    indices must be strictly increasing. `top` is the label of the element
    claimed to lie above every chain element.
    """

    ascending: Callable[[int], int]
    top: str


@dataclass(frozen=True)
class SplitReport:
    """Prefix-level split induced by a certificate chain.

    `initial` is the part of the prefix in the down-set of the chain
    elements visible in the prefix; `final` is the rest. The two counts
    record incomparability edges across the split and pairs (i, f) where i
    fails to lie below f.
    """

    prefix_size: int
    initial: tuple[str, ...]
    final: tuple[str, ...]
    crossing_inc_edges: int
    domination_violations: int


def _prefix_labels(lp: LazyPoset, n: int) -> list[str]:
    if n < 0:
        raise ValueError("prefix size must be nonnegative")
    labels = [lp.element_at(i) for i in range(n)]
    if len(set(labels)) != len(labels):
        raise OracleInconsistencyError("enumeration repeats a label")
    return labels


def prefix(lp: LazyPoset, n: int, check: bool = True) -> Poset:
    """The finite poset on the first n enumerated elements.

    With `check` (the default) the oracle is verified on the prefix:
    EQ exactly on the diagonal, LT/GT mirror each other, and the relation
    is transitive. The check costs O(n^3) and can be skipped for trusted
    oracles at large n.
    """
    labels = _prefix_labels(lp, n)
    cmp = lp.compare
    up = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            c = cmp(labels[i], labels[j])
            if c is EQ:
                raise OracleInconsistencyError(
                    f"distinct elements {labels[i]!r}, {labels[j]!r} compare EQ"
                )
            if c is LT:
                up[i] |= 1 << j
            elif c is GT:
                up[j] |= 1 << i
            if check:
                mirror = cmp(labels[j], labels[i])
                expected = {LT: GT, GT: LT, INC: INC}[c]
                if mirror is not expected:
                    raise OracleInconsistencyError(
                        f"asymmetric answers on ({labels[i]!r}, {labels[j]!r}):"
                        f" {c.name} vs {mirror.name}"
                    )
    if check:
        for i in range(n):
            if cmp(labels[i], labels[i]) is not EQ:
                raise OracleInconsistencyError(
                    f"{labels[i]!r} does not compare EQ to itself"
                )
        for i in range(n):
            rest = up[i]
            while rest:
                low = rest & -rest
                k = low.bit_length() - 1
                rest ^= low
                gap = up[k] & ~up[i]
                if gap:
                    j = (gap & -gap).bit_length() - 1
                    raise OracleInconsistencyError(
                        f"not transitive: {labels[i]!r} < {labels[k]!r} <"
                        f" {labels[j]!r} but not {labels[i]!r} < {labels[j]!r}"
                    )
    return Poset(labels, up)


def verify_omega_split(lp: LazyPoset, cert: OmegaCertificate, n: int) -> SplitReport:
    """Split the prefix along the certificate chain and count defects.

    The initial part is the down-set, within the prefix, of the certificate
    chain elements enumerated before position n (the top excluded); the
    final part is everything else. For a family whose incomparability graph
    is locally finite the expected counts are both zero. Works directly on
    the oracle, so large prefixes never materialize a relation matrix.
    """
    labels = _prefix_labels(lp, n)
    cmp = lp.compare
    chain: list[str] = []
    j = 0
    prev = -1
    while True:
        idx = cert.ascending(j)
        if idx <= prev:
            raise CertificateViolationError(
                "certificate indices must be strictly increasing"
            )
        if idx >= n:
            break
        lab = labels[idx]
        if lab == cert.top:
            raise CertificateViolationError("top element listed on the chain")
        chain.append(lab)
        prev = idx
        j += 1
    for a, b in zip(chain, chain[1:]):
        if cmp(a, b) is not LT:
            raise CertificateViolationError(
                f"chain elements {a!r}, {b!r} are not ascending"
            )
    for c in chain:
        if cmp(c, cert.top) is not LT:
            raise CertificateViolationError(
                f"chain element {c!r} is not below the top {cert.top!r}"
            )

    initial: list[str] = []
    final: list[str] = []
    for lab in labels:
        member = False
        for c in reversed(chain):
            r = cmp(lab, c)
            if r is LT or r is EQ:
                member = True
                break
        (initial if member else final).append(lab)
    crossing = 0
    violations = 0
    for a in initial:
        for b in final:
            r = cmp(a, b)
            if r is INC:
                crossing += 1
            if r is not LT:
                violations += 1
    return SplitReport(
        prefix_size=n,
        initial=tuple(initial),
        final=tuple(final),
        crossing_inc_edges=crossing,
        domination_violations=violations,
    )


@dataclass(frozen=True)
class BfsLayering:
    """Breadth-first distance layers from a start vertex; layer i holds the
    vertices at graph distance i. Vertices in no layer are unreachable."""

    layers: tuple[tuple[str, ...], ...]
    unreachable: tuple[str, ...]


def bfs_layers(g: GraphView, start: str) -> BfsLayering:
    if start not in set(g.vertices):
        raise UnknownElementError(f"unknown vertex {start!r}")
    adj: dict[str, set[str]] = {v: set() for v in g.vertices}
    for x, y in g.edges:
        adj[x].add(y)
        adj[y].add(x)
    layers = [(start,)]
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = sorted(
            {w for v in frontier for w in adj[v]} - seen
        )
        if not nxt:
            break
        seen.update(nxt)
        layers.append(tuple(nxt))
        frontier = nxt
    unreachable = tuple(sorted(set(g.vertices) - seen))
    return BfsLayering(tuple(layers), unreachable)


# -- built-in families -------------------------------------------------------

FAMILIES = ("ladder", "ladder-top", "omega1", "z")

_TOP = "top"


def _ladder_cmp(x: str, y: str) -> Comparison:
    i, j = int(x[1:]), int(y[1:])
    if i == j:
        return EQ
    if j >= i + 2:
        return LT
    if i >= j + 2:
        return GT
    return INC


def _ladder_top_cmp(x: str, y: str) -> Comparison:
    if x == _TOP and y == _TOP:
        return EQ
    if x == _TOP:
        return GT
    if y == _TOP:
        return LT
    return _ladder_cmp(x, y)


def _staggered_rung(pos: int) -> int:
    # Even rungs run three positions ahead of the odd rungs, so that every
    # odd rung enumerated already has an even rung two above it in the
    # prefix; that keeps each prefix inside the down-set of the even chain.
    if pos == 1:
        return 0
    if pos == 2:
        return 2
    return pos + 1 if pos % 2 else pos - 3


def _z_value(i: int) -> int:
    return -((i + 1) // 2) if i % 2 else i // 2


def _int_cmp(a: int, b: int) -> Comparison:
    if a == b:
        return EQ
    return LT if a < b else GT


def builtin_family(name: str) -> LazyPoset:
    """One of the shipped countable posets.

    ladder:      rungs x0, x1, ... with xi < xj iff j >= i + 2; the
                 incomparability graph is the path on consecutive rungs.
    ladder-top:  the ladder plus a greatest element, enumerated top-first
                 with even rungs staggered ahead of odd ones.
    omega1:      the chain 0 < 1 < 2 < ... with a greatest element, top
                 enumerated first.
    z:           the chain of all integers, enumerated 0, -1, 1, -2, 2, ...
    """
    if name == "ladder":
        return LazyPoset(lambda i: f"x{i}", _ladder_cmp, name)
    if name == "ladder-top":
        return LazyPoset(
            lambda i: _TOP if i == 0 else f"x{_staggered_rung(i)}",
            _ladder_top_cmp,
            name,
        )
    if name == "omega1":

        def omega_cmp(x: str, y: str) -> Comparison:
            if x == _TOP or y == _TOP:
                return EQ if x == y else GT if x == _TOP else LT
            return _int_cmp(int(x), int(y))

        return LazyPoset(
            lambda i: _TOP if i == 0 else str(i - 1), omega_cmp, name
        )
    if name == "z":
        return LazyPoset(
            lambda i: str(_z_value(i)),
            lambda x, y: _int_cmp(int(x), int(y)),
            name,
        )
    raise UnknownFamilyError(f"unknown family {name!r}")


def builtin_certificate(name: str) -> OmegaCertificate:
    """The canonical embedded-ascending-chain certificate of a family."""
    if name == "ladder-top":
        # chain = the even rungs; their enumeration positions are 1, 2, 3,
        # 5, 7, ...
        return OmegaCertificate(
            ascending=lambda j: j + 1 if j < 2 else 2 * j - 1, top=_TOP
        )
    if name == "omega1":
        return OmegaCertificate(ascending=lambda j: j + 1, top=_TOP)
    if name in FAMILIES:
        raise UnknownFamilyError(f"family {name!r} has no embedded top chain")
    raise UnknownFamilyError(f"unknown family {name!r}")
