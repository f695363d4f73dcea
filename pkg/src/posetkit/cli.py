"""Command-line surface.

Posets travel as JSON documents {"elements": [...], "relations": [[x, y],
...]} whose relation pairs are raw strict assertions; loading always takes
the transitive closure and emission writes the transitive reduction, so a
round trip is exact. One subcommand per concept: witness, kwitness,
dilworth, mirsky, components, recognize, omega, layers, verify, generate,
export-dot.

Exit codes: 0 success, 1 validation failure, 2 input error, 3 budget
exceeded. All randomness is seed-parameterized. POSETKIT_BUDGET_MS caps the
exponential searches.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import random
import sys
from collections.abc import Sequence

from . import oracle, recognition
from .core import Poset, PosetError
from .decomposition import (
    GraphKind,
    combine_witnesses,
    graph_view,
    inc_components,
    linear_sum,
)
from .duality import (
    BudgetExceededError,
    SearchBudget,
    dilworth,
    k_witness_search,
    koenig_cover,
    max_matching,
    mirsky_levels,
    split_bipartite,
)
from .lazy import bfs_layers, builtin_certificate, builtin_family, prefix, verify_omega_split
from .recognition import Pattern, find_pattern, inc_degree_profile, is_semiorder
from .witness import WitnessMethod, build_witness, validate_k_witness, validate_witness

__all__ = [
    "document_to_poset",
    "export_dot",
    "generate_document",
    "main",
    "poset_to_document",
    "random_order_poset",
    "run",
]

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

_PATTERNS = {"3p1": Pattern.THREE_PLUS_ONE, "2p2": Pattern.TWO_PLUS_TWO}


# -- documents ----------------------------------------------------------------


def poset_to_document(p: Poset) -> dict:
    """Emit a poset as a document; relations are the covering pairs."""
    return {
        "elements": list(p.elements),
        "relations": [list(pair) for pair in sorted(p.hasse())],
    }


def document_to_poset(doc: object) -> Poset:
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    elements = doc.get("elements")
    relations = doc.get("relations", [])
    if not isinstance(elements, list) or not all(
        isinstance(e, str) for e in elements
    ):
        raise ValueError('"elements" must be a list of strings')
    if not isinstance(relations, list):
        raise ValueError('"relations" must be a list of [from, to] pairs')
    pairs = []
    for entry in relations:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, str) for x in entry)
        ):
            raise ValueError(f"bad relation entry {entry!r}")
        pairs.append((entry[0], entry[1]))
    return Poset.from_relations(elements, pairs)


def load_poset(path: str) -> Poset:
    with open(path, encoding="utf-8") as fh:
        return document_to_poset(json.load(fh))


# -- generators ---------------------------------------------------------------


def random_order_poset(n: int, seed: int, dim: int = 2) -> Poset:
    """Intersection of `dim` seeded random linear orders on n elements."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if dim < 1:
        raise ValueError("dim must be at least 1")
    rng = random.Random(seed)
    pad = max(1, len(str(max(n - 1, 0))))
    labels = [f"e{i:0{pad}d}" for i in range(n)]
    positions = []
    for _ in range(dim):
        perm = list(range(n))
        rng.shuffle(perm)
        positions.append({labels[x]: r for r, x in enumerate(perm)})
    pairs = [
        (x, y)
        for x in labels
        for y in labels
        if x != y and all(pos[x] < pos[y] for pos in positions)
    ]
    return Poset.from_relations(labels, pairs)


def _grid_poset(rows: int, cols: int) -> Poset:
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    labels = [f"g{r}_{c}" for r in range(rows) for c in range(cols)]
    pairs = []
    for r1 in range(rows):
        for c1 in range(cols):
            for r2 in range(rows):
                for c2 in range(cols):
                    if (r1, c1) != (r2, c2) and r1 <= r2 and c1 <= c2:
                        pairs.append((f"g{r1}_{c1}", f"g{r2}_{c2}"))
    return Poset.from_relations(labels, pairs)


def _bipartite_poset(n: int, seed: int, density: float) -> Poset:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    lower = [f"l{i}" for i in range((n + 1) // 2)]
    upper = [f"u{i}" for i in range(n // 2)]
    pairs = [
        (x, y) for x in lower for y in upper if rng.random() < density
    ]
    return Poset.from_relations(lower + upper, pairs)


def generate_document(
    model: str,
    *,
    n: int | None = None,
    seed: int = 0,
    dim: int = 2,
    rows: int = 2,
    cols: int = 2,
    density: float = 0.5,
    span: float | None = None,
) -> dict:
    """Deterministic test-corpus generator; same inputs, same document."""
    if model == "random-order":
        if n is None:
            raise ValueError("random-order needs --n")
        p = random_order_poset(n, seed, dim)
    elif model == "unit-semiorder":
        if n is None:
            raise ValueError("unit-semiorder needs --n")
        rng = random.Random(seed)
        spread = span if span is not None else max(n / 2.0, 1.0)
        reps = [rng.uniform(0.0, spread) for _ in range(n)]
        p = recognition.semiorder_from_unit_intervals(reps)
    elif model == "grid":
        p = _grid_poset(rows, cols)
    elif model == "bipartite":
        if n is None:
            raise ValueError("bipartite needs --n")
        p = _bipartite_poset(n, seed, density)
    else:
        raise ValueError(f"unknown model {model!r}")
    return poset_to_document(p)


# -- DOT export ---------------------------------------------------------------


def export_dot(p: Poset, view: str) -> str:
    """DOT text: the Hasse view as a bottom-to-top digraph, the inc and
    comp views as undirected graphs."""
    if view == "hasse":
        lines = ["digraph hasse {", "  rankdir=BT;"]
        for v in sorted(p.elements):
            lines.append(f'  "{v}";')
        for x, y in sorted(p.hasse()):
            lines.append(f'  "{x}" -> "{y}";')
    elif view in ("inc", "comp"):
        kind = GraphKind.INC if view == "inc" else GraphKind.COMP
        g = graph_view(p, kind)
        lines = [f"graph {view} {{"]
        for v in g.vertices:
            lines.append(f'  "{v}";')
        for x, y in sorted(g.edges):
            lines.append(f'  "{x}" -- "{y}";')
    else:
        raise ValueError(f"unknown view {view!r}")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- verify -------------------------------------------------------------------


def check_poset(p: Poset, k: int | None, budget: SearchBudget) -> list[str]:
    """Cross-check every fast path against its oracle on one poset."""
    fails: list[str] = []
    tag = f"poset{sorted(p.lt_pairs())}"

    def note(msg: str) -> None:
        fails.append(f"{tag}: {msg}")

    if len(p):
        for method in WitnessMethod:
            w = build_witness(p, method)
            report = validate_witness(p, w)
            if not report.is_valid:
                note(f"{method.value} witness invalid: {report.violations}")
        brute = oracle.bruteforce_witness(p)
        if brute is None:
            note("brute-force witness search found nothing")
        elif not validate_witness(p, brute).is_valid:
            note("brute-force witness does not validate")

        chains, antichain = dilworth(p)
        covered = sorted(x for chain in chains for x in chain)
        if covered != sorted(p.elements):
            note("dilworth chains do not partition the ground set")
        best = oracle.bruteforce_max_antichain(p)
        if not (len(chains) == len(antichain) == len(best)):
            note(
                f"duality mismatch: {len(chains)} chains,"
                f" {len(antichain)} antichain, {len(best)} brute"
            )
        g = split_bipartite(p)
        m = max_matching(g)
        cover = koenig_cover(g, m)
        if len(cover) != len(m):
            note("cover size differs from matching size")
        for x, y in m:
            if (("left", x) in cover) == (("right", y) in cover):
                note(f"matching edge ({x}, {y}) not covered exactly once")

        levels = mirsky_levels(p)
        if len(levels) != p.height() + 1:
            note("level count is not height + 1")
        top_chain = set(build_witness(p, WitnessMethod.DIRECT).chain)
        if any(len(level & top_chain) != 1 for level in levels):
            note("maximum chain does not meet every level exactly once")

    comps = inc_components(p).components
    rebuilt = linear_sum([p.induced(c) for c in comps])
    if rebuilt != p:
        note("component sum does not reconstruct the poset")
    if len(comps) >= 2:
        pieces = [
            (p.induced(c), build_witness(p.induced(c), WitnessMethod.DIRECT))
            for c in comps
        ]
        combined = combine_witnesses(pieces)
        if not validate_witness(p, combined).is_valid:
            note("combined per-component witness does not validate")

    for pattern in Pattern:
        if find_pattern(p, pattern) != oracle.bruteforce_pattern(p, pattern):
            note(f"pattern search disagrees with brute force on {pattern.value}")

    if k is not None:
        kw = k_witness_search(p, k, budget)
        if kw is None:
            note(f"no {k}-chain witness found")
        elif not validate_k_witness(p, kw, k).is_valid:
            note(f"{k}-chain witness does not validate")
    return fails


def _verify_worker(payload: tuple[tuple[str, ...], list[tuple[str, str]], int | None]) -> list[str]:
    elements, pairs, k = payload
    return check_poset(Poset.from_relations(elements, pairs), k, _env_budget())


def _run_verify(n: int, k: int | None, jobs: int) -> tuple[int, list[str]]:
    budget = _env_budget()
    posets = list(oracle.enumerate_posets(n))
    if jobs > 1:
        payloads = [(p.elements, sorted(p.lt_pairs()), k) for p in posets]
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_verify_worker, payloads, chunksize=64)
        failures = [msg for msgs in results for msg in msgs]
    else:
        failures = []
        for p in posets:
            failures.extend(check_poset(p, k, budget))
    return len(posets), failures


# -- argument handling ----------------------------------------------------------


def _env_budget() -> SearchBudget:
    raw = os.environ.get("POSETKIT_BUDGET_MS")
    if raw is None:
        return SearchBudget()
    try:
        return SearchBudget(time_limit_s=max(int(raw), 1) / 1000.0)
    except ValueError:
        raise ValueError(f"POSETKIT_BUDGET_MS must be an integer, got {raw!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetkit",
        description="chain-antichain duality toolkit for finite posets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, *, needs_input: bool = False, help: str = "") -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help)
        if needs_input:
            cmd.add_argument("input", nargs="?", help="poset document (JSON)")
            cmd.add_argument("--family", choices=("ladder", "ladder-top", "omega1", "z"))
            cmd.add_argument("--prefix", type=int, default=8, metavar="N")
        cmd.add_argument("--json", action="store_true", help="compact machine output")
        return cmd

    cmd = add("witness", needs_input=True, help="chain + antichain partition witness")
    cmd.add_argument("--method", choices=("direct", "decomposed"), default="direct")

    cmd = add("kwitness", needs_input=True, help="k-chain witness search")
    cmd.add_argument("--k", type=int, default=1)

    add("dilworth", needs_input=True, help="minimum chain cover + max antichain")
    add("mirsky", needs_input=True, help="height-level antichain partition")
    add("components", needs_input=True, help="incomparability components in order")

    cmd = add("recognize", needs_input=True, help="semiorder / forbidden patterns")
    cmd.add_argument("--pattern", choices=sorted(_PATTERNS))

    cmd = add("omega", help="prefix split report for an embedded top chain")
    cmd.add_argument("--family", required=True, choices=("ladder-top", "omega1"))
    cmd.add_argument("--prefix", type=int, default=10, metavar="N")

    cmd = add("layers", needs_input=True, help="BFS distance layers of a graph view")
    cmd.add_argument("--view", choices=("inc", "comp"), default="inc")
    cmd.add_argument("--start", help="start vertex (default: least label)")

    cmd = add("verify", help="exhaustive oracle cross-checks at one size")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--k", type=int)
    cmd.add_argument("--jobs", type=int, default=1)

    cmd = add("generate", help="seeded random poset documents")
    cmd.add_argument(
        "--model",
        required=True,
        choices=("random-order", "unit-semiorder", "grid", "bipartite"),
    )
    cmd.add_argument("--n", type=int)
    cmd.add_argument("--seed", type=int, default=0)
    cmd.add_argument("--dim", type=int, default=2)
    cmd.add_argument("--rows", type=int, default=2)
    cmd.add_argument("--cols", type=int, default=2)
    cmd.add_argument("--density", type=float, default=0.5)
    cmd.add_argument("--span", type=float)

    cmd = add("export-dot", needs_input=True, help="DOT text for a view")
    cmd.add_argument("--view", choices=("hasse", "inc", "comp"), default="hasse")

    return parser


def _input_poset(args: argparse.Namespace) -> Poset:
    if getattr(args, "input", None):
        return load_poset(args.input)
    if getattr(args, "family", None):
        return prefix(builtin_family(args.family), args.prefix)
    raise ValueError("supply an input document or --family/--prefix")


def _emit(args: argparse.Namespace, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _sorted_parts(partition) -> list[list[str]]:
    return [sorted(part) for part in partition]


# -- command implementations ----------------------------------------------------


def _cmd_witness(args: argparse.Namespace) -> int:
    p = _input_poset(args)
    method = WitnessMethod(args.method)
    w = build_witness(p, method)
    report = validate_witness(p, w)
    _emit(
        args,
        {
            "chain": list(w.chain),
            "partition": _sorted_parts(w.partition),
            "method": method.value,
            "valid": report.is_valid,
        },
    )
    return EXIT_OK if report.is_valid else EXIT_INVALID


def _cmd_kwitness(args: argparse.Namespace) -> int:
    p = _input_poset(args)
    kw = k_witness_search(p, args.k, _env_budget())
    if kw is None:
        _emit(args, {"found": False, "k": args.k})
        return EXIT_INVALID
    report = validate_k_witness(p, kw, args.k)
    _emit(
        args,
        {
            "found": True,
            "k": args.k,
            "chains": [list(c) for c in kw.chains],
            "partition": _sorted_parts(kw.partition),
            "valid": report.is_valid,
        },
    )
    return EXIT_OK if report.is_valid else EXIT_INVALID


def _cmd_dilworth(args: argparse.Namespace) -> int:
    p = _input_poset(args)
    chains, antichain = dilworth(p)
    _emit(
        args,
        {
            "chains": [list(c) for c in chains],
            "antichain": sorted(antichain),
            "width": len(antichain),
        },
    )
    return EXIT_OK


def _cmd_mirsky(args: argparse.Namespace) -> int:
    p = _input_poset(args)
    levels = mirsky_levels(p)
    _emit(args, {"levels": _sorted_parts(levels), "height": len(levels) - 1})
    return EXIT_OK


def _cmd_components(args: argparse.Namespace) -> int:
    p = _input_poset(args)
    cc = inc_components(p)
    _emit(args, {"components": [list(c) for c in cc.components]})
    return EXIT_OK


def _cmd_recognize(args: argparse.Namespace) -> int:
    p = _input_poset(args)
    if args.pattern:
        pat = _PATTERNS[args.pattern]
        emb = find_pattern(p, pat)
        _emit(
            args,
            {
                "pattern": args.pattern,
                "embedding": list(emb.elements) if emb else None,
            },
        )
        return EXIT_OK
    profile = inc_degree_profile(p)
    three = find_pattern(p, Pattern.THREE_PLUS_ONE)
    two = find_pattern(p, Pattern.TWO_PLUS_TWO)
    _emit(
        args,
        {
            "is_semiorder": is_semiorder(p),
            "three_plus_one": list(three.elements) if three else None,
            "two_plus_two": list(two.elements) if two else None,
            "max_inc_degree": profile.max_degree,
            "mean_inc_degree": profile.mean_degree,
        },
    )
    return EXIT_OK


def _cmd_omega(args: argparse.Namespace) -> int:
    lp = builtin_family(args.family)
    cert = builtin_certificate(args.family)
    report = verify_omega_split(lp, cert, args.prefix)
    _emit(
        args,
        {
            "family": args.family,
            "prefix": report.prefix_size,
            "initial_size": len(report.initial),
            "final": sorted(report.final),
            "crossing_inc_edges": report.crossing_inc_edges,
            "domination_violations": report.domination_violations,
        },
    )
    clean = report.crossing_inc_edges == 0 and report.domination_violations == 0
    return EXIT_OK if clean else EXIT_INVALID


def _cmd_layers(args: argparse.Namespace) -> int:
    p = _input_poset(args)
    kind = GraphKind.INC if args.view == "inc" else GraphKind.COMP
    g = graph_view(p, kind)
    if not g.vertices:
        raise ValueError("cannot run BFS on an empty poset")
    start = args.start if args.start else g.vertices[0]
    layering = bfs_layers(g, start)
    _emit(
        args,
        {
            "view": args.view,
            "start": start,
            "layers": [list(layer) for layer in layering.layers],
            "unreachable": list(layering.unreachable),
        },
    )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    checked, failures = _run_verify(args.n, args.k, max(args.jobs, 1))
    if args.json:
        print(
            json.dumps(
                {"checked": checked, "failures": failures}, sort_keys=True
            )
        )
    else:
        print(f"{checked} posets checked, {len(failures)} failures")
        for msg in failures:
            print(f"  {msg}")
    return EXIT_OK if not failures else EXIT_INVALID


def _cmd_generate(args: argparse.Namespace) -> int:
    doc = generate_document(
        args.model,
        n=args.n,
        seed=args.seed,
        dim=args.dim,
        rows=args.rows,
        cols=args.cols,
        density=args.density,
        span=args.span,
    )
    _emit(args, doc)
    return EXIT_OK


def _cmd_export_dot(args: argparse.Namespace) -> int:
    p = _input_poset(args)
    sys.stdout.write(export_dot(p, args.view))
    return EXIT_OK


_COMMANDS = {
    "witness": _cmd_witness,
    "kwitness": _cmd_kwitness,
    "dilworth": _cmd_dilworth,
    "mirsky": _cmd_mirsky,
    "components": _cmd_components,
    "recognize": _cmd_recognize,
    "omega": _cmd_omega,
    "layers": _cmd_layers,
    "verify": _cmd_verify,
    "generate": _cmd_generate,
    "export-dot": _cmd_export_dot,
}


def run(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BudgetExceededError as exc:
        _report_error(args, exc)
        return EXIT_BUDGET
    except (PosetError, ValueError, OSError, json.JSONDecodeError) as exc:
        _report_error(args, exc)
        return EXIT_INPUT


def _report_error(args: argparse.Namespace, exc: Exception) -> None:
    if getattr(args, "json", False):
        obj = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(obj, sort_keys=True), file=sys.stderr)
    else:
        print(f"posetkit: error: {exc}", file=sys.stderr)


def main() -> None:
    sys.exit(run())
