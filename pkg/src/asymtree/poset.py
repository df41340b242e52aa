"""The leaf-deletion poset over asymmetric trees.

Elements are isomorphism classes of asymmetric trees, keyed by canonical
code; the order is generated by single safe-leaf deletions (cover edges).
This module verifies, at desk scale, that E7 is the unique minimal element:
every asymmetric tree reduces to E7 through asymmetric intermediates, and
conversely can be grown from E7.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from asymtree import canon, enumeration, kernel, tree
from asymtree.e7 import e7_code, e7_tree
from asymtree.errors import NotAsymmetric, OutOfRange, StuckNotAtE7
from asymtree.tree import Tree


@dataclass(frozen=True)
class PosetLevel:
    """All asymmetric classes on n vertices, sorted by canonical code."""

    n: int
    nodes: tuple[tuple[str, Tree], ...]


@dataclass(frozen=True)
class CoverEdge:
    """One poset cover: deleting witness_leaf from the upper class's
    representative yields the lower class."""

    lower: str
    upper: str
    witness_leaf: int


@dataclass(frozen=True)
class ReductionStep:
    leaf: int
    id_map: dict[int, int]


@dataclass(frozen=True)
class ReductionTrace:
    """A leaf-deletion sequence from `start` down to the E7 class.

    Each step names the deleted leaf in the labeling current at that step
    plus the id compaction applied afterwards, so the trace replays
    exactly.
    """

    start: Tree
    steps: tuple[ReductionStep, ...]
    end_code: str


def _delete_leaf_adjacency(adj, l):
    """Adjacency of the tree minus leaf l, ids compacted; no Tree built."""
    out = []
    for v in range(len(adj)):
        if v == l:
            continue
        out.append([w if w < l else w - 1 for w in adj[v] if w != l])
    return out


def _require_asymmetric(t: Tree) -> None:
    if not canon.is_asymmetric(t):
        raise NotAsymmetric("input tree is not automorphism-free")


def safe_leaves(t: Tree) -> list[int]:
    """Leaves whose deletion keeps the tree in the poset (asymmetric, n >= 2)."""
    _require_asymmetric(t)
    out = []
    for leaf in tree.leaves(t):
        if t.n - 1 < 2:
            continue
        smaller = _delete_leaf_adjacency(t.adjacency, leaf.id)
        if kernel.is_asymmetric(smaller):
            out.append(leaf.id)
    return out


def _reduce(t: Tree, rng: random.Random | None):
    target = e7_code()
    steps = []
    cur = t
    while kernel.canonical_code(cur.adjacency) != target:
        safe = safe_leaves(cur)
        if not safe:
            raise StuckNotAtE7(
                "tree with code %s has no safe leaf but is not E7 - this "
                "refutes the unique-minimal-element theorem; please report it"
                % kernel.canonical_code(cur.adjacency)
            )
        leaf = rng.choice(safe) if rng is not None else safe[0]
        cur, id_map = tree.delete_leaf(cur, leaf)
        steps.append(ReductionStep(leaf=leaf, id_map=id_map))
    trace = ReductionTrace(start=t, steps=tuple(steps), end_code=target)
    return trace, cur


def reduce_to_e7(t: Tree, *, seed: int | None = None) -> ReductionTrace:
    """Greedily delete safe leaves until the tree is isomorphic to E7.

    The deterministic rule deletes the smallest safe leaf id; pass a seed
    to use a seeded random tie-break instead (the theorem makes the choice
    immaterial to success, which the randomized mode exists to exercise).
    """
    _require_asymmetric(t)
    rng = random.Random(seed) if seed is not None else None
    return _reduce(t, rng)[0]


def replay_trace(trace: ReductionTrace) -> list[Tree]:
    """All intermediate trees of a trace, from start to the E7-sized end."""
    out = [trace.start]
    for step in trace.steps:
        smaller, id_map = tree.delete_leaf(out[-1], step.leaf)
        if id_map != step.id_map:
            raise AssertionError("trace does not replay: id maps diverge")
        out.append(smaller)
    return out


def chain_from_e7(t: Tree, *, seed: int | None = None) -> list[int]:
    """Leaf additions growing t from E7, as attach-at ids.

    The chain is expressed in the coordinates of the canonical E7 labeling
    (see e7.E7_EDGES): replaying `add_leaf` over e7_tree() with these ids
    reproduces a tree isomorphic to t, every intermediate asymmetric.
    New vertices take ids 7, 8, ... as add_leaf assigns them.
    """
    _require_asymmetric(t)
    rng = random.Random(seed) if seed is not None else None
    trace, end = _reduce(t, rng)

    sigma = canon._find_isomorphism(end, e7_tree())
    rho = {v: sigma[v] for v in range(end.n)}  # current original -> replay id

    intermediates = [trace.start]
    for step in trace.steps:
        intermediates.append(tree.delete_leaf(intermediates[-1], step.leaf)[0])

    attach = []
    for j in range(len(trace.steps) - 1, -1, -1):
        before = intermediates[j]  # tree the step deleted from
        step = trace.steps[j]
        parent = before.adjacency[step.leaf][0]
        attach.append(rho[step.id_map[parent]])
        # pull rho back one step: survivors via the compaction map, the
        # re-added leaf gets the id add_leaf would assign (= before.n - 1)
        rho = {v: rho[step.id_map[v]] for v in step.id_map}
        rho[step.leaf] = before.n - 1
    return attach


def minimal_elements(n_max: int) -> list[str]:
    """Codes of poset elements with no safe leaf, over levels 7..n_max."""
    _check_poset_range(n_max)
    out = []
    for n in range(7, n_max + 1):
        for code, t in enumeration.asymmetric_trees(n).with_codes():
            if not safe_leaves(t):
                out.append(code)
    return out


def _check_poset_range(n_max: int) -> None:
    if not 7 <= n_max <= enumeration.N_MAX:
        raise OutOfRange(
            f"n_max={n_max} outside poset range 7..{enumeration.N_MAX}"
        )


def build_hasse(n_max: int) -> tuple[list[PosetLevel], list[CoverEdge]]:
    """Levels 7..n_max plus one cover edge per (upper class, lower class)
    pair joined by a single safe-leaf deletion."""
    _check_poset_range(n_max)
    levels = [
        PosetLevel(n=n, nodes=enumeration.asymmetric_trees(n).with_codes())
        for n in range(7, n_max + 1)
    ]
    covers = []
    for level in levels[1:]:
        for upper_code, upper_tree in level.nodes:
            reachable: dict[str, int] = {}
            for leaf in safe_leaves(upper_tree):
                smaller = _delete_leaf_adjacency(upper_tree.adjacency, leaf)
                lower_code = kernel.canonical_code(smaller)
                if lower_code not in reachable:  # smallest witness leaf wins
                    reachable[lower_code] = leaf
            for lower_code in sorted(reachable):
                covers.append(
                    CoverEdge(
                        lower=lower_code,
                        upper=upper_code,
                        witness_leaf=reachable[lower_code],
                    )
                )
    return levels, covers


@dataclass(frozen=True)
class LevelSummary:
    n: int
    asymmetric: int
    reduced: int


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of the minimality-and-reduction sweep up to n_max."""

    n_max: int
    levels: tuple[LevelSummary, ...]
    minimal_codes: tuple[str, ...]
    failures: tuple[str, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.failures and self.minimal_codes == (e7_code(),)


def verify_poset(
    n_max: int, progress: Callable[[LevelSummary], None] | None = None
) -> VerifyReport:
    """Scan levels 7..n_max: E7 uniqueness at 7, no minimal element above,
    and a successful reduction to E7 from every class."""
    _check_poset_range(n_max)
    started = time.perf_counter()
    levels = []
    minimal = []
    failures = []
    for n in range(7, n_max + 1):
        nodes = enumeration.asymmetric_trees(n).with_codes()
        reduced = 0
        for code, t in nodes:
            if not safe_leaves(t):
                minimal.append(code)
            try:
                reduce_to_e7(t)
                reduced += 1
            except StuckNotAtE7 as exc:
                failures.append(f"n={n} code={code}: {exc}")
        summary = LevelSummary(n=n, asymmetric=len(nodes), reduced=reduced)
        levels.append(summary)
        if progress is not None:
            progress(summary)

    if levels[0].asymmetric != 1:
        failures.append(
            f"expected exactly one asymmetric class at n=7, found {levels[0].asymmetric}"
        )
    elif not canon.are_isomorphic(
        enumeration.asymmetric_trees(7).with_codes()[0][1], e7_tree()
    ):
        failures.append("the n=7 asymmetric class is not isomorphic to E7")
    for code in minimal:
        if code != e7_code():
            failures.append(f"second minimal element found: {code}")

    return VerifyReport(
        n_max=n_max,
        levels=tuple(levels),
        minimal_codes=tuple(sorted(set(minimal))),
        failures=tuple(failures),
        elapsed=time.perf_counter() - started,
    )


def hasse_to_dot(levels: list[PosetLevel], covers: list[CoverEdge]) -> str:
    """DOT rendering: one same-rank subgraph per level, node ids are codes."""
    lines = ["digraph aft {", "  rankdir=TB;"]
    for level in levels:
        lines.append(f"  subgraph level_{level.n} {{")
        lines.append("    rank=same;")
        for code, _ in level.nodes:
            lines.append(f'    "{code}" [label="n={level.n}"];')
        lines.append("  }")
    for edge in covers:
        lines.append(f'  "{edge.upper}" -> "{edge.lower}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def covers_to_tsv(covers: list[CoverEdge]) -> str:
    rows = [f"{e.upper}\t{e.lower}\t{e.witness_leaf}" for e in covers]
    return "\n".join(rows) + "\n" if rows else ""


def trace_lines(trace: ReductionTrace) -> list[str]:
    """Deletion steps interleaved with the intermediate canonical codes."""
    trees = replay_trace(trace)
    lines = [kernel.canonical_code(trees[0].adjacency)]
    for step, after in zip(trace.steps, trees[1:]):
        lines.append(f"delete {step.leaf}")
        lines.append(kernel.canonical_code(after.adjacency))
    return lines
