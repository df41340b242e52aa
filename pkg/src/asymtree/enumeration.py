"""Isomorphism-free generation of free trees at desk scale.

Rooted trees are generated as canonical level sequences (the classic
successor rule that rewrites the tail after the rightmost vertex of depth
greater than two), then collapsed to free-tree classes by canonical code.
Each class keeps its first-generated labeling as the representative, and
levels are emitted in ascending code order so streams are deterministic
and resumable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from asymtree import kernel
from asymtree.errors import OutOfRange
from asymtree.tree import Tree

N_MAX = 18


def _successor(seq: list[int]) -> list[int] | None:
    """Next canonical rooted level sequence, or None after the star.

    Sequences use root level 1 and descend in lexicographic order from the
    path [1, 2, ..., n]: truncate at the rightmost level > 2, then tile the
    block starting at that vertex's parent until the length is back to n.
    """
    p = len(seq) - 1
    while p >= 0 and seq[p] <= 2:
        p -= 1
    if p < 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = seq[:p]
    block = seq[q:p]
    while len(out) < len(seq):
        out.extend(block[: len(seq) - len(out)])
    return out


def _level_sequences(n: int):
    seq = list(range(1, n + 1))
    while seq is not None:
        yield seq
        seq = _successor(seq)


def _sequence_to_adjacency(seq: list[int]) -> list[list[int]]:
    """Vertex i's parent is the nearest earlier vertex one level up."""
    n = len(seq)
    adj: list[list[int]] = [[] for _ in range(n)]
    last_at_level = [0] * (n + 2)
    for i in range(1, n):
        parent = last_at_level[seq[i] - 1]
        adj[parent].append(i)
        adj[i].append(parent)
        last_at_level[seq[i]] = i
    return adj


def _check_range(n: int, lo: int) -> None:
    if not lo <= n <= N_MAX:
        raise OutOfRange(f"n={n} outside supported range {lo}..{N_MAX}")


@lru_cache(maxsize=None)
def _catalog(n: int) -> tuple[tuple[str, Tree], ...]:
    """All free-tree classes on n vertices as (code, representative) pairs,
    sorted ascending by code."""
    classes: dict[str, Tree] = {}
    for seq in _level_sequences(n):
        adj = _sequence_to_adjacency(seq)
        code = kernel.canonical_code(adj)
        if code not in classes:
            classes[code] = Tree(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))
    return tuple(sorted(classes.items()))


@lru_cache(maxsize=None)
def _asymmetric_catalog(n: int) -> tuple[tuple[str, Tree], ...]:
    return tuple(
        (code, t) for code, t in _catalog(n) if kernel.is_asymmetric(t.adjacency)
    )


class EnumerationStream:
    """Iterator over one level of the enumeration.

    `cursor` is a plain index into the level's sorted catalog, so a stream
    can be rebuilt at the same position later; `emitted` counts yields by
    this instance.
    """

    def __init__(self, n: int, items, cursor: int = 0):
        self.n = n
        self._items = items
        self.cursor = cursor
        self.emitted = 0

    def __iter__(self):
        return self

    def __next__(self) -> Tree:
        if self.cursor >= len(self._items):
            raise StopIteration
        tree = self._items[self.cursor][1]
        self.cursor += 1
        self.emitted += 1
        return tree

    def with_codes(self):
        """Remaining (code, tree) pairs without advancing the stream."""
        return self._items[self.cursor :]


def all_trees(n: int) -> EnumerationStream:
    """One representative per isomorphism class of free trees on n vertices."""
    _check_range(n, 1)
    return EnumerationStream(n, _catalog(n))


def asymmetric_trees(n: int) -> EnumerationStream:
    """all_trees(n) filtered to trees with trivial automorphism group."""
    _check_range(n, 2)
    return EnumerationStream(n, _asymmetric_catalog(n))


@dataclass(frozen=True)
class CountRow:
    n: int
    total: int
    asymmetric: int


def count_report(n_max: int) -> list[CountRow]:
    """Per-n class counts; asymmetric counts start at n=2 by definition."""
    _check_range(n_max, 1)
    rows = []
    for n in range(1, n_max + 1):
        total = len(_catalog(n))
        asym = len(_asymmetric_catalog(n)) if n >= 2 else 0
        rows.append(CountRow(n=n, total=total, asymmetric=asym))
    return rows
