"""The tree text format used by every CLI command.

Line 1 holds the vertex count n; the next n-1 lines each hold one edge as
two whitespace-separated ids.  Blank lines and lines starting with '#' are
ignored.  Files end with LF line endings.
"""

from __future__ import annotations

import os

from asymtree.errors import TreeFormatError
from asymtree.tree import Tree, build_tree


def loads(text: str) -> Tree:
    """Parse the text format into a validated Tree."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise TreeFormatError("empty input")

    lineno, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise TreeFormatError(f"line {lineno}: vertex count expected, got {head!r}")

    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise TreeFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise TreeFormatError(f"line {lineno}: non-integer vertex id in {line!r}")
    if len(edges) != n - 1:
        raise TreeFormatError(f"expected {n - 1} edges for n={n}, got {len(edges)}")
    return build_tree(edges, n=n)


def dumps(t: Tree) -> str:
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in t.edges())
    return "\n".join(lines) + "\n"


def load(path: str | os.PathLike) -> Tree:
    with open(path, encoding="ascii") as fh:
        return loads(fh.read())


def dump(t: Tree, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps(t))
