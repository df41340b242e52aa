"""Labeled free trees and their structural queries.

Vertices are always the dense range 0..n-1 and adjacency lists are kept
sorted ascending, so structurally equal labeled trees compare equal and
every operation is reproducible.  Tree values are immutable; operations
return new trees.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from asymtree.errors import (
    BadVertexId,
    CycleDetected,
    DisconnectedInput,
    DuplicateEdge,
    NotALeaf,
    TooSmall,
)


@dataclass(frozen=True)
class Tree:
    """Immutable free tree on vertex ids 0..n-1.

    Build instances through :func:`build_tree`, which validates the tree
    invariants (n-1 edges, connected, no self-loops) once.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]


@dataclass(frozen=True)
class Leaf:
    """A degree-1 vertex and its unique neighbor."""

    id: int
    parent: int


@dataclass(frozen=True)
class CenterInfo:
    """Per-vertex eccentricities, the radius, and the 1- or 2-vertex center."""

    eccentricity: tuple[int, ...]
    radius: int
    centers: tuple[int, ...]


def _check_vertex(t: Tree, v) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < t.n:
        raise BadVertexId(f"vertex id {v!r} not in 0..{t.n - 1}")


def _from_adj(adj) -> Tree:
    """Trusted constructor: wrap prebuilt adjacency lists without validation."""
    return Tree(len(adj), tuple(tuple(sorted(nbrs)) for nbrs in adj))


def build_tree(edge_list, n: int | None = None) -> Tree:
    """Validate an edge list and return the Tree it describes.

    With n omitted it is inferred as len(edge_list) + 1, so an empty list
    builds the single-vertex tree.  Rejects self-loops and repeated edges,
    anything referencing ids outside 0..n-1, and edge sets that do not form
    one connected acyclic graph.
    """
    edges = [tuple(e) for e in edge_list]
    if n is None:
        n = len(edges) + 1
    if n < 1:
        raise TooSmall("a tree needs at least one vertex")

    seen = set()
    for e in edges:
        if len(e) != 2:
            raise BadVertexId(f"edge {e!r} is not a pair")
        u, v = e
        for x in (u, v):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise BadVertexId(f"vertex id {x!r} not in 0..{n - 1}")
        if u == v:
            raise CycleDetected(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} given twice")
        seen.add(key)

    if len(edges) < n - 1:
        raise DisconnectedInput(f"{len(edges)} edges cannot connect {n} vertices")
    if len(edges) > n - 1:
        raise CycleDetected(f"{len(edges)} edges on {n} vertices must contain a cycle")

    # union-find over the n-1 edges: a merge of two already-joined vertices
    # is a cycle; with no cycle and n-1 edges the graph is connected.
    root = list(range(n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleDetected(f"edge ({u}, {v}) closes a cycle")
        root[ru] = rv

    if any(find(v) != find(0) for v in range(n)):
        raise DisconnectedInput("edge list does not connect all vertices")

    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return _from_adj(adj)


def distance(t: Tree, u: int, v: int) -> int:
    """Number of edges on the unique u-v path."""
    _check_vertex(t, u)
    _check_vertex(t, v)
    if u == v:
        return 0
    dist = [-1] * t.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in t.adjacency[x]:
            if dist[w] < 0:
                dist[w] = dist[x] + 1
                if w == v:
                    return dist[w]
                queue.append(w)
    raise AssertionError("tree invariant violated: vertex unreachable")


def _ecc_from(t: Tree, src: int) -> int:
    dist = [-1] * t.n
    dist[src] = 0
    queue = deque([src])
    far = 0
    while queue:
        x = queue.popleft()
        far = dist[x]
        for w in t.adjacency[x]:
            if dist[w] < 0:
                dist[w] = dist[x] + 1
                queue.append(w)
    return far


def center_info(t: Tree) -> CenterInfo:
    """Eccentricities by all-pairs BFS, the radius, and the argmin centers."""
    ecc = tuple(_ecc_from(t, v) for v in range(t.n))
    radius = min(ecc)
    centers = tuple(v for v in range(t.n) if ecc[v] == radius)
    return CenterInfo(eccentricity=ecc, radius=radius, centers=centers)


def leaves(t: Tree) -> list[Leaf]:
    """All degree-1 vertices with their parents, sorted by id."""
    if t.n < 2:
        raise TooSmall("leaves are defined for trees with at least 2 vertices")
    return [
        Leaf(id=v, parent=t.adjacency[v][0])
        for v in range(t.n)
        if len(t.adjacency[v]) == 1
    ]


def delete_leaf(t: Tree, l: int) -> tuple[Tree, dict[int, int]]:
    """Remove leaf l; surviving ids are compacted order-preservingly.

    Returns the smaller tree together with the old->new id mapping so a
    trace over successive deletions stays replayable.
    """
    _check_vertex(t, l)
    if t.n < 2:
        raise TooSmall("cannot delete from a single-vertex tree")
    if t.degree(l) != 1:
        raise NotALeaf(f"vertex {l} has degree {t.degree(l)}")
    id_map = {old: (old if old < l else old - 1) for old in range(t.n) if old != l}
    adj = [
        tuple(id_map[w] for w in t.adjacency[old] if w != l)
        for old in range(t.n)
        if old != l
    ]
    # the shift old -> old-1 is monotone, so sortedness survives
    return Tree(t.n - 1, tuple(adj)), id_map


def add_leaf(t: Tree, attach_at: int) -> Tree:
    """Join a new vertex (id = n) to attach_at."""
    _check_vertex(t, attach_at)
    adj = [list(nbrs) for nbrs in t.adjacency]
    adj[attach_at].append(t.n)
    adj.append([attach_at])
    return _from_adj(adj)


def components_after_removal(t: Tree, v: int) -> list[tuple[frozenset[int], int]]:
    """Connected components of t minus v, one per neighbor of v.

    Ordered by the neighbor through which each component attaches; each
    component is an explicit vertex set paired with its size.
    """
    _check_vertex(t, v)
    out = []
    seen = {v}
    for w in t.adjacency[v]:
        if w in seen:
            continue
        comp = {w}
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for y in t.adjacency[x]:
                if y not in comp and y != v:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        out.append((frozenset(comp), len(comp)))
    return out


def relabel(t: Tree, perm) -> Tree:
    """Apply a permutation (perm[old] = new) to the vertex labels."""
    if sorted(perm) != list(range(t.n)):
        raise BadVertexId("relabeling is not a permutation of 0..n-1")
    adj = [[] for _ in range(t.n)]
    for old in range(t.n):
        adj[perm[old]] = [perm[w] for w in t.adjacency[old]]
    return _from_adj(adj)
