"""Canonical codes, isomorphism testing, and automorphism counting.

The fast paths (AHU codes, the multiplicative |Aut| formula, the asymmetry
test) run in the kernel backend.  ``brute_force_automorphisms`` is the
deliberately independent oracle: it filters candidate permutations against
the edge set and never touches codes, so it can pin the fast paths in
tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from asymtree import _kernel_py, kernel
from asymtree.errors import TooLarge, TooSmall
from asymtree.tree import Tree, _check_vertex

ROOTED = "rooted"
UNICENTRAL = "unicentral"
BICENTRAL = "bicentral"

BRUTE_FORCE_MAX_N = 10


@dataclass(frozen=True)
class CanonicalCode:
    """Balanced-parenthesis code identifying a tree up to isomorphism."""

    text: str
    kind: str

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Automorphism:
    """An adjacency-preserving permutation of the vertex ids."""

    mapping: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.mapping))


@dataclass(frozen=True)
class AutCount:
    order: int


def rooted_code(t: Tree, root: int) -> CanonicalCode:
    """AHU code of t rooted at `root`."""
    _check_vertex(t, root)
    return CanonicalCode(text=kernel.rooted_code(t.adjacency, root), kind=ROOTED)


def canonical_code(t: Tree) -> CanonicalCode:
    """Unrooted canonical code; relabeling-invariant."""
    text = kernel.canonical_code(t.adjacency)
    kind = UNICENTRAL if text[0] == "C" else BICENTRAL
    return CanonicalCode(text=text, kind=kind)


def are_isomorphic(t1: Tree, t2: Tree) -> bool:
    return kernel.canonical_code(t1.adjacency) == kernel.canonical_code(t2.adjacency)


def aut_order(t: Tree) -> AutCount:
    """Order of the automorphism group, exact at any size."""
    return AutCount(order=kernel.aut_order(t.adjacency))


def is_asymmetric(t: Tree) -> bool:
    """True iff t (on >= 2 vertices) has only the trivial automorphism."""
    if t.n < 2:
        raise TooSmall("asymmetry is defined for trees with at least 2 vertices")
    return kernel.is_asymmetric(t.adjacency)


def brute_force_automorphisms(t: Tree) -> list[Automorphism]:
    """Every adjacency-preserving permutation, by exhaustive filtering.

    Candidates are restricted to permutations preserving each vertex's
    (degree, sorted neighbor degrees) profile, which any automorphism must;
    within those classes the search is exhaustive.  Guarded to n <= 10.
    """
    if t.n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"brute force is guarded to n <= {BRUTE_FORCE_MAX_N}")

    deg = [t.degree(v) for v in range(t.n)]
    profile = {}
    for v in range(t.n):
        key = (deg[v], tuple(sorted(deg[w] for w in t.adjacency[v])))
        profile.setdefault(key, []).append(v)
    classes = list(profile.values())

    adj_sets = [frozenset(nbrs) for nbrs in t.adjacency]
    edges = t.edges()

    found = []
    mapping = [0] * t.n
    for combo in product(*(permutations(c) for c in classes)):
        for members, images in zip(classes, combo):
            for src, dst in zip(members, images):
                mapping[src] = dst
        if all(mapping[v] in adj_sets[mapping[u]] for u, v in edges):
            found.append(Automorphism(mapping=tuple(mapping)))
    found.sort(key=lambda a: a.mapping)
    return found


def _subtree_codes(adj, root, block=-1):
    """Per-vertex subtree codes and children of a rooted component."""
    parent = [-2] * len(adj)
    parent[root] = -1
    if block >= 0:
        parent[block] = -3
    order = [root]
    for v in order:
        for w in adj[v]:
            if parent[w] == -2:
                parent[w] = v
                order.append(w)
    children = {v: [] for v in order}
    for v in order[1:]:
        children[parent[v]].append(v)
    codes = {}
    for v in reversed(order):
        kids = children[v]
        parts = sorted((codes[w] for w in kids), key=_kernel_py._shortlex)
        codes[v] = "(%s)" % "".join(parts)
    return children, codes


def _match_rooted(a, b, children_a, codes_a, children_b, codes_b, sigma):
    """Extend sigma with an isomorphism of two rooted subtrees of equal code."""
    sigma[a] = b
    kids_a = sorted(children_a[a], key=lambda v: _kernel_py._shortlex(codes_a[v]))
    kids_b = sorted(children_b[b], key=lambda v: _kernel_py._shortlex(codes_b[v]))
    for ka, kb in zip(kids_a, kids_b):
        _match_rooted(ka, kb, children_a, codes_a, children_b, codes_b, sigma)


def _find_isomorphism(t1: Tree, t2: Tree) -> list[int] | None:
    """A vertex bijection sigma (as a list, sigma[v1] = v2) or None.

    Decomposes both trees at their centers and pairs children by sorted
    subtree code; subtrees with equal codes are isomorphic, so the greedy
    pairing always yields a valid map.
    """
    if t1.n != t2.n:
        return None
    if kernel.canonical_code(t1.adjacency) != kernel.canonical_code(t2.adjacency):
        return None
    sigma = [-1] * t1.n
    c1 = kernel.tree_centers(t1.adjacency)
    c2 = kernel.tree_centers(t2.adjacency)
    if len(c1) == 1:
        ch1, co1 = _subtree_codes(t1.adjacency, c1[0])
        ch2, co2 = _subtree_codes(t2.adjacency, c2[0])
        _match_rooted(c1[0], c2[0], ch1, co1, ch2, co2, sigma)
        return sigma
    (u1, v1), (u2, v2) = c1, c2
    ch_u1, co_u1 = _subtree_codes(t1.adjacency, u1, block=v1)
    ch_v1, co_v1 = _subtree_codes(t1.adjacency, v1, block=u1)
    ch_u2, co_u2 = _subtree_codes(t2.adjacency, u2, block=v2)
    ch_v2, co_v2 = _subtree_codes(t2.adjacency, v2, block=u2)
    if co_u1[u1] == co_u2[u2] and co_v1[v1] == co_v2[v2]:
        _match_rooted(u1, u2, ch_u1, co_u1, ch_u2, co_u2, sigma)
        _match_rooted(v1, v2, ch_v1, co_v1, ch_v2, co_v2, sigma)
    else:
        _match_rooted(u1, v2, ch_u1, co_u1, ch_v2, co_v2, sigma)
        _match_rooted(v1, u2, ch_v1, co_v1, ch_u2, co_u2, sigma)
    return sigma
