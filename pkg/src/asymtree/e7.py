"""The 7-vertex asymmetric tree E7.

One vertex of degree three whose three legs are paths of 1, 2, and 3
vertices.  It is the smallest asymmetric tree and the unique minimal
element of the leaf-deletion poset.
"""

from functools import lru_cache

from asymtree.tree import Tree, build_tree

E7_EDGES = ((0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6))


@lru_cache(maxsize=1)
def e7_tree() -> Tree:
    return build_tree(E7_EDGES)


@lru_cache(maxsize=1)
def e7_code() -> str:
    from asymtree import kernel

    return kernel.canonical_code(e7_tree().adjacency)
