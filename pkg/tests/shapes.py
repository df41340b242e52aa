"""Small labeled-tree builders shared across tests."""

from asymtree import build_tree


def path_tree(n):
    return build_tree([(i, i + 1) for i in range(n - 1)])


def star_tree(n):
    """Star on n vertices with center 0."""
    return build_tree([(0, i) for i in range(1, n)])


def spider_tree(*legs):
    """Hub 0 with one path leg of `leg` vertices per argument."""
    edges = []
    nxt = 1
    for leg in legs:
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_tree(edges)
