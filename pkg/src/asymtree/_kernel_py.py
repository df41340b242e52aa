"""Pure-Python canonical-form kernel.

Reference implementation of the hot operations; the compiled extension in
``_kernel.pyx`` mirrors these semantics exactly and a parity test holds the
two together.  Everything here works on plain adjacency lists (a sequence of
sorted int sequences) rather than Tree values so callers can run it on
throwaway structures inside tight loops.

Code grammar: a leaf is ``()``; an internal vertex wraps the concatenation
of its children's codes sorted ascending shortlex (by length, then text, so
``()`` sorts before ``(())``).  Unrooted codes get a ``C`` prefix (one
center) or ``B`` plus the two shortlex-sorted half-codes (two centers).
"""

from math import factorial

BACKEND = "python"


def _shortlex(code):
    return (len(code), code)


def tree_centers(adj):
    """The 1 or 2 middle vertices, found by stripping leaf layers."""
    n = len(adj)
    if n <= 2:
        return tuple(range(n))
    deg = [len(nbrs) for nbrs in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in adj[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def _bfs_order(adj, root, block):
    """BFS order and parent array of root's component, skipping `block`.

    parent[v] is -1 at the root, -2 outside the component, -3 at the
    blocked vertex.
    """
    parent = [-2] * len(adj)
    parent[root] = -1
    if block >= 0:
        parent[block] = -3
    order = [root]
    for v in order:  # grows while we iterate
        for w in adj[v]:
            if parent[w] == -2:
                parent[w] = v
                order.append(w)
    return order, parent


def _scan(adj, root, block, want_aut):
    """Rooted code, rooted automorphism count, and duplicate-child flag.

    Operates on the component containing `root` after removing `block`
    (pass block=-1 for the whole tree).  The third result is True when no
    vertex has two children with identical subtree codes, which for a
    rooted tree is equivalent to a trivial automorphism group.
    """
    order, parent = _bfs_order(adj, root, block)
    code = [""] * len(adj)
    aut = [1] * len(adj)
    clean = True
    for v in reversed(order):
        kids = [w for w in adj[v] if parent[w] == v]
        if not kids:
            code[v] = "()"
            continue
        ccodes = sorted((code[w] for w in kids), key=_shortlex)
        code[v] = "(%s)" % "".join(ccodes)
        total = 1
        if want_aut:
            for w in kids:
                total *= aut[w]
        run = 1
        for i in range(1, len(ccodes)):
            if ccodes[i] == ccodes[i - 1]:
                run += 1
                clean = False
            else:
                total *= factorial(run)
                run = 1
        total *= factorial(run)
        aut[v] = total
    return code[root], aut[root], clean


def rooted_code(adj, root):
    """AHU code of the tree rooted at `root`."""
    return _scan(adj, root, -1, False)[0]


def canonical_code(adj):
    """Unrooted canonical code; equal for two trees iff they are isomorphic."""
    c = tree_centers(adj)
    if len(c) == 1:
        return "C" + _scan(adj, c[0], -1, False)[0]
    u, v = c
    a = _scan(adj, u, v, False)[0]
    b = _scan(adj, v, u, False)[0]
    if _shortlex(b) < _shortlex(a):
        a, b = b, a
    return "B" + a + b


def aut_order(adj):
    """|Aut| via the multiplicative formula on the canonically rooted tree."""
    c = tree_centers(adj)
    if len(c) == 1:
        return _scan(adj, c[0], -1, True)[1]
    u, v = c
    code_a, aut_a, _ = _scan(adj, u, v, True)
    code_b, aut_b, _ = _scan(adj, v, u, True)
    if code_a == code_b:
        return 2 * aut_a * aut_b
    return aut_a * aut_b


def is_asymmetric(adj):
    """True iff the identity is the only adjacency-preserving bijection."""
    c = tree_centers(adj)
    if len(c) == 1:
        return _scan(adj, c[0], -1, False)[2]
    u, v = c
    code_a, _, clean_a = _scan(adj, u, v, False)
    if not clean_a:
        return False
    code_b, _, clean_b = _scan(adj, v, u, False)
    return clean_b and code_a != code_b
