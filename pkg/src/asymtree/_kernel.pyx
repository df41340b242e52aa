# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical-form kernel.

Mirrors asymtree._kernel_py exactly (see that module for the semantics and
the code grammar); a parity test keeps the two backends in lockstep.  Codes
are assembled in a per-call byte arena; children are ordered shortlex by
comparing arena slices.  Oversized inputs delegate to the pure backend:
n > 1024 for everything, and n > 21 for automorphism counting, where the
factorial products would overflow 64 bits.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy

from asymtree import _kernel_py as _py

BACKEND = "c"

cdef int _C_LIMIT = 1024
cdef int _AUT_LIMIT = 21


cdef inline unsigned long long _fact(int k):
    cdef unsigned long long out = 1
    cdef int i
    for i in range(2, k + 1):
        out *= <unsigned long long> i
    return out


cdef inline bint _shortlex_gt(char* arena, int pa, int la, int pb, int lb):
    """True when code at (pa, la) sorts after code at (pb, lb)."""
    cdef int r
    if la != lb:
        return la > lb
    r = memcmp(arena + pa, arena + pb, la)
    return r > 0


cdef int _flatten(object adj, int n, int* flat, int* off) except -1:
    cdef int i = 0, v, w
    for v in range(n):
        off[v] = i
        for w in adj[v]:
            flat[i] = w
            i += 1
    off[n] = i
    return 0


cdef int _centers_c(int n, int* flat, int* off, int* deg, int* cur, int* nxt,
                    int* out2):
    """Leaf-stripping centers; returns 1 or 2, ids sorted into out2."""
    cdef int v, w, i, j, t, ncur = 0, nnxt, remaining = n
    cdef int* tmp
    if n == 1:
        out2[0] = 0
        return 1
    if n == 2:
        out2[0] = 0
        out2[1] = 1
        return 2
    for v in range(n):
        deg[v] = off[v + 1] - off[v]
        if deg[v] == 1:
            cur[ncur] = v
            ncur += 1
    while remaining > 2:
        remaining -= ncur
        nnxt = 0
        for i in range(ncur):
            v = cur[i]
            deg[v] = 0
            for j in range(off[v], off[v + 1]):
                w = flat[j]
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt[nnxt] = w
                        nnxt += 1
        tmp = cur
        cur = nxt
        nxt = tmp
        ncur = nnxt
    if ncur == 1:
        out2[0] = cur[0]
        return 1
    if cur[0] < cur[1]:
        out2[0] = cur[0]
        out2[1] = cur[1]
    else:
        out2[0] = cur[1]
        out2[1] = cur[0]
    return 2


cdef int _scan_c(int n, int* flat, int* off, int root, int block,
                 int* parent, int* order, int* kidpos, int* kidlen,
                 char* arena, int* cpos, int* clen,
                 unsigned long long* aut, bint want_aut,
                 int* out_pos, int* out_len, unsigned long long* out_aut,
                 bint* out_clean) except -1:
    """Rooted code, rooted |Aut|, and duplicate-child flag for one component."""
    cdef int v, w, i, j, k, nk, head, tail, run, p0, l0
    cdef int apos = 0
    cdef bint clean = 1
    cdef unsigned long long total

    for v in range(n):
        parent[v] = -2
    parent[root] = -1
    if block >= 0:
        parent[block] = -3
    order[0] = root
    head = 0
    tail = 1
    while head < tail:
        v = order[head]
        head += 1
        for j in range(off[v], off[v + 1]):
            w = flat[j]
            if parent[w] == -2:
                parent[w] = v
                order[tail] = w
                tail += 1

    for i in range(tail - 1, -1, -1):
        v = order[i]
        nk = 0
        for j in range(off[v], off[v + 1]):
            w = flat[j]
            if parent[w] == v:
                kidpos[nk] = cpos[w]
                kidlen[nk] = clen[w]
                nk += 1
        if nk == 0:
            cpos[v] = apos
            clen[v] = 2
            arena[apos] = c'('
            arena[apos + 1] = c')'
            apos += 2
            aut[v] = 1
            continue
        for j in range(1, nk):
            p0 = kidpos[j]
            l0 = kidlen[j]
            k = j - 1
            while k >= 0 and _shortlex_gt(arena, kidpos[k], kidlen[k], p0, l0):
                kidpos[k + 1] = kidpos[k]
                kidlen[k + 1] = kidlen[k]
                k -= 1
            kidpos[k + 1] = p0
            kidlen[k + 1] = l0
        cpos[v] = apos
        arena[apos] = c'('
        apos += 1
        for j in range(nk):
            memcpy(arena + apos, arena + kidpos[j], kidlen[j])
            apos += kidlen[j]
        arena[apos] = c')'
        apos += 1
        clen[v] = apos - cpos[v]

        total = 1
        if want_aut:
            for j in range(off[v], off[v + 1]):
                w = flat[j]
                if parent[w] == v:
                    total *= aut[w]
        run = 1
        for j in range(1, nk):
            if kidlen[j] == kidlen[j - 1] and memcmp(
                arena + kidpos[j], arena + kidpos[j - 1], kidlen[j]
            ) == 0:
                run += 1
                clean = 0
            else:
                if want_aut:
                    total *= _fact(run)
                run = 1
        if want_aut:
            total *= _fact(run)
        aut[v] = total

    out_pos[0] = cpos[root]
    out_len[0] = clen[root]
    out_aut[0] = aut[root]
    out_clean[0] = clean
    return 0


cdef class _Workspace:
    """Owns the scratch buffers for one kernel call."""

    cdef int* ints
    cdef unsigned long long* aut
    cdef char* arena
    cdef int n

    def __cinit__(self, int n):
        self.n = n
        self.ints = <int*> malloc((12 * n + 2) * sizeof(int))
        self.aut = <unsigned long long*> malloc(n * sizeof(unsigned long long))
        self.arena = <char*> malloc(2 * n * n + 8)
        if self.ints == NULL or self.aut == NULL or self.arena == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.ints)
        free(self.aut)
        free(self.arena)

    cdef int* flat(self):
        return self.ints
    cdef int* off(self):
        return self.ints + 2 * self.n
    cdef int* parent(self):
        return self.ints + 3 * self.n + 1
    cdef int* order(self):
        return self.ints + 4 * self.n + 1
    cdef int* kidpos(self):
        return self.ints + 5 * self.n + 1
    cdef int* kidlen(self):
        return self.ints + 6 * self.n + 1
    cdef int* deg(self):
        return self.ints + 7 * self.n + 1
    cdef int* cur(self):
        return self.ints + 8 * self.n + 1
    cdef int* nxt(self):
        return self.ints + 9 * self.n + 1
    cdef int* cpos(self):
        return self.ints + 10 * self.n + 1
    cdef int* clen(self):
        return self.ints + 11 * self.n + 1


cdef bytes _scan_code(_Workspace ws, int n, int root, int block, bint want_aut,
                      unsigned long long* out_aut, bint* out_clean):
    cdef int pos = 0, length = 0
    _scan_c(n, ws.flat(), ws.off(), root, block,
            ws.parent(), ws.order(), ws.kidpos(), ws.kidlen(),
            ws.arena, ws.cpos(), ws.clen(), ws.aut, want_aut,
            &pos, &length, out_aut, out_clean)
    return ws.arena[pos:pos + length]


def tree_centers(adj):
    """The 1 or 2 middle vertices, found by stripping leaf layers."""
    cdef int n = len(adj)
    if n > _C_LIMIT:
        return _py.tree_centers(adj)
    cdef _Workspace ws = _Workspace(n)
    cdef int out2[2]
    _flatten(adj, n, ws.flat(), ws.off())
    cdef int k = _centers_c(n, ws.flat(), ws.off(), ws.deg(), ws.cur(), ws.nxt(), out2)
    if k == 1:
        return (out2[0],)
    return (out2[0], out2[1])


def rooted_code(adj, root):
    """AHU code of the tree rooted at `root`."""
    cdef int n = len(adj)
    if n > _C_LIMIT:
        return _py.rooted_code(adj, root)
    cdef _Workspace ws = _Workspace(n)
    cdef unsigned long long a = 0
    cdef bint clean = 1
    _flatten(adj, n, ws.flat(), ws.off())
    return _scan_code(ws, n, root, -1, 0, &a, &clean).decode("ascii")


def canonical_code(adj):
    """Unrooted canonical code; equal for two trees iff they are isomorphic."""
    cdef int n = len(adj)
    if n > _C_LIMIT:
        return _py.canonical_code(adj)
    cdef _Workspace ws = _Workspace(n)
    cdef int out2[2]
    cdef unsigned long long a = 0
    cdef bint clean = 1
    cdef bytes ca, cb
    _flatten(adj, n, ws.flat(), ws.off())
    cdef int k = _centers_c(n, ws.flat(), ws.off(), ws.deg(), ws.cur(), ws.nxt(), out2)
    if k == 1:
        return "C" + _scan_code(ws, n, out2[0], -1, 0, &a, &clean).decode("ascii")
    ca = _scan_code(ws, n, out2[0], out2[1], 0, &a, &clean)
    cb = _scan_code(ws, n, out2[1], out2[0], 0, &a, &clean)
    if (len(cb), cb) < (len(ca), ca):
        ca, cb = cb, ca
    return "B" + ca.decode("ascii") + cb.decode("ascii")


def aut_order(adj):
    """|Aut| via the multiplicative formula on the canonically rooted tree."""
    cdef int n = len(adj)
    if n > _AUT_LIMIT:
        return _py.aut_order(adj)
    cdef _Workspace ws = _Workspace(n)
    cdef int out2[2]
    cdef unsigned long long na = 0, nb = 0
    cdef bint clean = 1
    cdef bytes ca, cb
    _flatten(adj, n, ws.flat(), ws.off())
    cdef int k = _centers_c(n, ws.flat(), ws.off(), ws.deg(), ws.cur(), ws.nxt(), out2)
    if k == 1:
        _scan_code(ws, n, out2[0], -1, 1, &na, &clean)
        return na
    ca = _scan_code(ws, n, out2[0], out2[1], 1, &na, &clean)
    cb = _scan_code(ws, n, out2[1], out2[0], 1, &nb, &clean)
    if ca == cb:
        return 2 * na * nb
    return na * nb


def is_asymmetric(adj):
    """True iff the identity is the only adjacency-preserving bijection."""
    cdef int n = len(adj)
    if n > _C_LIMIT:
        return _py.is_asymmetric(adj)
    cdef _Workspace ws = _Workspace(n)
    cdef int out2[2]
    cdef unsigned long long a = 0
    cdef bint clean_a = 1, clean_b = 1
    cdef bytes ca, cb
    _flatten(adj, n, ws.flat(), ws.off())
    cdef int k = _centers_c(n, ws.flat(), ws.off(), ws.deg(), ws.cur(), ws.nxt(), out2)
    if k == 1:
        _scan_code(ws, n, out2[0], -1, 0, &a, &clean_a)
        return bool(clean_a)
    ca = _scan_code(ws, n, out2[0], out2[1], 0, &a, &clean_a)
    if not clean_a:
        return False
    cb = _scan_code(ws, n, out2[1], out2[0], 0, &a, &clean_b)
    return bool(clean_b) and ca != cb
