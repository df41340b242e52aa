"""Special leaves: the checkable predicate and the constructive finder.

A leaf l is special with respect to a tree and a vertex u when, walking the
u-to-l path, at every vertex before l the component containing l is no
larger than any component not containing u.  ``check_special_leaf`` tests
that definition head-on via component scans; ``find_special_leaf``
constructs such a leaf by always descending into a smallest component.
The two are kept independent so each can certify the other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from asymtree.errors import NotALeaf, SameVertex, TooSmall
from asymtree.tree import Tree, _check_vertex, components_after_removal


@dataclass(frozen=True)
class StepEvidence:
    """Sizes recorded at one path vertex: |C_i| and the smallest competitor.

    Competitors are all components (of the tree minus the path vertex) not
    containing the anchor; the component containing the leaf is itself one
    of them, so min_other <= component_size always, and the defining
    inequality holds exactly when the two are equal.
    """

    component_size: int
    min_other: int


@dataclass(frozen=True)
class SpecialLeafCertificate:
    leaf: int
    anchor: int
    path: tuple[int, ...]
    step_evidence: tuple[StepEvidence, ...]


def _path_between(t: Tree, u: int, v: int) -> list[int]:
    parent = [-2] * t.n
    parent[u] = -1
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for w in t.adjacency[x]:
            if parent[w] == -2:
                parent[w] = x
                queue.append(w)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def check_special_leaf(t: Tree, u: int, l: int) -> SpecialLeafCertificate | None:
    """The brute-force predicate: certificate if l is special w.r.t. u, else None."""
    _check_vertex(t, u)
    _check_vertex(t, l)
    if t.n < 2:
        raise TooSmall("special leaves need at least 2 vertices")
    if l == u:
        raise SameVertex("the leaf must differ from the anchor")
    if t.degree(l) != 1:
        raise NotALeaf(f"vertex {l} has degree {t.degree(l)}")

    path = _path_between(t, u, l)
    evidence = []
    ok = True
    for v_i in path[:-1]:
        comps = components_after_removal(t, v_i)
        c_i = next(size for verts, size in comps if l in verts)
        competitors = [size for verts, size in comps if u not in verts]
        min_other = min(competitors)
        evidence.append(StepEvidence(component_size=c_i, min_other=min_other))
        if c_i > min_other:
            ok = False
            break
    if not ok:
        return None
    return SpecialLeafCertificate(
        leaf=l, anchor=u, path=tuple(path), step_evidence=tuple(evidence)
    )


def is_special_leaf(t: Tree, u: int, l: int) -> bool:
    return check_special_leaf(t, u, l) is not None


def find_special_leaf(t: Tree, u: int) -> SpecialLeafCertificate:
    """Construct a special leaf w.r.t. u by smallest-component descent.

    At the current anchor, split the current subtree at the anchor, take a
    component of minimum size (ties: smallest neighbor id), and step to the
    anchor's neighbor inside it; stop when that neighbor has nothing below
    it.  The descent works on vertex sets of the original tree, so the
    certificate path carries original ids.
    """
    _check_vertex(t, u)
    if t.n < 2:
        raise TooSmall("special leaves need at least 2 vertices")

    current = frozenset(range(t.n))
    anchor = u
    path = [u]
    evidence = []
    while True:
        best_comp = None
        best_nbr = -1
        sizes = []
        for w in t.adjacency[anchor]:
            if w not in current:
                continue
            comp = {w}
            queue = deque([w])
            while queue:
                x = queue.popleft()
                for y in t.adjacency[x]:
                    if y in current and y != anchor and y not in comp:
                        comp.add(y)
                        queue.append(y)
            sizes.append(len(comp))
            if best_comp is None or len(comp) < len(best_comp):
                best_comp, best_nbr = comp, w
        evidence.append(
            StepEvidence(component_size=len(best_comp), min_other=min(sizes))
        )
        path.append(best_nbr)
        if len(best_comp) == 1:
            return SpecialLeafCertificate(
                leaf=best_nbr,
                anchor=u,
                path=tuple(path),
                step_evidence=tuple(evidence),
            )
        current = frozenset(best_comp)
        anchor = best_nbr


def certificate_lines(cert: SpecialLeafCertificate) -> list[str]:
    """The CLI rendering: leaf, path, then one size line per path step."""
    lines = [
        f"leaf {cert.leaf}",
        "path " + " ".join(str(v) for v in cert.path),
    ]
    for i, ev in enumerate(cert.step_evidence, start=1):
        lines.append(f"step {i} |Ci|={ev.component_size} min_other={ev.min_other}")
    return lines
