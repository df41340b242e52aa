"""canon: codes, isomorphism, automorphism counts, and the asymmetry test."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asymtree import (
    are_isomorphic,
    aut_order,
    brute_force_automorphisms,
    build_tree,
    canonical_code,
    is_asymmetric,
    relabel,
    rooted_code,
)
from asymtree.canon import _find_isomorphism
from asymtree.enumeration import all_trees
from asymtree.errors import BadVertexId, TooLarge, TooSmall
from oracles import isomorphic_by_permutation, prufer_decode
from shapes import path_tree, spider_tree, star_tree


@st.composite
def random_tree(draw, min_n=2, max_n=14):
    n = draw(st.integers(min_n, max_n))
    if n == 2:
        return build_tree([(0, 1)])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return build_tree(prufer_decode(seq, n), n=n)


class TestRootedCode:
    def test_single_vertex(self):
        assert rooted_code(build_tree([]), 0).text == "()"

    def test_p3_at_middle(self):
        assert rooted_code(path_tree(3), 1).text == "(()())"

    def test_e7_at_hub(self, e7):
        assert rooted_code(e7, 0).text == "(()(())((())))"

    def test_kind(self, e7):
        assert rooted_code(e7, 0).kind == "rooted"

    def test_bad_root(self, e7):
        with pytest.raises(BadVertexId):
            rooted_code(e7, 7)


class TestCanonicalCode:
    def test_p2(self):
        code = canonical_code(build_tree([(0, 1)]))
        assert code.text == "B()()"
        assert code.kind == "bicentral"

    def test_e7_built_from_halves(self, e7):
        # centers 0 and 4; cut the 0-4 edge and root each half at its center
        half_u = build_tree([(0, 1), (0, 2), (2, 3)])
        half_v = build_tree([(0, 1), (1, 2)])
        a = rooted_code(half_u, 0).text
        b = rooted_code(half_v, 0).text
        a, b = sorted((a, b), key=lambda s: (len(s), s))
        assert canonical_code(e7).text == "B" + a + b

    def test_star_is_unicentral(self):
        assert canonical_code(star_tree(4)).kind == "unicentral"

    def test_relabeling_invariance_fixed(self, e7):
        perm = [6, 5, 4, 3, 2, 1, 0]
        assert canonical_code(relabel(e7, perm)) == canonical_code(e7)


@settings(max_examples=150, deadline=None)
@given(data=st.data(), t=random_tree())
def test_relabeling_invariance(data, t):
    perm = data.draw(st.permutations(list(range(t.n))))
    assert canonical_code(relabel(t, list(perm))) == canonical_code(t)


class TestAreIsomorphic:
    def test_e7_relabeled(self, e7):
        assert are_isomorphic(e7, relabel(e7, [2, 0, 1, 6, 3, 5, 4]))

    def test_p4_vs_star(self):
        assert not are_isomorphic(path_tree(4), star_tree(4))

    def test_e7_vs_symmetric_spider(self, e7):
        other = spider_tree(1, 1, 4)
        assert not are_isomorphic(e7, other)
        assert aut_order(other).order == 2  # the two length-1 legs swap

    def test_matches_permutation_oracle_exhaustively(self):
        trees = [t for n in range(2, 7) for t in all_trees(n)]
        for t1 in trees:
            for t2 in trees:
                assert are_isomorphic(t1, t2) == isomorphic_by_permutation(t1, t2)


class TestAutOrder:
    def test_e7_trivial(self, e7):
        assert aut_order(e7).order == 1

    def test_star4(self):
        assert aut_order(star_tree(4)).order == 6

    def test_p4_reversal(self):
        assert aut_order(path_tree(4)).order == 2

    def test_matches_brute_force(self):
        for n in range(2, 9):
            for t in all_trees(n):
                assert aut_order(t).order == len(brute_force_automorphisms(t))


class TestIsAsymmetric:
    def test_e7(self, e7):
        assert is_asymmetric(e7)

    def test_all_small_trees_symmetric(self):
        for n in range(2, 7):
            for t in all_trees(n):
                assert not is_asymmetric(t)

    def test_p2(self):
        assert not is_asymmetric(build_tree([(0, 1)]))

    def test_single_vertex_raises(self):
        with pytest.raises(TooSmall):
            is_asymmetric(build_tree([]))

    def test_agrees_with_aut_order(self):
        for n in range(2, 10):
            for t in all_trees(n):
                assert is_asymmetric(t) == (aut_order(t).order == 1)


class TestBruteForceAutomorphisms:
    def test_e7_identity_only(self, e7):
        auts = brute_force_automorphisms(e7)
        assert len(auts) == 1
        assert auts[0].is_identity()

    def test_p3(self):
        auts = brute_force_automorphisms(path_tree(3))
        assert [a.mapping for a in auts] == [(0, 1, 2), (2, 1, 0)]

    def test_star4(self):
        assert len(brute_force_automorphisms(star_tree(4))) == 6

    def test_guard(self):
        with pytest.raises(TooLarge):
            brute_force_automorphisms(path_tree(11))

    def test_every_mapping_preserves_edges(self, e7):
        t = spider_tree(2, 2, 3)
        edge_set = set(t.edges())
        for aut in brute_force_automorphisms(t):
            mapped = {tuple(sorted((aut(u), aut(v)))) for u, v in edge_set}
            assert mapped == edge_set

    def test_center_fixing(self):
        # automorphisms fix a unique center; a center pair is fixed or swapped
        from asymtree import center_info

        for n in range(2, 9):
            for t in all_trees(n):
                centers = center_info(t).centers
                for phi in brute_force_automorphisms(t):
                    if len(centers) == 1:
                        assert phi(centers[0]) == centers[0]
                    else:
                        u, v = centers
                        assert {phi(u), phi(v)} == {u, v}


class TestSeparation:
    def test_distinct_codes_match_class_counts(self, tree_counts):
        for n in range(2, 9):
            codes = {canonical_code(t).text for t in all_trees(n)}
            assert len(codes) == tree_counts[n][0]


def test_find_isomorphism_yields_valid_bijection(e7):
    cases = [
        (e7, relabel(e7, [4, 6, 2, 0, 5, 3, 1])),
        (path_tree(6), relabel(path_tree(6), [5, 4, 3, 2, 1, 0])),
        (star_tree(5), relabel(star_tree(5), [1, 0, 2, 4, 3])),
        (spider_tree(2, 3, 3), relabel(spider_tree(2, 3, 3), [8, 0, 1, 2, 3, 4, 5, 6, 7])),
    ]
    for t1, t2 in cases:
        sigma = _find_isomorphism(t1, t2)
        assert sorted(sigma) == list(range(t1.n))
        edges2 = set(t2.edges())
        for u, v in t1.edges():
            assert tuple(sorted((sigma[u], sigma[v]))) in edges2


def test_find_isomorphism_rejects_nonisomorphic():
    assert _find_isomorphism(path_tree(4), star_tree(4)) is None
