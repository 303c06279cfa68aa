import pytest
from hypothesis import given, settings, strategies as st

from conftest import path_tree, star_tree
from oracles import brute_counts, connected_subsets
from treeprofile.counting import (
    count_all_subtrees,
    count_connected_subsets,
    count_paths,
    count_stars,
    simple_upper_bound,
)
from treeprofile.errors import KTooSmall
from treeprofile.families import random_corpus
from treeprofile.tree import Tree, from_edge_list, prufer_decode

CORPUS = random_corpus(60, 3, 14, seed=101)


def test_z_examples(cat3):
    assert count_all_subtrees(path_tree(10), 4) == 7
    assert count_all_subtrees(star_tree(5), 4) == 10
    assert count_all_subtrees(cat3, 5) == 12 == len(connected_subsets(cat3, 5))


def test_z_edge_cases():
    assert count_all_subtrees(path_tree(3), 4) == 0
    assert count_all_subtrees(path_tree(3), 0) == 0
    assert count_all_subtrees(from_edge_list([], 1), 1) == 1


def test_path_examples(cat3):
    assert count_paths(path_tree(10), 4) == 7
    assert count_paths(star_tree(7), 4) == 0
    assert count_paths(cat3, 5) == 4 == brute_counts(cat3, 5)[1]


def test_star_examples(cat3):
    assert count_stars(star_tree(5), 4) == 10
    assert count_stars(path_tree(6), 4) == 0
    assert count_stars(cat3, 4) == 3 == brute_counts(cat3, 4)[2]
    with pytest.raises(KTooSmall):
        count_stars(cat3, 2)


def test_simple_upper_bound_examples():
    assert simple_upper_bound(path_tree(10), 4) == 396
    assert simple_upper_bound(star_tree(5), 4) == 780
    assert simple_upper_bound(from_edge_list([], 1), 1) == 1


@pytest.mark.parametrize("k", [3, 4, 5, 6, 7])
def test_dp_matches_subset_oracle(k):
    for t in CORPUS:
        z, paths, stars = brute_counts(t, k)
        assert count_all_subtrees(t, k) == z
        assert count_paths(t, k) == paths
        assert count_stars(t, k) == stars
        assert z <= simple_upper_bound(t, k)


def test_total_connected_subsets_consistency():
    for t in CORPUS:
        per_size = sum(count_all_subtrees(t, k) for k in range(1, t.n + 1))
        assert per_size == count_connected_subsets(t)


def test_paths_of_two_vertices_are_edges():
    for t in CORPUS:
        assert count_paths(t, 2) == t.n - 1
        assert count_paths(t, 1) == t.n


@given(st.integers(2, 40).flatmap(
    lambda n: st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2).map(lambda s: (n, s))
), st.integers(1, 8))
@settings(max_examples=150, deadline=None)
def test_simple_bound_property(args, k):
    n, seq = args
    t = prufer_decode(seq, n)
    assert count_all_subtrees(t, k) <= simple_upper_bound(t, k)


def test_long_path_no_recursion_limit():
    n = 200_000
    t = Tree(n, [[w for w in (v - 1, v + 1) if 0 <= w < n] for v in range(n)])
    assert count_all_subtrees(t, 5) == n - 4
    assert count_paths(t, 5) == n - 4
