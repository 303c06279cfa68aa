import random

import pytest

from conftest import path_tree, star_tree
from oracles import all_labeled_trees, brute_isomorphic
from treeprofile.canonical import free_code, is_isomorphic, rooted_code, tree_from_code
from treeprofile.errors import InvalidIndex
from treeprofile.tree import Tree, from_edge_list, prufer_decode


def relabel(t, perm):
    return from_edge_list([(perm[u], perm[v]) for u, v in t.edges()], t.n)


def random_tree(rng, n):
    if n == 1:
        return from_edge_list([], 1)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def test_rooted_code_examples():
    assert rooted_code(from_edge_list([], 1), 0) == "()"
    p3 = path_tree(3)
    assert rooted_code(p3, 1) == "(()())"
    assert rooted_code(p3, 0) == "((()))"
    with pytest.raises(InvalidIndex):
        rooted_code(p3, 3)


def test_code_length_is_twice_vertex_count():
    rng = random.Random(1)
    for _ in range(50):
        t = random_tree(rng, rng.randint(1, 20))
        assert len(free_code(t)) == 2 * t.n


def test_star_relabeling_invariance():
    s = star_tree(3)
    codes = {free_code(relabel(s, perm)) for perm in ([0, 1, 2, 3], [3, 2, 1, 0], [2, 0, 3, 1])}
    assert len(codes) == 1


def test_path_vs_star_distinct():
    assert free_code(path_tree(4)) != free_code(star_tree(3))
    assert not is_isomorphic(path_tree(4), star_tree(3))


def test_six_vertex_caterpillars_distinct():
    # 4-spine 0-1-2-3; legs (2,0,0) on vertex 1 vs (1,1,0) on vertices 1 and 2
    a = from_edge_list([(0, 1), (1, 2), (2, 3), (1, 4), (1, 5)])
    b = from_edge_list([(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])
    assert free_code(a) != free_code(b)
    assert not brute_isomorphic(a, b)


def test_isomorphism_examples():
    rng = random.Random(5)
    p5 = path_tree(5)
    perm = list(range(5))
    rng.shuffle(perm)
    assert is_isomorphic(p5, relabel(p5, perm))
    spider = from_edge_list([(0, 1), (1, 2), (0, 3), (0, 4)])
    assert not is_isomorphic(spider, p5)
    assert not brute_isomorphic(spider, p5)


def test_free_code_relabeling_invariance_500_trees():
    rng = random.Random(11)
    for _ in range(500):
        t = random_tree(rng, rng.randint(1, 10))
        perm = list(range(t.n))
        rng.shuffle(perm)
        assert free_code(relabel(t, perm)) == free_code(t)


def test_isomorphism_agrees_with_bijection_search():
    rng = random.Random(2)
    for n in range(1, 8):
        trees = [from_edge_list(e, n) for e in all_labeled_trees(n)]
        sample = trees if len(trees) <= 30 else rng.sample(trees, 30)
        for t1 in sample:
            for t2 in sample:
                assert is_isomorphic(t1, t2) == brute_isomorphic(t1, t2)


def test_tree_from_code_round_trip():
    rng = random.Random(9)
    for _ in range(100):
        t = random_tree(rng, rng.randint(1, 15))
        code = free_code(t)
        assert free_code(tree_from_code(code)) == code


def test_tree_from_code_rejects_garbage():
    for bad in ["", "(()", "())(", "(x)"]:
        with pytest.raises(ValueError):
            tree_from_code(bad)


def test_long_path_does_not_recurse():
    t = Tree(5000, [[w for w in (v - 1, v + 1) if 0 <= w < 5000] for v in range(5000)])
    assert free_code(t).startswith("((((")
