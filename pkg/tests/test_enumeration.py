from fractions import Fraction

import pytest

from conftest import path_tree, star_tree
from oracles import brute_isomorphic, brute_partition, connected_subsets
from treeprofile.catalog import build_catalog
from treeprofile.counting import count_all_subtrees, count_paths, count_stars
from treeprofile.enumeration import (
    balance_partition,
    balance_partitions,
    brute_force_profile,
    edge_weight,
    enumerate_subtrees,
    iter_subtrees,
    profile,
    profile_many,
)
from treeprofile.errors import (
    AInvalid,
    CapExceeded,
    DegenerateProfile,
    KTooSmall,
    NotAnEdge,
)
from treeprofile.families import random_corpus
from treeprofile.tree import induced_subtree

CORPUS = random_corpus(40, 5, 14, seed=202)
MID_CORPUS = random_corpus(15, 15, 40, seed=203)


def test_enumerate_examples(cat3):
    seen = []
    assert enumerate_subtrees(path_tree(5), 3, seen.append) == 3
    assert seen == [(0, 1, 2), (1, 2, 3), (2, 3, 4)]
    assert enumerate_subtrees(star_tree(4), 3) == 6
    assert sorted(iter_subtrees(cat3, 5)) == connected_subsets(cat3, 5)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_enumeration_matches_subset_oracle(k):
    for t in CORPUS:
        if k > t.n:
            continue
        found = list(iter_subtrees(t, k))
        assert len(found) == len(set(found))
        assert sorted(found) == connected_subsets(t, k)


def test_visit_count_equals_dp():
    for t in MID_CORPUS:
        for k in (4, 5, 6, 7):
            assert enumerate_subtrees(t, k) == count_all_subtrees(t, k)


def test_enumeration_order_is_deterministic(cat3):
    assert list(iter_subtrees(cat3, 4)) == list(iter_subtrees(cat3, 4))


def test_cap_exceeded_reports_count():
    t = star_tree(30)
    with pytest.raises(CapExceeded) as info:
        enumerate_subtrees(t, 6, cap=1000)
    assert info.value.cap == 1000
    assert info.value.lower_bound >= 1001


def test_profile_caterpillar(cat3):
    res = profile(cat3, 5)
    assert res.z_k == 12
    assert res.counts == (4, 0, 8)
    assert res.exact_proportions == (Fraction(1, 3), 0, Fraction(2, 3))
    assert res == brute_force_profile(cat3, 5)


def test_profile_classes_by_bijection_oracle(cat3):
    # classify each subtree by trying all bijections against every catalog entry
    cat = build_catalog(5)
    counts = [0] * len(cat)
    for sub in connected_subsets(cat3, 5):
        s = induced_subtree(cat3, sub)
        matches = [j for j in range(len(cat)) if brute_isomorphic(s, cat.tree(j + 1))]
        assert len(matches) == 1
        counts[matches[0]] += 1
    assert tuple(counts) == profile(cat3, 5).counts


def test_profile_pure_families():
    res = profile(star_tree(9), 5)
    assert res.p2 == 1 and sum(res.counts) == res.count(2)
    res = profile(path_tree(20), 5)
    assert res.p1 == 1 and res.counts[0] == 16


def test_profile_errors(cat3):
    with pytest.raises(KTooSmall):
        profile(cat3, 3)
    with pytest.raises(DegenerateProfile):
        profile(path_tree(4), 5)


@pytest.mark.parametrize("k", [4, 5, 6])
def test_profile_matches_brute_force(k):
    for t in CORPUS:
        if k > t.n:
            continue
        fast = profile(t, k)
        slow = brute_force_profile(t, k)
        assert fast == slow
        assert fast.count(1) == count_paths(t, k)
        assert fast.count(2) == count_stars(t, k)
        assert abs(sum(fast.proportions) - 1) < 1e-9


def test_profile_parallel_matches_sequential():
    t = MID_CORPUS[0]
    assert profile(t, 6, threads=3) == profile(t, 6, threads=1)
    assert profile_many(CORPUS[:10], 4, threads=3) == profile_many(CORPUS[:10], 4)


def test_edge_weight(sub_star):
    assert edge_weight(path_tree(4), 1, 2) == 1
    assert edge_weight(star_tree(3), 0, 1) == 3
    assert edge_weight(sub_star, 0, 1) == Fraction(3, 2)
    with pytest.raises(NotAnEdge):
        edge_weight(sub_star, 1, 3)


def test_balance_partition_examples(sub_star, cat3):
    part = balance_partition(sub_star, 4, Fraction(3, 2))
    assert (part.stars, part.unbalanced, part.balanced_nonstar) == (1, 6, 0)
    assert part.total == count_all_subtrees(sub_star, 4) == 7
    assert brute_partition(sub_star, 4, Fraction(3, 2)) == (1, 6, 0)
    part = balance_partition(cat3, 5, 2)
    assert (part.stars, part.unbalanced, part.balanced_nonstar) == (0, 0, 12)
    assert brute_partition(cat3, 5, 2) == (0, 0, 12)


def test_threshold_above_max_weight(cat3):
    assert balance_partition(cat3, 4, 4).unbalanced == 0


def test_invalid_threshold(cat3):
    with pytest.raises(AInvalid):
        balance_partition(cat3, 4, 1)


def test_partition_matches_definition_oracle():
    for t in CORPUS[:25]:
        for k in (4, 5):
            if k > t.n:
                continue
            for a in (Fraction(3, 2), Fraction(2), Fraction(3)):
                part = balance_partition(t, k, a)
                assert (part.stars, part.unbalanced, part.balanced_nonstar) == brute_partition(t, k, a)


def test_partition_identity_and_monotonicity():
    thresholds = [Fraction(3, 2), Fraction(2), Fraction(3)]
    for t in MID_CORPUS:
        for k in (4, 5):
            parts = balance_partitions(t, k, thresholds)
            z = count_all_subtrees(t, k)
            for p in parts:
                assert p.stars + p.unbalanced + p.balanced_nonstar == z
                assert p.stars == count_stars(t, k)
            assert [p.unbalanced for p in parts] == sorted((p.unbalanced for p in parts), reverse=True)
