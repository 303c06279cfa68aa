from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from oracles import all_pairs_diameter, brute_counts
from treeprofile.canonical import is_isomorphic
from treeprofile.counting import count_all_subtrees, count_stars
from treeprofile.enumeration import profile
from treeprofile.errors import InvalidParam, SizeCap
from treeprofile.families import (
    FamilySpec,
    XorShift64Star,
    caterpillar,
    complete_dary,
    extended_star,
    extended_star_degree,
    random_prufer,
    splitmix64,
    star,
)
from treeprofile.tree import diameter, prufer_encode


def numpy_xorshift(seed, count):
    """Same generator in numpy uint64 arithmetic (wrapping multiply)."""
    with np.errstate(over="ignore"):
        x = np.uint64(seed)
        x = x + np.uint64(0x9E3779B97F4A7C15)
        x = (x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        x = (x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        x = x ^ (x >> np.uint64(31))
        out = []
        for _ in range(count):
            x ^= x >> np.uint64(12)
            x ^= x << np.uint64(25)
            x ^= x >> np.uint64(27)
            out.append(int(x * np.uint64(0x2545F4914F6CDD1D)))
    return out


@pytest.mark.parametrize("seed", [0, 1, 42, 2**63 + 5])
def test_generator_matches_numpy_reference(seed):
    rng = XorShift64Star(seed)
    assert [rng.next() for _ in range(20)] == numpy_xorshift(seed, 20)


def test_splitmix_zero_seed_nonzero_state():
    assert splitmix64(0) != 0


def test_below_is_roughly_uniform():
    rng = XorShift64Star(5)
    counts = Counter(rng.below(6) for _ in range(60000))
    assert set(counts) == set(range(6))
    assert all(abs(c - 10000) < 500 for c in counts.values())


def test_caterpillar_shapes():
    s4 = caterpillar(1)
    assert s4.n == 4 and is_isomorphic(s4, star(4))
    for n in (1, 3, 10, 50):
        t = caterpillar(n)
        deg = Counter(t.degrees)
        assert t.n == 2 * n + 2
        assert deg[3] == n and deg[1] == n + 2
    with pytest.raises(InvalidParam):
        caterpillar(0)


def test_caterpillar_3_profile():
    t = caterpillar(3)
    res = profile(t, 5)
    assert res.count(2) == 0
    assert res.exact_proportions[0] == Fraction(1, 3)
    assert brute_counts(t, 5) == (12, 4, 0)
    assert diameter(t) == 4


def test_extended_star_examples():
    t = extended_star(100, 4)
    assert t.degrees[0] == 4
    arms = sorted(len(_arm(t, first)) for first in t.adjacency[0])
    assert arms == [24, 25, 25, 25]
    assert sum(1 for d in t.degrees if d >= 3) == 1
    assert extended_star_degree(10**4, 4) == 14
    assert extended_star_degree(10, 4) == 3


def _arm(t, first):
    arm, prev, cur = [first], 0, first
    while True:
        nxt = [w for w in t.adjacency[cur] if w != prev]
        if not nxt:
            return arm
        prev, cur = cur, nxt[0]
        arm.append(cur)


@pytest.mark.parametrize("n, k", [(10, 4), (57, 5), (1000, 4), (3001, 6)])
def test_extended_star_degree_multiset(n, k):
    t = extended_star(n, k)
    d = t.degrees[0]
    assert t.n == n
    assert d == max(3, int(n ** (2 / (2 * k - 1)) + 0.5))
    assert Counter(t.degrees) == Counter({d: 1, 2: n - 1 - d, 1: d})


def test_extended_star_rejects_small():
    with pytest.raises(InvalidParam):
        extended_star(9, 4)
    with pytest.raises(InvalidParam):
        extended_star(100, 3)


def test_complete_dary():
    assert complete_dary(2, 1).n == 3 and diameter(complete_dary(2, 1)) == 2
    t = complete_dary(20, 2)
    assert t.n == 421
    assert t.degrees[0] == 20
    assert Counter(t.degrees) == Counter({20: 1, 21: 20, 1: 400})
    assert diameter(complete_dary(3, 2)) == 4
    with pytest.raises(SizeCap):
        complete_dary(10, 6)


@pytest.mark.parametrize("d, h", [(2, 1), (2, 2), (3, 2), (2, 3)])
def test_complete_dary_counts_match_oracle(d, h):
    t = complete_dary(d, h)
    assert t.n <= 15
    assert all_pairs_diameter(t) == 2 * h
    for k in (3, 4, 5):
        z, _, stars = brute_counts(t, k)
        assert count_all_subtrees(t, k) == z
        assert count_stars(t, k) == stars


def test_random_prufer_deterministic():
    assert random_prufer(30, 99) == random_prufer(30, 99)
    assert random_prufer(30, 99) != random_prufer(30, 100)
    assert random_prufer(2, 12345).edges() == [(0, 1)]
    t = random_prufer(9, 42)
    assert len(prufer_encode(t)) == 7
    with pytest.raises(InvalidParam):
        random_prufer(1, 0)


def test_family_spec():
    spec = FamilySpec("caterpillar", {"n": 3})
    assert spec.build() == caterpillar(3)
    assert spec.with_params(n=4).build().n == 10
    with pytest.raises(InvalidParam):
        FamilySpec("caterpillar", {})
    with pytest.raises(InvalidParam):
        FamilySpec("tree_of_life", {"n": 3})
    with pytest.raises(InvalidParam):
        FamilySpec("path", {"n": 3, "d": 2})
