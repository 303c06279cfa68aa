"""Enumeration of k-vertex subtrees, full k-profiles and the balance partition.

Subtrees are enumerated with anchor exclusion: every connected set is
generated from its smallest vertex (the anchor) by growing only through
vertices with a larger index. Inside a tree the extension step never needs
the exclusive-neighbourhood test of general-graph ESU, because a vertex
adjacent to the grown set through two different vertices would close a
cycle.
"""

from __future__ import annotations

import os
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .canonical import free_code_adj
from .catalog import TreeCatalog, build_catalog
from .counting import count_all_subtrees
from .errors import (
    AInvalid,
    CapExceeded,
    DegenerateProfile,
    KTooSmall,
    NotAnEdge,
    SizeMismatch,
)
from .tree import Tree

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class ProfileResult:
    k: int
    z_k: int
    counts: tuple[int, ...]
    """Exact counts by catalog index; ``counts[0]`` is class 1 (the path)."""

    @property
    def proportions(self) -> tuple[float, ...]:
        return tuple(c / self.z_k for c in self.counts)

    @property
    def exact_proportions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.z_k) for c in self.counts)

    def count(self, index: int) -> int:
        """Count for 1-based catalog ``index``."""
        return self.counts[index - 1]

    def proportion(self, index: int) -> float:
        return self.counts[index - 1] / self.z_k

    @property
    def p1(self) -> float:
        return self.proportion(1)

    @property
    def p2(self) -> float:
        return self.proportion(2)


@dataclass(frozen=True)
class BalancePartition:
    a: Fraction
    stars: int
    unbalanced: int
    balanced_nonstar: int

    @property
    def total(self) -> int:
        return self.stars + self.unbalanced + self.balanced_nonstar


def _anchor_sets(t: Tree, k: int, anchors: Iterable[int]):
    adj = t.adjacency
    for v in anchors:
        if k == 1:
            yield (v,)
            continue
        sub = [v]
        in_sub = {v}
        # each frame: (extension list, position of next candidate)
        stack = [([w for w in adj[v] if w > v], 0)]
        while stack:
            ext, pos = stack[-1]
            if pos >= len(ext):
                stack.pop()
                if len(sub) > 1:
                    in_sub.discard(sub.pop())
                continue
            stack[-1] = (ext, pos + 1)
            w = ext[pos]
            sub.append(w)
            in_sub.add(w)
            if len(sub) == k:
                yield tuple(sorted(sub))
                sub.pop()
                in_sub.discard(w)
                continue
            new_ext = ext[pos + 1 :] + [u for u in adj[w] if u > v and u not in in_sub]
            stack.append((new_ext, 0))


def iter_subtrees(t: Tree, k: int, cap: int = DEFAULT_CAP):
    """Yield every k-vertex subtree once, as a sorted vertex tuple."""
    _check_enumeration(t, k, cap)
    return _anchor_sets(t, k, range(t.n))


def _check_enumeration(t: Tree, k: int, cap: int) -> int:
    if not 1 <= k <= t.n:
        raise SizeMismatch(f"k={k} outside 1..{t.n}")
    z = count_all_subtrees(t, k)
    if z > cap:
        raise CapExceeded(cap, z)
    return z


def enumerate_subtrees(
    t: Tree, k: int, visitor: Callable[[tuple[int, ...]], object] | None = None,
    cap: int = DEFAULT_CAP,
) -> int:
    """Call ``visitor`` on each k-vertex subtree and return the number of visits.

    Visits are sequential and in a fixed order: by anchor (smallest vertex),
    then by extension order.
    """
    visits = 0
    for s in iter_subtrees(t, k, cap):
        if visitor is not None:
            visitor(s)
        visits += 1
    return visits


def _induced(t: Tree, sub: Sequence[int]) -> dict[int, list[int]]:
    vs = set(sub)
    return {v: [w for w in t.adjacency[v] if w in vs] for v in sub}


class _Classifier:
    # code -> catalog index; identical shapes dominate so the dict stays small
    def __init__(self, cat: TreeCatalog):
        self.cat = cat
        self.memo: dict[str, int] = {}

    def __call__(self, adj) -> int:
        code = free_code_adj(adj)
        idx = self.memo.get(code)
        if idx is None:
            idx = self.memo[code] = self.cat.index_of[code]
        return idx


def _count_classes(t: Tree, k: int, anchors: Sequence[int]) -> Counter:
    classify = _Classifier(build_catalog(k))
    out: Counter = Counter()
    for sub in _anchor_sets(t, k, anchors):
        out[classify(_induced(t, sub))] += 1
    return out


def _chunks(n: int, parts: int) -> list[list[int]]:
    return [list(range(i, n, parts)) for i in range(parts)]


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get("TREEPROFILE_THREADS")
        if env and env != "auto":
            threads = int(env)
        elif env == "auto":
            threads = os.cpu_count() or 1
        else:
            threads = 1
    if threads < 1:
        raise ValueError(f"thread count must be >= 1, got {threads}")
    return threads


def _check_profile_args(t: Tree, k: int, cat: TreeCatalog | None) -> TreeCatalog:
    if k < 4:
        raise KTooSmall(f"k-profiles are defined for k >= 4, got k={k}")
    if k > t.n:
        raise DegenerateProfile(f"Z_{k} = 0: tree has only {t.n} vertices")
    if cat is None:
        cat = build_catalog(k)
    elif cat.k != k:
        raise SizeMismatch(f"catalog is for k={cat.k}, profile requested for k={k}")
    return cat


def profile(
    t: Tree, k: int, cat: TreeCatalog | None = None, cap: int = DEFAULT_CAP,
    threads: int | None = 1,
) -> ProfileResult:
    """Exact k-profile by enumeration and classification.

    With ``threads > 1`` anchors are split round-robin over worker processes
    and the per-class counts summed, so the result does not depend on the
    number of workers.
    """
    cat = _check_profile_args(t, k, cat)
    z = _check_enumeration(t, k, cap)
    threads = resolve_threads(threads)
    if threads == 1 or t.n < 2 * threads:
        counts = _count_classes(t, k, range(t.n))
    else:
        counts = Counter()
        with ProcessPoolExecutor(threads) as pool:
            parts = _chunks(t.n, threads)
            for part in pool.map(_count_classes, [t] * threads, [k] * threads, parts):
                counts.update(part)
    vec = tuple(counts.get(i, 0) for i in range(1, len(cat) + 1))
    if sum(vec) != z:
        raise RuntimeError(f"enumeration found {sum(vec)} subtrees, DP counts {z}")
    return ProfileResult(k, z, vec)


def brute_force_profile(t: Tree, k: int, cat: TreeCatalog | None = None,
                        cap: int = DEFAULT_CAP) -> ProfileResult:
    """Reference profile: test every k-subset for exactly k-1 internal edges."""
    cat = _check_profile_args(t, k, cat)
    total = comb(t.n, k)
    if total > cap:
        raise CapExceeded(cap, total, what="k-subsets")
    counts: Counter = Counter()
    adj = t.adjacency
    for sub in combinations(range(t.n), k):
        vs = set(sub)
        m = sum(1 for v in sub for w in adj[v] if w in vs) // 2
        if m == k - 1:
            code = free_code_adj({v: [w for w in adj[v] if w in vs] for v in sub})
            counts[cat.index_of[code]] += 1
    vec = tuple(counts.get(i, 0) for i in range(1, len(cat) + 1))
    return ProfileResult(k, sum(vec), vec)


def edge_weight(t: Tree, u: int, v: int) -> Fraction:
    """Ratio of the larger to the smaller endpoint degree of edge uv."""
    if not t.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    du, dv = t.degrees[u], t.degrees[v]
    return Fraction(max(du, dv), min(du, dv))


def _as_threshold(a) -> Fraction:
    a = Fraction(a)
    if a <= 1:
        raise AInvalid(f"threshold a must exceed 1, got {a}")
    return a


def is_unbalanced(t: Tree, sub: Sequence[int], a: Fraction) -> bool:
    """True if some edge of ``sub`` that is not pendant in ``sub`` has weight >= a."""
    adj = _induced(t, sub)
    deg = t.degrees
    for v, nbrs in adj.items():
        if len(nbrs) < 2:
            continue
        for w in nbrs:
            if w > v and len(adj[w]) >= 2:
                hi, lo = max(deg[v], deg[w]), min(deg[v], deg[w])
                # hi / lo >= a without leaving the integers
                if hi * a.denominator >= a.numerator * lo:
                    return True
    return False


def _partition_counts(t: Tree, k: int, thresholds: Sequence[Fraction], anchors):
    stars = 0
    unbalanced = [0] * len(thresholds)
    balanced = [0] * len(thresholds)
    for sub in _anchor_sets(t, k, anchors):
        adj = _induced(t, sub)
        if max(len(nbrs) for nbrs in adj.values()) == k - 1:
            stars += 1
            continue
        # largest weight over non-pendant edges decides every threshold at once
        best = None
        deg = t.degrees
        for v, nbrs in adj.items():
            if len(nbrs) < 2:
                continue
            for w in nbrs:
                if w > v and len(adj[w]) >= 2:
                    wt = Fraction(max(deg[v], deg[w]), min(deg[v], deg[w]))
                    if best is None or wt > best:
                        best = wt
        for i, a in enumerate(thresholds):
            if best is not None and best >= a:
                unbalanced[i] += 1
            else:
                balanced[i] += 1
    return stars, unbalanced, balanced


def balance_partitions(
    t: Tree, k: int, thresholds: Sequence, cat: TreeCatalog | None = None,
    cap: int = DEFAULT_CAP,
) -> list[BalancePartition]:
    """Balance partitions for several thresholds from a single enumeration."""
    _check_profile_args(t, k, cat)
    thresholds = [_as_threshold(a) for a in thresholds]
    _check_enumeration(t, k, cap)
    stars, unbalanced, balanced = _partition_counts(t, k, thresholds, range(t.n))
    return [
        BalancePartition(a, stars, u, b) for a, u, b in zip(thresholds, unbalanced, balanced)
    ]


def balance_partition(
    t: Tree, k: int, a, cat: TreeCatalog | None = None, cap: int = DEFAULT_CAP,
) -> BalancePartition:
    """Split the k-vertex subtrees into stars, a-unbalanced and the rest."""
    return balance_partitions(t, k, [a], cat, cap)[0]


def _profile_task(args):
    t, k, cap = args
    return profile(t, k, cap=cap)


def profile_many(trees: Sequence[Tree], k: int, cap: int = DEFAULT_CAP,
                 threads: int | None = 1) -> list[ProfileResult]:
    """Profiles of many trees, one worker pool for the whole batch, input order kept."""
    threads = resolve_threads(threads)
    tasks = [(t, k, cap) for t in trees]
    if threads == 1 or len(tasks) < 2:
        return [_profile_task(task) for task in tasks]
    with ProcessPoolExecutor(threads) as pool:
        return list(pool.map(_profile_task, tasks, chunksize=max(1, len(tasks) // (4 * threads))))
