"""Exact subtree, path and star counts without enumerating subtrees.

All results are Python integers. Traversals use an explicit BFS order, so
a path on a million vertices is fine.
"""

from __future__ import annotations

from math import comb, factorial

from .errors import KTooSmall
from .tree import Tree, degree_moment


def _mul_trunc(p: list[int], q: list[int], k: int) -> list[int]:
    out = [0] * min(len(p) + len(q) - 1, k + 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j in range(min(len(q), k + 1 - i)):
            b = q[j]
            if b:
                out[i + j] += a * b
    return out


def subtree_polynomials(t: Tree, k: int, root: int = 0) -> list[list[int]]:
    """Per-vertex truncated generating polynomial of rooted connected subsets.

    Entry ``s`` of ``f[v]`` counts connected vertex sets of size ``s`` whose
    vertex closest to ``root`` is ``v``, for ``s <= k``.
    """
    order, parent, _ = t.bfs(root)
    f: list[list[int]] = [None] * t.n  # type: ignore[list-item]
    for v in reversed(order):
        acc = [0, 1]
        for c in t.adjacency[v]:
            if c == parent[v]:
                continue
            fc = f[c]
            # acc * (1 + f(c))
            one_plus = [1] + fc[1:]
            acc = _mul_trunc(acc, one_plus, k)
        f[v] = acc
    return f


def count_all_subtrees(t: Tree, k: int) -> int:
    """Number of k-vertex subsets of ``t`` that induce a tree."""
    if k < 1 or k > t.n:
        return 0
    return sum(p[k] for p in subtree_polynomials(t, k) if len(p) > k)


def count_connected_subsets(t: Tree) -> int:
    """Total number of nonempty connected vertex subsets, all sizes."""
    return sum(sum(p) for p in subtree_polynomials(t, t.n))


def count_paths(t: Tree, k: int) -> int:
    """Number of k-vertex paths in ``t``.

    Every path has a unique vertex nearest the root; it either descends from
    there in one branch or joins two descending branches from distinct
    children.
    """
    if k < 1 or k > t.n:
        return 0
    if k == 1:
        return t.n
    order, parent, _ = t.bfs(0)
    down: list[list[int]] = [None] * t.n  # type: ignore[list-item]
    total = 0
    for v in reversed(order):
        # branch[l]: descending paths with l vertices starting at a child
        branch = [0] * k
        sq = [0] * k
        for c in t.adjacency[v]:
            if c == parent[v]:
                continue
            dc = down[c]
            for ell in range(1, min(len(dc), k)):
                x = dc[ell]
                branch[ell] += x
            for l1 in range(1, k - 1):
                l2 = k - 1 - l1
                if l1 < len(dc) and l2 < len(dc):
                    sq[l1] += dc[l1] * dc[l2]
        dv = [0, 1] + branch[1 : k - 1]
        # strip trailing zeros so leaves stay cheap
        while len(dv) > 2 and dv[-1] == 0:
            dv.pop()
        down[v] = dv
        total += branch[k - 1]
        pairs = 0
        for l1 in range(1, k - 1):
            pairs += branch[l1] * branch[k - 1 - l1] - sq[l1]
        total += pairs // 2
        for c in t.adjacency[v]:
            if c != parent[v]:
                down[c] = None  # type: ignore[call-overload]
    return total


def count_stars(t: Tree, k: int) -> int:
    """Number of k-vertex stars: sum of C(d(v), k-1) over vertices."""
    if k < 3:
        raise KTooSmall(f"S_k is a star only for k >= 3, got k={k}")
    return sum(comb(d, k - 1) for d in t.degrees)


def simple_upper_bound(t: Tree, k: int) -> int:
    """(k-1)! times the (k-1)-th degree moment."""
    return factorial(k - 1) * degree_moment(t, k - 1)
