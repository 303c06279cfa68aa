"""AHU canonical codes for rooted and free trees.

A code is an ASCII string of balanced parentheses, two characters per
vertex. Child codes are sorted lexicographically before being concatenated,
so two rooted trees get the same code exactly when they are isomorphic.
Free trees are rooted at their center; for bicentral trees the smaller of
the two rooted codes is taken.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from .errors import InvalidIndex
from .tree import Tree


def _code_from(adj, root) -> str:
    # iterative post-order so long paths do not hit the recursion limit
    parent = {root: None}
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    codes = {}
    for v in reversed(order):
        kids = sorted(codes.pop(w) for w in adj[v] if w != parent[v])
        codes[v] = "(" + "".join(kids) + ")"
    return codes[root]


def _centers(adj, vertices) -> list:
    """Centers by repeated leaf stripping."""
    vertices = list(vertices)
    if len(vertices) <= 2:
        return vertices
    deg = {v: len(adj[v]) for v in vertices}
    layer = [v for v in vertices if deg[v] <= 1]
    remaining = len(vertices)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def rooted_code(t: Tree, root: int) -> str:
    if not 0 <= root < t.n:
        raise InvalidIndex(f"root {root} outside 0..{t.n - 1}")
    return _code_from(t.adjacency, root)


def free_code_adj(adj: Mapping | Sequence) -> str:
    """Free-tree code from an adjacency mapping (keys are the vertices)."""
    vertices = adj.keys() if isinstance(adj, Mapping) else range(len(adj))
    return min(_code_from(adj, c) for c in _centers(adj, vertices))


def free_code(t: Tree) -> str:
    return free_code_adj(t.adjacency)


def is_isomorphic(t1: Tree, t2: Tree) -> bool:
    if t1.n != t2.n or sorted(t1.degrees) != sorted(t2.degrees):
        return False
    return free_code(t1) == free_code(t2)


def tree_from_code(code: str) -> Tree:
    """Rebuild a tree from a parenthesis code; vertices numbered in preorder."""
    adjacency: list[list[int]] = []
    stack: list[int] = []
    for ch in code:
        if ch == "(":
            v = len(adjacency)
            adjacency.append([])
            if stack:
                adjacency[stack[-1]].append(v)
                adjacency[v].append(stack[-1])
            stack.append(v)
        elif ch == ")":
            if not stack:
                raise ValueError(f"unbalanced code {code!r}")
            stack.pop()
        else:
            raise ValueError(f"invalid character {ch!r} in code")
    if stack or not adjacency:
        raise ValueError(f"unbalanced code {code!r}")
    return Tree(len(adjacency), adjacency)
