"""Ordered catalog of all nonisomorphic trees on k vertices.

Entry 1 is the path and entry 2 the star (for k >= 4); the remaining
entries follow in lexicographic order of their canonical codes. Indices are
1-based everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .canonical import free_code, free_code_adj
from .errors import KTooLarge, SizeMismatch
from .tree import Tree, path, star

MAX_K = 12


@dataclass(frozen=True)
class TreeCatalog:
    k: int
    entries: tuple[tuple[str, Tree], ...]
    index_of: dict[str, int] = field(compare=False, repr=False)

    def __len__(self):
        return len(self.entries)

    def code(self, index: int) -> str:
        return self.entries[index - 1][0]

    def tree(self, index: int) -> Tree:
        return self.entries[index - 1][1]

    def index_of_code(self, code: str) -> int:
        return self.index_of[code]


@lru_cache(maxsize=None)
def _shapes(k: int) -> dict[str, Tree]:
    """All k-vertex shapes keyed by free code, by leaf augmentation."""
    if k == 1:
        t = Tree(1, [[]])
        return {free_code(t): t}
    out: dict[str, Tree] = {}
    for t in _shapes(k - 1).values():
        for v in range(t.n):
            adjacency = [list(nbrs) for nbrs in t.adjacency] + [[v]]
            adjacency[v].append(t.n)
            child = Tree(k, adjacency)
            out.setdefault(free_code(child), child)
    return out


@lru_cache(maxsize=None)
def build_catalog(k: int) -> TreeCatalog:
    if k < 1:
        raise SizeMismatch(f"catalog size must be positive, got k={k}")
    if k > MAX_K:
        raise KTooLarge(f"catalogs are capped at k={MAX_K}, got k={k}")
    shapes = dict(_shapes(k))
    first = [path(k), star(k)]
    entries = []
    for t in first:
        code = free_code(t)
        if code in shapes:
            entries.append((code, shapes.pop(code)))
    entries.extend(sorted(shapes.items()))
    entries = tuple(entries)
    return TreeCatalog(k, entries, {code: i for i, (code, _) in enumerate(entries, 1)})


def classify(cat: TreeCatalog, s: Tree) -> int:
    if s.n != cat.k:
        raise SizeMismatch(f"subtree has {s.n} vertices, catalog is for k={cat.k}")
    return cat.index_of[free_code(s)]


def classify_adj(cat: TreeCatalog, adj) -> int:
    """Classify a k-vertex tree given as an adjacency mapping."""
    return cat.index_of[free_code_adj(adj)]
