"""Immutable trees on the vertex set ``0..n-1`` and the edge-list text format."""

from __future__ import annotations

import heapq
from collections import deque
from collections.abc import Iterable, Sequence

from .errors import (
    CycleDetected,
    Disconnected,
    DuplicateEdge,
    InvalidIndex,
    LengthMismatch,
    TooSmall,
)

Edge = tuple[int, int]


class Tree:
    """A validated tree with sorted adjacency lists and cached degrees.

    Construct through :func:`from_edge_list`, :func:`prufer_decode` or the
    family generators; the constructor assumes its input is already a tree.
    """

    __slots__ = ("n", "adjacency", "degrees", "_hash")

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        self.n = n
        self.adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self.degrees = tuple(len(nbrs) for nbrs in self.adjacency)
        self._hash = None

    def __setattr__(self, name, value):
        if name != "_hash" and hasattr(self, name):
            raise AttributeError("Tree is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adjacency))
        return self._hash

    def __repr__(self):
        return f"Tree(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Tree, (self.n, self.adjacency))

    def __len__(self):
        return self.n

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        nbrs = self.adjacency[u]
        # adjacency lists are sorted
        lo, hi = 0, len(nbrs)
        while lo < hi:
            mid = (lo + hi) // 2
            if nbrs[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(nbrs) and nbrs[lo] == v

    def bfs(self, root: int = 0) -> tuple[list[int], list[int], list[int]]:
        """Breadth-first order, parent array (root has parent -1) and depths."""
        parent = [-1] * self.n
        depth = [0] * self.n
        order = [root]
        seen = [False] * self.n
        seen[root] = True
        adj = self.adjacency
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    order.append(w)
        return order, parent, depth

    def eccentricity(self, v: int) -> int:
        _, _, depth = self.bfs(v)
        return max(depth)

    def longest_path(self) -> list[int]:
        """Vertices of one longest path, found by a double BFS sweep."""
        order, _, _ = self.bfs(0)
        a = order[-1]
        order, parent, _ = self.bfs(a)
        b = order[-1]
        path = [b]
        while path[-1] != a:
            path.append(parent[path[-1]])
        return path

    def centers(self) -> list[int]:
        """The one or two central vertices (middle of a longest path)."""
        path = self.longest_path()
        m = len(path)
        if m % 2:
            return [path[m // 2]]
        return sorted((path[m // 2 - 1], path[m // 2]))

    def radius(self) -> int:
        return len(self.longest_path()) // 2


def from_edge_list(edges: Iterable[Sequence[int]], n: int | None = None) -> Tree:
    """Validate ``edges`` and build a :class:`Tree`.

    The vertex count is ``max index + 1`` unless ``n`` is given; an empty edge
    list describes the single-vertex tree.
    """
    pairs = [tuple(e) for e in edges]
    for e in pairs:
        if len(e) != 2:
            raise InvalidIndex(f"edge {e!r} does not have two endpoints")
        for x in e:
            if not isinstance(x, int) or x < 0:
                raise InvalidIndex(f"edge {e!r}: index {x!r} is not a nonnegative integer")
    inferred = max((max(u, v) for u, v in pairs), default=0) + 1
    if n is None:
        n = inferred
    elif n < 1:
        raise InvalidIndex(f"declared vertex count {n} is not positive")
    elif inferred > n:
        bad = next((u, v) for u, v in pairs if max(u, v) >= n)
        raise InvalidIndex(f"edge {bad} has an index outside 0..{n - 1}")

    seen = set()
    for u, v in pairs:
        if u == v:
            raise CycleDetected(f"self-loop at edge ({u}, {v})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge ({u}, {v}) appears more than once")
        seen.add(key)

    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adjacency = [[] for _ in range(n)]
    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleDetected(f"edge ({u}, {v}) closes a cycle")
        parent[ru] = rv
        adjacency[u].append(v)
        adjacency[v].append(u)

    if len(pairs) != n - 1:
        roots = {}
        for x in range(n):
            roots.setdefault(find(x), []).append(x)
        comps = sorted(roots.values(), key=lambda c: c[0])
        other = comps[1]
        shown = other[:10]
        more = "..." if len(other) > 10 else ""
        raise Disconnected(
            f"{len(comps)} components; component containing {shown}{more} "
            f"is not connected to vertex 0"
        )
    return Tree(n, adjacency)


def prufer_decode(seq: Sequence[int], n: int) -> Tree:
    """Labeled tree with Prüfer sequence ``seq`` (heap-based, O(n log n))."""
    if n < 2:
        raise TooSmall(f"Prüfer sequences need n >= 2, got n={n}")
    if len(seq) != n - 2:
        raise LengthMismatch(f"sequence length {len(seq)} != n - 2 = {n - 2}")
    for x in seq:
        if not 0 <= x < n:
            raise InvalidIndex(f"sequence entry {x} outside 0..{n - 1}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    adjacency = [[] for _ in range(n)]
    for x in seq:
        leaf = heapq.heappop(leaves)
        adjacency[leaf].append(x)
        adjacency[x].append(leaf)
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    adjacency[u].append(v)
    adjacency[v].append(u)
    return Tree(n, adjacency)


def prufer_encode(t: Tree) -> list[int]:
    if t.n < 2:
        raise TooSmall("Prüfer encoding needs at least two vertices")
    degree = list(t.degrees)
    removed = [False] * t.n
    leaves = [v for v in range(t.n) if degree[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(t.n - 2):
        leaf = heapq.heappop(leaves)
        removed[leaf] = True
        nb = next(w for w in t.adjacency[leaf] if not removed[w])
        seq.append(nb)
        degree[nb] -= 1
        if degree[nb] == 1:
            heapq.heappush(leaves, nb)
    return seq


def diameter(t: Tree) -> int:
    """Number of edges on a longest path."""
    return len(t.longest_path()) - 1


def degree_moment(t: Tree, r: int) -> int:
    """Sum of ``d(v) ** r`` over all vertices, with degrees taken in ``t``."""
    return sum(d**r for d in t.degrees)


def path(n: int) -> Tree:
    return Tree(n, [[w for w in (v - 1, v + 1) if 0 <= w < n] for v in range(n)])


def star(n: int) -> Tree:
    """Star on ``n`` vertices centered at vertex 0."""
    if n == 1:
        return Tree(1, [[]])
    return Tree(n, [list(range(1, n))] + [[0] for _ in range(n - 1)])


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Tree:
    """Parse the edge-list format.

    One edge per line as two whitespace-separated integers. ``#`` lines and
    blank lines are ignored; an optional ``n <count>`` line declares the
    vertex count (needed for the single-vertex tree).
    """
    edges = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or n is not None or edges:
                raise InvalidIndex(f"line {lineno}: malformed vertex-count line {raw!r}")
            n = _parse_int(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise InvalidIndex(f"line {lineno}: expected two indices, got {raw!r}")
        edges.append((_parse_int(parts[0], lineno), _parse_int(parts[1], lineno)))
    if not edges and n is None:
        raise InvalidIndex("no edges and no vertex-count line")
    return from_edge_list(edges, n)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise InvalidIndex(f"line {lineno}: {tok!r} is not a decimal index") from None


def format_edge_list(t: Tree, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    if t.n == 1:
        lines.append("n 1")
    lines.extend(f"{u} {v}" for u, v in t.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Tree:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(t: Tree, path, header: Sequence[str] = ()) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(t, header))


def induced_adjacency(t: Tree, vertices: Sequence[int]) -> dict[int, list[int]]:
    """Adjacency of the subgraph induced by ``vertices`` (keys in given order)."""
    vs = set(vertices)
    return {v: [w for w in t.adjacency[v] if w in vs] for v in vertices}


def induced_subtree(t: Tree, vertices: Sequence[int]) -> Tree:
    """Induced subgraph relabeled to ``0..len(vertices)-1`` in the given order.

    Raises :class:`Disconnected` if the vertices do not induce a tree.
    """
    index = {v: i for i, v in enumerate(vertices)}
    edges = [
        (index[v], index[w]) for v in vertices for w in t.adjacency[v] if w in index and v < w
    ]
    return from_edge_list(edges, len(vertices))


def bfs_distances(t: Tree, source: int) -> list[int]:
    dist = [-1] * t.n
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        for w in t.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist
