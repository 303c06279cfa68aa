"""Deterministic tree families and a portable seeded random-tree source.

Random trees come from uniform Prüfer sequences drawn with
:class:`XorShift64Star`. The generator is fixed so that corpora reproduce
bit-exactly on any platform:

* seeding: ``state = splitmix64(seed mod 2**64)``; a zero state is replaced
  by ``0x9E3779B97F4A7C15``;
* step: ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27`` (mod 2**64), output
  ``x * 0x2545F4914F6CDD1D mod 2**64``;
* ``below(n)``: rejection sampling, drawing until the output is smaller than
  ``2**64 - (2**64 mod n)``, then reducing mod ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParam, SizeCap
from .tree import Tree, path as _path, prufer_decode, star as _star

MASK64 = (1 << 64) - 1
SIZE_CAP = 10**6
FAMILIES = ("caterpillar", "extended_star", "complete_dary", "path", "star", "random_prufer")


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or 0x9E3779B97F4A7C15

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, n: int) -> int:
        if n < 1:
            raise InvalidParam(f"below() needs n >= 1, got {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next()
            if r < limit:
                return r % n


def caterpillar(n: int) -> Tree:
    """Spine v_0..v_{n+1} (vertices 0..n+1) with a leg on each of v_1..v_n.

    The leg on spine vertex ``i`` is vertex ``n + 1 + i``.
    """
    if n < 1:
        raise InvalidParam(f"caterpillar needs n >= 1, got {n}")
    size = 2 * n + 2
    if size > SIZE_CAP:
        raise SizeCap(f"caterpillar({n}) has {size} vertices > {SIZE_CAP}")
    adjacency = [[] for _ in range(size)]
    for i in range(n + 1):
        adjacency[i].append(i + 1)
        adjacency[i + 1].append(i)
    for i in range(1, n + 1):
        leg = n + 1 + i
        adjacency[i].append(leg)
        adjacency[leg].append(i)
    return Tree(size, adjacency)


def extended_star_degree(n: int, k: int) -> int:
    """Center degree: n ** (2 / (2k - 1)) rounded half up, at least 3.

    Evaluated in integers: the rounded value is the largest d with
    (2d - 1) ** (2k - 1) <= 2 ** (2k - 1) * n ** 2.
    """
    e = 2 * k - 1
    target = (2**e) * n * n
    d = max(1, round(n ** (2 / e)))
    while (2 * d - 1) ** e > target:
        d -= 1
    while (2 * d + 1) ** e <= target:
        d += 1
    return max(3, d)


def extended_star(n: int, k: int) -> Tree:
    """Spider with center 0 and near-equal arms totalling n - 1 vertices.

    Arms get ``(n - 1) // d`` vertices each and the remainder goes one per
    arm starting from the first. Arm vertices are numbered outward.
    """
    if n < 10 or k < 4:
        raise InvalidParam(f"extended_star needs n >= 10 and k >= 4, got n={n}, k={k}")
    if n > SIZE_CAP:
        raise SizeCap(f"extended_star size {n} > {SIZE_CAP}")
    d = extended_star_degree(n, k)
    q, r = divmod(n - 1, d)
    adjacency = [[] for _ in range(n)]
    nxt = 1
    for arm in range(d):
        length = q + (1 if arm < r else 0)
        prev = 0
        for _ in range(length):
            adjacency[prev].append(nxt)
            adjacency[nxt].append(prev)
            prev = nxt
            nxt += 1
    return Tree(n, adjacency)


def complete_dary(d: int, height: int) -> Tree:
    """Complete d-ary tree of the given height, root 0, vertices in BFS order."""
    if d < 2 or height < 1:
        raise InvalidParam(f"complete_dary needs d >= 2 and height >= 1, got d={d}, height={height}")
    size = (d ** (height + 1) - 1) // (d - 1)
    if size > SIZE_CAP:
        raise SizeCap(f"complete_dary({d}, {height}) has {size} vertices > {SIZE_CAP}")
    adjacency = [[] for _ in range(size)]
    for child in range(1, size):
        parent = (child - 1) // d
        adjacency[parent].append(child)
        adjacency[child].append(parent)
    return Tree(size, adjacency)


def path(n: int) -> Tree:
    if n < 1:
        raise InvalidParam(f"path needs n >= 1, got {n}")
    if n > SIZE_CAP:
        raise SizeCap(f"path size {n} > {SIZE_CAP}")
    return _path(n)


def star(n: int) -> Tree:
    """Star on n vertices (K_{1,n-1}) centered at 0."""
    if n < 1:
        raise InvalidParam(f"star needs n >= 1, got {n}")
    if n > SIZE_CAP:
        raise SizeCap(f"star size {n} > {SIZE_CAP}")
    return _star(n)


def random_prufer_sequence(n: int, seed: int) -> list[int]:
    rng = XorShift64Star(seed)
    return [rng.below(n) for _ in range(n - 2)]


def random_prufer(n: int, seed: int) -> Tree:
    if n < 2:
        raise InvalidParam(f"random_prufer needs n >= 2, got {n}")
    if n > SIZE_CAP:
        raise SizeCap(f"random_prufer size {n} > {SIZE_CAP}")
    return prufer_decode(random_prufer_sequence(n, seed), n)


def random_corpus(count: int, n_min: int, n_max: int, seed: int) -> list[Tree]:
    """``count`` random trees with sizes drawn uniformly from [n_min, n_max].

    Sizes and per-tree seeds come from one generator seeded with ``seed``.
    """
    rng = XorShift64Star(seed)
    out = []
    for _ in range(count):
        n = n_min + rng.below(n_max - n_min + 1)
        out.append(random_prufer(n, rng.next()))
    return out


_PARAMS = {
    "caterpillar": ("n",),
    "extended_star": ("n", "k"),
    "complete_dary": ("d", "height"),
    "path": ("n",),
    "star": ("n",),
    "random_prufer": ("n", "seed"),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters."""

    name: str
    params: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in _PARAMS:
            raise InvalidParam(f"unknown family {self.name!r}; expected one of {FAMILIES}")
        missing = [p for p in _PARAMS[self.name] if p not in self.params]
        if missing:
            raise InvalidParam(f"family {self.name} is missing parameter(s) {missing}")
        extra = sorted(set(self.params) - set(_PARAMS[self.name]))
        if extra:
            raise InvalidParam(f"family {self.name} does not take parameter(s) {extra}")

    def with_params(self, **kw) -> FamilySpec:
        return FamilySpec(self.name, {**self.params, **kw})

    def build(self) -> Tree:
        p = self.params
        if self.name == "caterpillar":
            return caterpillar(p["n"])
        if self.name == "extended_star":
            return extended_star(p["n"], p["k"])
        if self.name == "complete_dary":
            return complete_dary(p["d"], p["height"])
        if self.name == "path":
            return path(p["n"])
        if self.name == "star":
            return star(p["n"])
        return random_prufer(p["n"], p["seed"])

    def describe(self) -> str:
        args = ", ".join(f"{k}={self.params[k]}" for k in _PARAMS[self.name])
        return f"{self.name}({args})"


def family_params(name: str) -> tuple[str, ...]:
    return _PARAMS[name]
