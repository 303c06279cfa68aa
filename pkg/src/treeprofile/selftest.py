"""Built-in oracle-equivalence run behind ``treeprofile selftest``."""

from __future__ import annotations

import sys

from .counting import count_all_subtrees, count_paths, count_stars
from .enumeration import brute_force_profile, enumerate_subtrees, profile
from .families import caterpillar, complete_dary, random_corpus, star
from .tree import path


def builtin_corpus(seed: int, trees: int):
    fixed = [path(9), star(9), caterpillar(3), caterpillar(5), complete_dary(2, 3),
             complete_dary(3, 2)]
    return fixed + random_corpus(trees, 5, 12, seed)


def run_selftest(seed: int = 2016, trees: int = 40, out=None, threads: int = 1) -> bool:
    out = out or sys.stdout
    corpus = builtin_corpus(seed, trees)
    checks = {"profile==brute": 0, "dp==oracle": 0, "enum visits==Z_k": 0}
    failures = []
    for idx, t in enumerate(corpus):
        for k in (4, 5, 6):
            if k > t.n:
                continue
            brute = brute_force_profile(t, k)
            fast = profile(t, k, threads=threads)
            checks["profile==brute"] += 1
            if fast.counts != brute.counts:
                failures.append(f"tree {idx} k={k}: profile {fast.counts} != brute {brute.counts}")
            checks["dp==oracle"] += 1
            dp = (count_all_subtrees(t, k), count_paths(t, k), count_stars(t, k))
            oracle = (brute.z_k, brute.count(1), brute.count(2))
            if dp != oracle:
                failures.append(f"tree {idx} k={k}: DP {dp} != oracle {oracle}")
            checks["enum visits==Z_k"] += 1
            if enumerate_subtrees(t, k) != brute.z_k:
                failures.append(f"tree {idx} k={k}: visit count mismatch")
    for name, n in checks.items():
        print(f"{name:<18} {n} cases", file=out)
    for f in failures:
        print(f"FAIL {f}", file=out)
    print(f"selftest {'PASS' if not failures else 'FAIL'}: {len(corpus)} trees, "
          f"{len(failures)} failures", file=out)
    return not failures
