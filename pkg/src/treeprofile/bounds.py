"""Finite-instance checks of the subtree-count inequalities.

Every check returns a :class:`BoundReport` whose ``holds`` flag means
``lhs <= rhs`` under exact rational comparison. Where a real power with a
fractional exponent is unavoidable the left side is rounded *up* (and the
right side down), so ``holds=True`` is a certificate. A failing verdict that
involved rounding is recomputed at higher precision before being reported.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .counting import count_all_subtrees, count_paths, count_stars
from .enumeration import DEFAULT_CAP, balance_partitions, resolve_threads
from .errors import HeightExceeded, InvalidParam, KTooSmall, NotApplicable
from .tree import Tree, degree_moment, diameter

Number = int | Fraction

EXACT = "exact"


@dataclass(frozen=True)
class BoundReport:
    name: str
    lhs: Number | None
    rhs: Number | None
    holds: bool | None
    context: dict = field(default_factory=dict)
    applicable: bool = True
    rounding: str = EXACT

    def line(self) -> str:
        ctx = " ".join(f"{k}={v}" for k, v in self.context.items())
        if not self.applicable:
            return f"{self.name:<16} n/a   {ctx}"
        verdict = "holds" if self.holds else "FAILS"
        return (
            f"{self.name:<16} {verdict:<5} lhs={_fmt(self.lhs)} rhs={_fmt(self.rhs)} "
            f"{ctx} rounding={self.rounding}"
        )


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x} (~{float(x):.6g})"
    return str(x)


def _report(name, lhs, rhs, context, rounding=EXACT) -> BoundReport:
    return BoundReport(name, lhs, rhs, lhs <= rhs, context, True, rounding)


# -- integer roots and directed rounding -------------------------------------


def iroot(x: int, q: int) -> int:
    """Floor of the q-th root of a nonnegative integer."""
    if x < 0 or q < 1:
        raise ValueError("iroot needs x >= 0 and q >= 1")
    if x < 2 or q == 1:
        return x
    g = 1 << -(-x.bit_length() // q)
    while True:
        y = ((q - 1) * g + x // g ** (q - 1)) // q
        if y >= g:
            break
        g = y
    while g**q > x:
        g -= 1
    while (g + 1) ** q <= x:
        g += 1
    return g


def rational_power(x: Fraction, e: Fraction, upward: bool, bits: int = 64) -> tuple[Fraction, bool]:
    """Rational bound on ``x ** e`` for ``x >= 0`` and rational ``e >= 0``.

    Returns ``(value, exact)``. When the power is irrational the value is
    rounded in the requested direction to ``bits`` fractional bits of the
    q-th root.
    """
    x, e = Fraction(x), Fraction(e)
    if x < 0 or e < 0:
        raise ValueError("rational_power needs x >= 0 and e >= 0")
    p, q = e.numerator, e.denominator
    y = x**p
    if q == 1 or y == 0:
        return y, True
    num, den = y.numerator, y.denominator
    # y ** (1/q) = (num * den**(q-1)) ** (1/q) / den
    radicand = num * den ** (q - 1)
    r = iroot(radicand, q)
    if r**q == radicand:
        return Fraction(r, den), True
    scale = 1 << bits
    scaled = radicand * scale**q
    r = iroot(scaled, q)
    if upward and r**q != scaled:
        r += 1
    return Fraction(r, den * scale), False


# -- checks ------------------------------------------------------------------


def check_simple_bound(t: Tree, k: int) -> BoundReport:
    lhs = count_all_subtrees(t, k)
    rhs = factorial(k - 1) * degree_moment(t, k - 1)
    return _report("simple", lhs, rhs, {"n": t.n, "k": k})


def check_star_moment_bound(t: Tree, k: int) -> BoundReport:
    if k < 3:
        raise KTooSmall(f"star-moment bound needs k >= 3, got k={k}")
    lhs = Fraction(degree_moment(t, k - 1), (k - 1) ** (k - 1)) - t.n
    return _report("star_moment", lhs, count_stars(t, k), {"n": t.n, "k": k})


def check_many_paths(t: Tree, k: int) -> BoundReport:
    diam = diameter(t)
    ctx = {"n": t.n, "k": k, "diameter": diam}
    if diam < 2 * k - 2:
        return BoundReport("many_paths", None, None, None, ctx, applicable=False)
    return _report("many_paths", Fraction(t.n, 2), count_paths(t, k), ctx)


def check_unbalanced_bound(t: Tree, k: int, a, cap: int = DEFAULT_CAP) -> BoundReport:
    return _unbalanced_report(t, k, Fraction(a), balance_partitions(t, k, [a], cap=cap)[0])


def _unbalanced_report(t, k, a, part) -> BoundReport:
    rhs = Fraction(factorial(k - 1), 1) / a * degree_moment(t, k - 1)
    return _report("unbalanced", part.unbalanced, rhs, {"n": t.n, "k": k, "a": a})


def check_balanced_bound(t: Tree, k: int, a, cap: int = DEFAULT_CAP) -> BoundReport:
    return _balanced_report(t, k, Fraction(a), balance_partitions(t, k, [a], cap=cap)[0])


def _balanced_report(t, k, a, part) -> BoundReport:
    rhs = 2 * factorial(k - 1) * a ** ((k - 2) ** 2) * degree_moment(t, k - 2)
    return _report("balanced", part.balanced_nonstar, rhs, {"n": t.n, "k": k, "a": a})


def check_holder(t: Tree, k: int) -> BoundReport:
    """Hölder step, compared after raising both sides to the power k-1."""
    if k < 3:
        raise KTooSmall(f"Hölder check needs k >= 3, got k={k}")
    lhs = degree_moment(t, k - 2) ** (k - 1)
    rhs = t.n * degree_moment(t, k - 1) ** (k - 2)
    return _report("holder", lhs, rhs, {"n": t.n, "k": k}, rounding="exact (both sides ^(k-1))")


def mix_threshold(k: int) -> Fraction:
    return Fraction(1, 2 * (k - 1) ** (k - 1) * factorial(k - 1))


def check_mix_lower_bound(t: Tree, k: int) -> BoundReport:
    diam = diameter(t)
    if diam < 2 * k - 2:
        raise NotApplicable(f"diameter {diam} < 2k-2 = {2 * k - 2}")
    z = count_all_subtrees(t, k)
    rhs = Fraction(count_stars(t, k) + count_paths(t, k), z)
    return _report("mix", mix_threshold(k), rhs, {"n": t.n, "k": k, "diameter": diam})


# -- bounded-height constants ------------------------------------------------


@dataclass(frozen=True)
class DiamConstants:
    k: int
    D: int
    alpha: Fraction
    beta: Fraction
    n_threshold: int
    alpha_exact: bool = True
    """False when ``alpha`` is a certified lower bound rather than the exact value."""


def _ceil_sqrt(m: int) -> int:
    r = iroot(m, 2)
    return r if r * r == m else r + 1


def diam_constants(k: int, D: int, bits: int = 64) -> DiamConstants:
    """Constants of the bounded-height star claim, by the induction recursion.

    ``beta`` and ``n_threshold`` are exact. ``alpha`` is exact while every
    earlier ``beta`` is an integer; afterwards the fractional power in the
    denominator is rounded up, so ``alpha`` is rounded down.
    """
    if k < 3 or D < 1:
        raise InvalidParam(f"diam_constants needs k >= 3 and D >= 1, got k={k}, D={D}")
    alpha = Fraction(1, k ** (k - 1))
    beta = Fraction(k - 1)
    big_n = k
    exact = True
    base = _ceil_sqrt((k - 1) ** 3)
    for _ in range(2, D + 1):
        denom, denom_exact = rational_power(Fraction(big_n + 2), beta, upward=True, bits=bits)
        exact = exact and denom_exact
        alpha = min(Fraction(1, (k - 1) ** (k - 1)), alpha / denom)
        beta = min(Fraction(2 * (k - 1), 3), (beta + 2) / 3)
        big_n = max(base, (big_n + 2) ** 3)
    return DiamConstants(k, D, alpha, beta, big_n, exact)


def check_diam_claim(t: Tree, k: int, D: int, bits: int = 64) -> BoundReport:
    """Star count against the bounded-height lower bound, rooted at the center."""
    height = t.radius()
    if height > D:
        raise HeightExceeded(f"tree has radius {height} > D={D}")
    rhs = count_stars(t, k)
    ctx = {"n": t.n, "k": k, "D": D, "height": height}
    while True:
        c = diam_constants(k, D, bits)
        x = max(t.n - c.n_threshold, 0)
        power, exact = rational_power(Fraction(x), c.beta, upward=True, bits=bits)
        lhs = c.alpha * power
        rounding = EXACT if exact else f"lhs rounded up ({bits} bits)"
        if not c.alpha_exact:
            rounding += "; alpha rounded down"
        report = _report("diam_claim", lhs, rhs, ctx, rounding)
        if report.holds or (exact and c.alpha_exact) or bits >= 1024:
            return report
        bits *= 4


# -- batches -----------------------------------------------------------------


def dp_checks(t: Tree, k: int) -> list[BoundReport]:
    """All checks that need only the polynomial-time counters."""
    reports = [
        check_simple_bound(t, k),
        check_star_moment_bound(t, k),
        check_holder(t, k),
        check_many_paths(t, k),
    ]
    try:
        reports.append(check_mix_lower_bound(t, k))
    except NotApplicable:
        reports.append(BoundReport(
            "mix", None, None, None, {"n": t.n, "k": k, "diameter": diameter(t)},
            applicable=False,
        ))
    return reports


def enumeration_checks(t: Tree, k: int, thresholds, cap: int = DEFAULT_CAP) -> list[BoundReport]:
    """Unbalanced and balanced bounds for every threshold, one enumeration."""
    parts = balance_partitions(t, k, thresholds, cap=cap)
    out = []
    for part in parts:
        out.append(_unbalanced_report(t, k, part.a, part))
        out.append(_balanced_report(t, k, part.a, part))
    return out


def all_checks(t: Tree, k: int, thresholds=(), D: int | None = None,
               cap: int = DEFAULT_CAP) -> list[BoundReport]:
    reports = dp_checks(t, k)
    if thresholds and k <= t.n:
        reports.extend(enumeration_checks(t, k, thresholds, cap))
    if D is not None:
        reports.append(check_diam_claim(t, k, D))
    return reports


def _corpus_task(args):
    t, ks, thresholds, cap = args
    out = []
    for k in ks:
        out.extend(dp_checks(t, k))
        if thresholds and 4 <= k <= t.n:
            out.extend(enumeration_checks(t, k, thresholds, cap))
    return out


def check_corpus(trees, ks, thresholds=(), cap: int = DEFAULT_CAP,
                 threads: int | None = 1) -> list[list[BoundReport]]:
    """Reports per tree, in input order, optionally spread over worker processes."""
    threads = resolve_threads(threads)
    tasks = [(t, tuple(ks), tuple(Fraction(a) for a in thresholds), cap) for t in trees]
    if threads == 1 or len(tasks) < 2:
        return [_corpus_task(task) for task in tasks]
    with ProcessPoolExecutor(threads) as pool:
        return list(pool.map(_corpus_task, tasks, chunksize=max(1, len(tasks) // (4 * threads))))
