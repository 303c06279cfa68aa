"""Command-line entry point.

Exit codes: 0 success, 1 invalid input or arguments, 2 infeasible request
(k larger than the tree, enumeration cap exceeded), 3 a proven inequality
failed to verify (an implementation bug), 4 internal error.

Thread count precedence: ``--threads`` flag, then the ``TREEPROFILE_THREADS``
environment variable, then 1. The thread count never changes output bytes.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .bounds import all_checks
from .canonical import tree_from_code
from .catalog import build_catalog
from .enumeration import (
    DEFAULT_CAP,
    balance_partitions,
    brute_force_profile,
    profile,
    resolve_threads,
)
from .errors import InfeasibleRequest, TreeProfileError
from .experiments import cross_size_report, rows_to_csv, run_sequence
from .families import FAMILIES, FamilySpec, family_params
from .tree import format_edge_list, read_edge_list

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_THEOREM, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass(frozen=True)
class Config:
    enumeration_cap: int = DEFAULT_CAP
    thread_count: int = 1
    exact_output: bool = False

    def __post_init__(self):
        if self.enumeration_cap < 1000:
            raise UsageError(f"--cap must be at least 1000, got {self.enumeration_cap}")
        if self.thread_count < 1:
            raise UsageError(f"thread count must be at least 1, got {self.thread_count}")


def _threads_arg(s: str):
    if s == "auto":
        return os.cpu_count() or 1
    return int(s)


def _fraction_list(s: str) -> list[Fraction]:
    try:
        return [Fraction(x) for x in s.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a list of rationals: {s!r}") from None


def _int_list(s: str) -> list[int]:
    try:
        return [int(float(x)) if "e" in x.lower() else int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {s!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="enumeration cap on subtrees (default 10^7)")
    common.add_argument("--threads", type=_threads_arg, default=None,
                        help="worker processes, or 'auto' (default: $TREEPROFILE_THREADS or 1)")

    parser = _Parser(prog="treeprofile", description="Exact local profiles of trees.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("profile", parents=[common], help="k-profile of a tree file")
    p.add_argument("-i", "--input", required=True, help="edge-list file")
    p.add_argument("--k", type=int, required=True, help="subtree size (>= 4)")
    p.add_argument("--engine", choices=("auto", "enum", "brute"), default="auto",
                   help="enumeration backend; auto = enum")
    p.add_argument("--a", type=_fraction_list, default=None,
                   help="comma-separated thresholds a > 1; adds the balance partition")
    p.add_argument("--exact", action="store_true", help="print proportions as exact fractions")
    p.add_argument("--csv", default=None, help="also write index,code,count,proportion CSV")

    p = sub.add_parser("catalog", help="list all k-vertex trees")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("family", help="write a generated tree as an edge list")
    p.add_argument("name", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    p = sub.add_parser("bounds", parents=[common], help="verify the inequalities on a tree")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--k", type=int, action="append", required=True,
                   help="subtree size; repeat for several")
    p.add_argument("--a", type=_fraction_list, default=None,
                   help="thresholds for the unbalanced/balanced bounds (default 3/2,2,3 with --all)")
    p.add_argument("--all", action="store_true",
                   help="also run enumeration-backed and bounded-height checks")
    p.add_argument("--D", type=int, default=None,
                   help="height bound for the star claim (default: the tree's radius, with --all)")

    p = sub.add_parser("experiment", parents=[common], help="CSV of per-size quantities")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ns", type=_int_list, required=True, help="comma-separated sizes")
    p.add_argument("--vary", default="n", help="family parameter that takes the --ns values")
    p.add_argument("--d", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--engine", choices=("dp", "enum"), default="dp")
    p.add_argument("--cross-size", action="store_true",
                   help="extended stars measured at sizes k and k+1")
    p.add_argument("-o", "--output", default=None, help="CSV file (default stdout)")
    p.add_argument("--figure", default=None, help="also render a PNG figure to this path")

    p = sub.add_parser("selftest", parents=[common], help="oracle equivalence on a built-in corpus")
    p.add_argument("--seed", type=int, default=2016)
    p.add_argument("--trees", type=int, default=40)
    return parser


def _config(args) -> Config:
    return Config(
        enumeration_cap=getattr(args, "cap", DEFAULT_CAP),
        thread_count=resolve_threads(getattr(args, "threads", None)),
        exact_output=getattr(args, "exact", False),
    )


def _cmd_profile(args, cfg: Config, out) -> int:
    t = read_edge_list(args.input)
    cat = build_catalog(args.k)
    if args.engine == "brute":
        res = brute_force_profile(t, args.k, cat, cfg.enumeration_cap)
    else:
        res = profile(t, args.k, cat, cfg.enumeration_cap, cfg.thread_count)
    props = res.exact_proportions if cfg.exact_output else res.proportions
    fmt_p = str if cfg.exact_output else (lambda x: f"{x:.12g}")
    codes = [cat.code(i) for i in range(1, len(cat) + 1)]
    w = max(len("code"), max(len(c) for c in codes))
    print(f"# n={t.n} k={res.k} Z_{res.k}={res.z_k} engine={args.engine}", file=out)
    print(f"{'index':>5}  {'code':<{w}}  {'count':>12}  proportion", file=out)
    for i, (code, c, p) in enumerate(zip(codes, res.counts, props), 1):
        print(f"{i:>5}  {code:<{w}}  {c:>12}  {fmt_p(p)}", file=out)
    if args.a:
        for part in balance_partitions(t, args.k, args.a, cat, cfg.enumeration_cap):
            print(
                f"# balance a={part.a} stars={part.stars} unbalanced={part.unbalanced} "
                f"balanced_nonstar={part.balanced_nonstar}",
                file=out,
            )
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("index,code,count,proportion\n")
            for i, (code, c, p) in enumerate(zip(codes, res.counts, props), 1):
                fh.write(f"{i},{code},{c},{fmt_p(p)}\n")
    return EXIT_OK


def _cmd_catalog(args, cfg, out) -> int:
    cat = build_catalog(args.k)
    for i in range(1, len(cat) + 1):
        code = cat.code(i)
        edges = " ".join(f"{u}-{v}" for u, v in tree_from_code(code).edges())
        print(f"{i} {code} {edges}".rstrip(), file=out)
    return EXIT_OK


def _family_spec(name, args, extra=()) -> FamilySpec:
    params = {}
    for p in family_params(name):
        if p in extra:
            continue
        val = getattr(args, p, None)
        if val is None:
            raise UsageError(f"family {name} needs --{p}")
        params[p] = val
    return FamilySpec(name, params)


def _cmd_family(args, cfg, out) -> int:
    spec = _family_spec(args.name, args)
    t = spec.build()
    header = [f"family {spec.describe()}", f"vertices {t.n}"]
    text = format_edge_list(t, header)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_bounds(args, cfg, out) -> int:
    t = read_edge_list(args.input)
    thresholds = args.a if args.a is not None else (
        [Fraction(3, 2), Fraction(2), Fraction(3)] if args.all else []
    )
    failed = False
    for k in args.k:
        D = args.D
        if D is None and args.all:
            D = t.radius()
        use_thresholds = thresholds if k >= 4 else []
        for rep in all_checks(t, k, use_thresholds, D if k >= 3 else None, cfg.enumeration_cap):
            print(rep.line(), file=out)
            if rep.applicable and not rep.holds:
                failed = True
    return EXIT_THEOREM if failed else EXIT_OK


def _cmd_experiment(args, cfg, out) -> int:
    if args.cross_size:
        rows = cross_size_report(args.ns, args.k, args.engine, cfg.enumeration_cap,
                                 cfg.thread_count)
    else:
        spec = _experiment_template(args)
        rows = run_sequence(spec, args.k, args.ns, args.vary, args.engine,
                            cfg.enumeration_cap, cfg.thread_count)
    text = rows_to_csv(rows)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    if args.figure:
        from .plotting import plot_rows

        plot_rows(rows, args.figure, title="extended_star" if args.cross_size else args.family)
    for row in rows:
        if row.failed:
            print(f"row n={row.n} k={row.k} failed: {row.error}", file=sys.stderr)
    return EXIT_OK


def _experiment_template(args) -> FamilySpec:
    params = {}
    for p in family_params(args.family):
        if p == args.vary:
            params[p] = args.ns[0] if args.ns else 1
        elif p == "k":
            params[p] = args.k
        elif getattr(args, p, None) is not None:
            params[p] = getattr(args, p)
        else:
            raise UsageError(f"family {args.family} needs --{p}")
    return FamilySpec(args.family, params)


def _cmd_selftest(args, cfg, out) -> int:
    from .selftest import run_selftest

    ok = run_selftest(seed=args.seed, trees=args.trees, out=out, threads=cfg.thread_count)
    return EXIT_OK if ok else EXIT_THEOREM


_COMMANDS = {
    "profile": _cmd_profile,
    "catalog": _cmd_catalog,
    "family": _cmd_family,
    "bounds": _cmd_bounds,
    "experiment": _cmd_experiment,
    "selftest": _cmd_selftest,
}


def dispatch(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
        return _COMMANDS[args.command](args, cfg, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except InfeasibleRequest as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (TreeProfileError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as exc:  # --help / --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
