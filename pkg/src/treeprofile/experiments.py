"""Path/star proportions, subtree totals and degree moments along tree sequences.

Rows are computed from the polynomial-time counters by default; the
``enum`` engine recomputes path and star counts from a full enumerated
profile when the subtree total is under the cap, and records which backend
produced each row.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .counting import count_all_subtrees, count_paths, count_stars
from .enumeration import DEFAULT_CAP, profile, resolve_threads
from .errors import TreeProfileError
from .families import FamilySpec
from .tree import Tree, degree_moment, diameter

CSV_HEADER = (
    "family", "n", "k", "z_k", "c_path", "c_star", "p1", "p2",
    "moment", "z_over_n", "moment_over_n", "diameter", "backend",
)


@dataclass(frozen=True)
class ExperimentRow:
    family: str
    n: int
    k: int
    z_k: int | None = None
    c_path: int | None = None
    c_star: int | None = None
    p1: float | None = None
    p2: float | None = None
    moment: int | None = None
    z_over_n: float | None = None
    moment_over_n: float | None = None
    diameter: int | None = None
    backend: str = "dp"
    error: str | None = None

    @property
    def failed(self) -> bool:
        return self.error is not None

    def csv_fields(self) -> list[str]:
        if self.failed:
            return [self.family, str(self.n), str(self.k)] + [""] * 9 + ["failed"]
        return [
            self.family, str(self.n), str(self.k), str(self.z_k), str(self.c_path),
            str(self.c_star), _g(self.p1), _g(self.p2), str(self.moment),
            _g(self.z_over_n), _g(self.moment_over_n), str(self.diameter), self.backend,
        ]


def _g(x: float) -> str:
    return f"{x:.12g}"


def compute_row(t: Tree, family: str, k: int, engine: str = "dp",
                cap: int = DEFAULT_CAP) -> ExperimentRow:
    if engine not in ("dp", "enum"):
        raise ValueError(f"unknown engine {engine!r}")
    z = count_all_subtrees(t, k)
    backend = "dp"
    if engine == "enum" and k >= 4 and 0 < z <= cap:
        prof = profile(t, k, cap=cap)
        c_path, c_star = prof.count(1), prof.count(2)
        backend = "enum"
    else:
        c_path = count_paths(t, k)
        c_star = count_stars(t, k) if k >= 3 else 0
    if z == 0:
        raise TreeProfileError(f"Z_{k} = 0 for a tree on {t.n} vertices")
    moment = degree_moment(t, k - 1)
    return ExperimentRow(
        family=family, n=t.n, k=k, z_k=z, c_path=c_path, c_star=c_star,
        p1=c_path / z, p2=c_star / z, moment=moment, z_over_n=z / t.n,
        moment_over_n=moment / t.n, diameter=diameter(t), backend=backend,
    )


def _row_task(args) -> ExperimentRow:
    spec, k, engine, cap = args
    try:
        t = spec.build()
    except TreeProfileError as exc:
        size = spec.params.get("n", 0)
        return ExperimentRow(spec.name, size, k, backend="failed", error=str(exc))
    try:
        return compute_row(t, spec.name, k, engine, cap)
    except TreeProfileError as exc:
        return ExperimentRow(spec.name, t.n, k, backend="failed", error=str(exc))


def _run(tasks, threads) -> list[ExperimentRow]:
    threads = resolve_threads(threads)
    if threads == 1 or len(tasks) < 2:
        return [_row_task(task) for task in tasks]
    with ProcessPoolExecutor(min(threads, len(tasks))) as pool:
        return list(pool.map(_row_task, tasks))


def run_sequence(
    spec: FamilySpec | str, k: int, ns: Sequence[int], vary: str = "n",
    engine: str = "dp", cap: int = DEFAULT_CAP, threads: int | None = 1,
) -> list[ExperimentRow]:
    """One row per value in ``ns``, substituted for parameter ``vary``.

    ``spec`` is a template: its other parameters are kept. The ``n`` column
    is always the vertex count of the built tree. Per-row failures are
    returned as rows with ``error`` set.
    """
    if isinstance(spec, str):
        spec = _template(spec, vary, ns, k)
    tasks = [(spec.with_params(**{vary: x}), k, engine, cap) for x in ns]
    return _run(tasks, threads)


def _template(name: str, vary: str, ns, k: int) -> FamilySpec:
    params = {vary: ns[0] if ns else 1}
    if name == "extended_star":
        params.setdefault("k", k)
    if name == "random_prufer":
        params.setdefault("seed", 0)
    return FamilySpec(name, params)


def cross_size_report(n_list: Sequence[int], k: int, engine: str = "dp",
                      cap: int = DEFAULT_CAP, threads: int | None = 1) -> list[ExperimentRow]:
    """Extended stars built for size ``k``, measured at sizes ``k`` and ``k+1``."""
    tasks = []
    for n in n_list:
        spec = FamilySpec("extended_star", {"n": n, "k": k})
        tasks.append((spec, k, engine, cap))
        tasks.append((spec, k + 1, engine, cap))
    return _run(tasks, threads)


def rows_to_csv(rows: Sequence[ExperimentRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
    return buf.getvalue()


def write_csv(rows: Sequence[ExperimentRow], path) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(rows_to_csv(rows))
