"""Figures for experiment rows, written next to the CSV output."""

from __future__ import annotations

from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_rows(rows, path, title=None):
    """Proportions and normalized counts against tree size, one line per (family, k).

    Failed rows are skipped. Returns the saved figure path.
    """
    groups = defaultdict(list)
    for row in rows:
        if not row.failed:
            groups[(row.family, row.k)].append(row)

    fig, (ax_p, ax_m) = plt.subplots(1, 2, figsize=(10, 4))
    for (family, k), rs in sorted(groups.items()):
        rs = sorted(rs, key=lambda r: r.n)
        ns = [r.n for r in rs]
        ax_p.plot(ns, [r.p1 for r in rs], "o-", label=f"{family} p1 (k={k})")
        ax_p.plot(ns, [r.p2 for r in rs], "s--", label=f"{family} p2 (k={k})")
        ax_m.plot(ns, [r.moment_over_n for r in rs], "o-", label=f"moment/n (k={k})")
        ax_m.plot(ns, [r.z_over_n for r in rs], "s--", label=f"Z_k/n (k={k})")

    ax_p.set_xscale("log")
    ax_p.set_ylim(-0.02, 1.02)
    ax_p.set_xlabel("vertices")
    ax_p.set_ylabel("proportion")
    ax_p.legend(fontsize=7)
    ax_m.set_xscale("log")
    ax_m.set_yscale("log")
    ax_m.set_xlabel("vertices")
    ax_m.set_ylabel("per vertex")
    ax_m.legend(fontsize=7)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    # fixed metadata keeps PNG bytes stable between runs
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path
