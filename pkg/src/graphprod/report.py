"""Conjugacy length function scans: observed values next to the bound.

The scan output is deliberately plain: one CSV row per argument, columns
n, empirical, bound. The optional figure renders the same rows; it is a
file artifact, never an interactive window, so the Agg backend is forced
before pyplot loads.
"""

from __future__ import annotations

import csv

from .conjugacy import clf_upper_bound
from .oracle import empirical_clf

CSV_HEADER = ("n", "empirical", "bound")


def clf_scan_rows(spec, nmax: int, cap: int = 6) -> list:
    return [
        (n, empirical_clf(spec, n, cap), clf_upper_bound(spec, n))
        for n in range(nmax + 1)
    ]


def write_csv(rows, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)


def render_plot(rows, path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, [r[1] for r in rows], marker="o", label="observed")
    ax.plot(ns, [r[2] for r in rows], marker="s", linestyle="--", label="bound")
    ax.set_xlabel("total input length n")
    ax.set_ylabel("conjugator length")
    ax.set_title("conjugacy length function")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
