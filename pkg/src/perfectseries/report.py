"""Report path: delimited series data plus rendered figures.

The CSV carries the exact fractions verbatim.  The figures necessarily
convert those fractions to floats, but only to place pixels: nothing on
the rendering side ever flows back into a computed or certified value.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .certificate import fraction_str
from .series import monotone_bounded_report

CSV_NAME = "series_partial_sums.csv"
SUMS_FIGURE_NAME = "partial_sums.png"
BRANCHES_FIGURE_NAME = "branch_bounds.png"


def write_series_report(cutoffs: list[int], out_dir: str, strategy: str = "auto") -> dict[str, str]:
    """Evaluate the series at each cutoff and write CSV + figures to out_dir.

    Returns the paths written, keyed by artifact kind.
    """
    report = monotone_bounded_report(cutoffs, strategy)
    os.makedirs(out_dir, exist_ok=True)

    csv_path = os.path.join(out_dir, CSV_NAME)
    with open(csv_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["cutoff", "total", "even_part", "odd_part", "bound"])
        for entry in report.entries:
            writer.writerow(
                [
                    str(entry.cutoff),
                    fraction_str(entry.total),
                    fraction_str(entry.even_part),
                    fraction_str(entry.odd_part),
                    fraction_str(report.bound),
                ]
            )

    xs = [entry.cutoff for entry in report.entries]
    # floats below are for pixel placement only
    totals = [entry.total.numerator / entry.total.denominator for entry in report.entries]
    evens = [entry.even_part.numerator / entry.even_part.denominator for entry in report.entries]
    odds = [entry.odd_part.numerator / entry.odd_part.denominator for entry in report.entries]

    sums_path = os.path.join(out_dir, SUMS_FIGURE_NAME)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(xs, totals, marker="o", color="tab:blue", label="partial sum")
    ax.axhline(4, color="tab:red", linestyle="--", label="bound 4")
    ax.set_xscale("log")
    ax.set_xlabel("cutoff")
    ax.set_ylabel("sum of 1/n over perfect n <= cutoff")
    ax.set_title("Partial sums of reciprocals of perfect numbers")
    ax.set_ylim(bottom=0)
    ax.legend(loc="center right")
    fig.tight_layout()
    fig.savefig(sums_path, dpi=150)
    plt.close(fig)

    branches_path = os.path.join(out_dir, BRANCHES_FIGURE_NAME)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(xs, evens, marker="o", color="tab:green", label="even branch")
    ax.plot(xs, odds, marker="s", color="tab:purple", label="odd branch")
    ax.axhline(2, color="tab:red", linestyle="--", label="branch bound 2")
    ax.set_xscale("log")
    ax.set_xlabel("cutoff")
    ax.set_ylabel("branch partial sum")
    ax.set_title("Even and odd branches against their bound")
    ax.set_ylim(bottom=0)
    ax.legend(loc="center right")
    fig.tight_layout()
    fig.savefig(branches_path, dpi=150)
    plt.close(fig)

    return {"csv": csv_path, "partial_sums_figure": sums_path, "branch_bounds_figure": branches_path}
