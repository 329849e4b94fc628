"""Figure rendering for experiment reports.

Each saver writes one PNG next to the delimited report.  The Agg backend
is forced so the CLI works headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_FAMILY_COLORS = {"random": "tab:blue", "iterative": "tab:orange"}


def save_uniformity_figure(results: dict, path, title: str) -> None:
    """Histogram of per-run p-values, one overlay per family."""
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    bins = np.linspace(0.0, 1.0, 21)
    alpha_level = None
    for family, (summary, reports) in results.items():
        alpha_level = summary.config.alpha
        pvals = [r.p_value for r in reports]
        ax.hist(pvals, bins=bins, alpha=0.55,
                color=_FAMILY_COLORS.get(family),
                label=f"{family} (pass {summary.pass_fraction:.0%})")
    if alpha_level is not None:
        ax.axvline(alpha_level, color="k", ls="--", lw=1, label=f"alpha = {alpha_level:g}")
    ax.set_xlabel("chi-square p-value")
    ax.set_ylabel("runs")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_estimate_figure(rows, path) -> None:
    """Mean absolute error vs hash count, one errorbar series per family."""
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    families = sorted({r.family for r in rows})
    for family in families:
        fam_rows = sorted((r for r in rows if r.family == family),
                          key=lambda r: r.hash_count)
        counts = [r.hash_count for r in fam_rows]
        means = [r.mae_mean for r in fam_rows]
        stds = [r.mae_std for r in fam_rows]
        ax.errorbar(counts, means, yerr=stds, marker="o", capsize=3,
                    color=_FAMILY_COLORS.get(family), label=family)
    ax.set_xlabel("hash functions per signature")
    ax.set_ylabel("mean absolute error")
    ax.set_title("Jaccard estimation error")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_bench_figure(report, path) -> None:
    """Per-repetition wall times for both families."""
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    reps = np.arange(len(report.random_seconds))
    ax.plot(reps, report.random_seconds, marker="o",
            color=_FAMILY_COLORS["random"], label="random")
    ax.plot(reps, report.iterative_seconds, marker="s",
            color=_FAMILY_COLORS["iterative"], label="iterative")
    ax.axhline(report.random_mean, color=_FAMILY_COLORS["random"], ls=":", lw=1)
    ax.axhline(report.iterative_mean, color=_FAMILY_COLORS["iterative"], ls=":", lw=1)
    ax.set_xlabel("repetition")
    ax.set_ylabel("seconds")
    ax.set_title(f"Signing time (speedup {report.speedup:.2f}x, p = {report.p_value:.2g})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
