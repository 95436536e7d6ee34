"""Convergence-curve rendering for solver traces."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .model import ConvergenceTrace


def plot_convergence(
    curves: Sequence[tuple[str, ConvergenceTrace]],
    path: str | Path,
    title: str = "Best person-days vs evaluation budget",
) -> None:
    """Render best-so-far objective against evaluations for one or more traces."""
    fig, ax = plt.subplots(figsize=(8, 5))
    for label, trace in curves:
        ax.step(
            [r.evaluations for r in trace],
            [r.best_objective for r in trace],
            where="post",
            label=label,
        )
    ax.set_xlabel("evaluations (decode + objective calls)")
    ax.set_ylabel("best objective (person-days)")
    ax.set_title(title)
    ax.grid(alpha=0.3)
    if curves:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
