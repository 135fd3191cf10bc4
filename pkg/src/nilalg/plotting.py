"""Figures for quotient dimension profiles."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_dimension_profiles(profiles: Mapping[str, Sequence[int]], path: Union[str, Path], title: str = "") -> Path:
    """Grouped bars: quotient dimension per x-degree, one group member per variety."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    labels = list(profiles)
    top = max((len(v) for v in profiles.values()), default=0)
    width = 0.8 / max(len(labels), 1)

    fig, ax = plt.subplots(figsize=(7, 3.5))
    for i, label in enumerate(labels):
        dims = list(profiles[label])
        xs = [d + 1 + (i - (len(labels) - 1) / 2) * width for d in range(len(dims))]
        ax.bar(xs, dims, width=width, label=label)
    ax.set_xticks(range(1, top + 1))
    ax.set_xlabel("x-degree")
    ax.set_ylabel("canonical words")
    if title:
        ax.set_title(title)
    ax.legend(frameon=False)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    # fixed metadata keeps repeated renders byte-identical
    fig.savefig(path, metadata={"Software": None} if path.suffix.lower() == ".png" else None)
    plt.close(fig)
    return path
