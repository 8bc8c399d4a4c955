"""Matplotlib renderings saved next to the delimited report files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .agent import ACTION_ORDER, QTable, greedy_policy
from .evaluation import ComparisonReport, ConfusionMatrix
from .lexicons import LABEL_ORDER

LABEL_NAMES = [label.name for label in LABEL_ORDER]
ACTION_NAMES = [action.name for action in ACTION_ORDER]

plt.rcParams.update({
    "figure.dpi": 110,
    "font.size": 9,
    "axes.titlesize": 10,
})


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path


def confusion_heatmap(matrix: ConfusionMatrix, path: str | Path,
                      title: str = "confusion matrix") -> Path:
    fig, ax = plt.subplots(figsize=(3.4, 3.0))
    im = ax.imshow(matrix.counts, cmap="Blues")
    ax.set_xticks(range(3), LABEL_NAMES, rotation=30, ha="right")
    ax.set_yticks(range(3), LABEL_NAMES)
    ax.set_xlabel("predicted")
    ax.set_ylabel("true")
    ax.set_title(title)
    threshold = matrix.counts.max() / 2 if matrix.counts.max() else 0.5
    for i in range(3):
        for j in range(3):
            color = "white" if matrix.counts[i, j] > threshold else "black"
            ax.text(j, i, str(matrix.counts[i, j]), ha="center", va="center",
                    color=color)
    fig.colorbar(im, ax=ax, fraction=0.046)
    return _save(fig, path)


def model_comparison(comparison: ComparisonReport, path: str | Path) -> Path:
    names = list(comparison.models)
    accuracy = [comparison.models[n].accuracy for n in names]
    macro_f1 = [comparison.models[n].macro_f1 for n in names]
    x = np.arange(len(names))
    fig, ax = plt.subplots(figsize=(5.2, 3.0))
    ax.bar(x - 0.2, accuracy, width=0.4, label="accuracy")
    ax.bar(x + 0.2, macro_f1, width=0.4, label="macro-F1")
    ax.set_xticks(x, names, rotation=20, ha="right")
    ax.set_ylim(0, 1.05)
    ax.set_title("scorers vs fused model (test split)")
    ax.legend(frameon=False)
    ax.grid(axis="y", alpha=0.3)
    return _save(fig, path)


def qtable_heatmap(qtable: QTable, path: str | Path,
                   title: str = "learned action values") -> Path:
    fig, ax = plt.subplots(figsize=(4.6, 3.2))
    im = ax.imshow(qtable.q, cmap="viridis")
    ax.set_xticks(range(3), [n.replace("Recommend", "Rec") for n in ACTION_NAMES])
    ax.set_yticks(range(3), LABEL_NAMES)
    ax.set_xlabel("action")
    ax.set_ylabel("state")
    ax.set_title(title)
    policy = greedy_policy(qtable)
    span = qtable.q.max() - qtable.q.min()
    mid = qtable.q.min() + span / 2 if span else qtable.q.min()
    for i, state in enumerate(LABEL_ORDER):
        for j in range(3):
            color = "black" if qtable.q[i, j] > mid else "white"
            ax.text(j, i, f"{qtable.q[i, j]:.3f}", ha="center", va="center",
                    color=color)
        best = int(policy[state])
        ax.add_patch(plt.Rectangle((best - 0.5, i - 0.5), 1, 1, fill=False,
                                   edgecolor="red", linewidth=2))
    fig.colorbar(im, ax=ax, fraction=0.046)
    return _save(fig, path)


def tfidf_heatmap(matrix: list[list[float]], doc_ids: list[int],
                  terms: list[str], path: str | Path) -> Path:
    data = np.array(matrix) if matrix else np.zeros((1, 1))
    fig, ax = plt.subplots(figsize=(max(4.0, 0.28 * len(terms)),
                                    max(2.4, 0.3 * len(doc_ids))))
    im = ax.imshow(data, cmap="Reds", aspect="auto")
    ax.set_xticks(range(len(terms)), terms, rotation=90)
    ax.set_yticks(range(len(doc_ids)), [str(d) for d in doc_ids])
    ax.set_ylabel("document")
    ax.set_title("term weights per document")
    fig.colorbar(im, ax=ax, fraction=0.03)
    return _save(fig, path)


def score_histograms(score_rows: list[tuple[float, float, float, float]],
                     path: str | Path) -> Path:
    """Distribution of each scorer's output across the corpus."""
    names = ["vader_compound", "textblob_polarity", "afinn_norm", "swn_score"]
    data = np.array(score_rows) if score_rows else np.zeros((1, 4))
    fig, axes = plt.subplots(2, 2, figsize=(6.4, 4.6))
    for i, (ax, name) in enumerate(zip(axes.flat, names)):
        ax.hist(data[:, i], bins=40, color="#4878a8")
        ax.set_title(name)
        ax.grid(alpha=0.3)
    fig.tight_layout()
    return _save(fig, path)
