"""Confusion-matrix metrics and the tool-vs-fused-model comparison report."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hybrid import FeatureRow, SoftmaxClassifier, predict
from .lexicons import LABEL_ORDER, TOOL_ORDER, SentimentLabel

N = len(LABEL_ORDER)


@dataclass(frozen=True)
class ConfusionMatrix:
    """counts[t][p]: rows are true labels, columns predictions, label order fixed."""

    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class MetricsReport:
    per_class: dict[SentimentLabel, ClassMetrics]
    accuracy: float
    macro_f1: float
    support: dict[SentimentLabel, int]
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class ComparisonReport:
    """Per-model metrics plus the dataset context they were computed on."""

    models: dict[str, MetricsReport]
    dataset_rows: int
    tie_excluded: int
    test_rows: int = 0


def confusion(truth: list[SentimentLabel],
              predicted: list[SentimentLabel]) -> ConfusionMatrix:
    if len(truth) != len(predicted):
        raise ValueError(f"length mismatch: {len(truth)} truths vs "
                         f"{len(predicted)} predictions")
    if not truth:
        raise ValueError("cannot build a confusion matrix from zero pairs")
    counts = np.zeros((N, N), dtype=int)
    for t, p in zip(truth, predicted):
        counts[int(t), int(p)] += 1
    return ConfusionMatrix(counts=counts)


def metrics(matrix: ConfusionMatrix) -> MetricsReport:
    """Per-class precision/recall/F1 with the zero-denominator-is-zero rule."""
    counts = matrix.counts
    if counts.sum() < 1:
        raise ValueError("empty confusion matrix")
    per_class: dict[SentimentLabel, ClassMetrics] = {}
    support: dict[SentimentLabel, int] = {}
    flags: list[str] = []
    f1s = []
    for label in LABEL_ORDER:
        c = int(label)
        tp = int(counts[c, c])
        predicted_c = int(counts[:, c].sum())
        actual_c = int(counts[c, :].sum())
        if predicted_c == 0:
            precision = 0.0
            flags.append(f"precision[{label.name}] set to 0 (never predicted)")
        else:
            precision = tp / predicted_c
        if actual_c == 0:
            recall = 0.0
            flags.append(f"recall[{label.name}] set to 0 (no true instances)")
        else:
            recall = tp / actual_c
        if precision + recall == 0.0:
            f1 = 0.0
        else:
            f1 = 2 * precision * recall / (precision + recall)
        per_class[label] = ClassMetrics(precision=precision, recall=recall, f1=f1)
        support[label] = actual_c
        f1s.append(f1)
    return MetricsReport(
        per_class=per_class,
        accuracy=float(np.trace(counts) / counts.sum()),
        macro_f1=float(np.mean(f1s)),
        support=support,
        flags=tuple(flags),
    )


def compare_tools(rows: list[FeatureRow], model: SoftmaxClassifier,
                  test_rows: list[FeatureRow]) -> ComparisonReport:
    """Score each tool's rule label and the fused model against consensus.

    rows is the full (non-tie) dataset and supplies context counts; metrics
    are computed on test_rows only.
    """
    if not test_rows:
        raise ValueError("empty test set")
    truth = [r.consensus for r in test_rows]
    if any(t is None for t in truth):
        raise ValueError("test rows must have non-tie consensus")

    reports: dict[str, MetricsReport] = {}
    hybrid_pred = [predict(model, r.features) for r in test_rows]
    reports["hybrid"] = metrics(confusion(truth, hybrid_pred))
    for i, tool in enumerate(TOOL_ORDER):
        tool_pred = [r.tool_labels[i] for r in test_rows]
        reports[tool] = metrics(confusion(truth, tool_pred))

    tie_excluded = sum(1 for r in rows if r.consensus is None)
    return ComparisonReport(models=reports,
                            dataset_rows=len(rows),
                            tie_excluded=tie_excluded,
                            test_rows=len(test_rows))


def comparison_to_dict(comparison: ComparisonReport) -> dict:
    """JSON-ready form of the comparison report."""
    models = []
    for name, report in comparison.models.items():
        models.append({
            "name": name,
            "accuracy": report.accuracy,
            "macro_f1": report.macro_f1,
            "per_class": {
                label.name: {
                    "precision": report.per_class[label].precision,
                    "recall": report.per_class[label].recall,
                    "f1": report.per_class[label].f1,
                } for label in LABEL_ORDER
            },
            "support": {label.name: report.support[label] for label in LABEL_ORDER},
            "flags": list(report.flags),
        })
    return {
        "models": models,
        "dataset": {
            "rows": comparison.dataset_rows,
            "tie_excluded": comparison.tie_excluded,
            "test_rows": comparison.test_rows,
        },
    }


def render_comparison(comparison: ComparisonReport) -> str:
    """Aligned plain-text comparison table."""
    headers = ["model", "accuracy", "macro_f1",
               "f1_neg", "f1_neu", "f1_pos"]
    rows = [headers]
    for name, report in comparison.models.items():
        rows.append([
            name,
            f"{report.accuracy:.3f}",
            f"{report.macro_f1:.3f}",
            f"{report.per_class[SentimentLabel.Negative].f1:.3f}",
            f"{report.per_class[SentimentLabel.Neutral].f1:.3f}",
            f"{report.per_class[SentimentLabel.Positive].f1:.3f}",
        ])
    widths = [max(len(r[i]) for r in rows) for i in range(len(headers))]
    lines = []
    for i, row in enumerate(rows):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    lines.append("")
    lines.append(f"rows={comparison.dataset_rows} "
                 f"tie_excluded={comparison.tie_excluded} "
                 f"test_rows={comparison.test_rows}")
    flagged = [f"{name}: {flag}" for name, report in comparison.models.items()
               for flag in report.flags]
    if flagged:
        lines.append("flags:")
        lines.extend(f"  {f}" for f in flagged)
    return "\n".join(lines) + "\n"
