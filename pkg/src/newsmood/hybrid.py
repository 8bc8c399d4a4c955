"""Weak-supervision fusion of the four scorers.

Majority voting over the per-tool labels yields a consensus target (rows
without a unique plurality are ties and excluded from training/evaluation),
and a class-weighted softmax regression on the standardized 4-score vector
turns any article into a probability triple over Negative/Neutral/Positive.
"""

from __future__ import annotations

import json
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .lexicons import (FEATURE_ORDER, LABEL_ORDER, LabelThresholds,
                       LexiconScores, SentimentLabel, tool_labels)

N_CLASSES = 3
N_FEATURES = 4
STD_FLOOR = 1e-9


@dataclass(frozen=True)
class FeatureRow:
    article_id: int
    features: tuple[float, float, float, float]
    tool_labels: tuple[SentimentLabel, SentimentLabel, SentimentLabel, SentimentLabel]
    consensus: SentimentLabel | None  # None encodes a voting tie


@dataclass(frozen=True)
class SentimentDistribution:
    """Probability triple over the three sentiment classes."""

    p_negative: float
    p_neutral: float
    p_positive: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.p_negative, self.p_neutral, self.p_positive)

    def argmax_label(self) -> SentimentLabel:
        """Largest component; exact ties prefer Neutral, then label order."""
        values = self.as_tuple()
        top = max(values)
        winners = [i for i, v in enumerate(values) if v == top]
        if len(winners) > 1 and SentimentLabel.Neutral in winners:
            return SentimentLabel.Neutral
        return SentimentLabel(winners[0])


@dataclass(frozen=True)
class StandardizationParams:
    means: np.ndarray
    stds: np.ndarray  # floored at STD_FLOOR, always strictly positive

    def apply(self, features: np.ndarray) -> np.ndarray:
        return (features - self.means) / self.stds


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.1
    max_iter: int = 200
    l2: float = 1e-4
    tolerance: float = 1e-6
    seed: int = 0


@dataclass
class SoftmaxClassifier:
    weights: np.ndarray  # (3, 4)
    biases: np.ndarray  # (3,)
    class_weights: np.ndarray  # (3,)
    standardizer: StandardizationParams
    training_meta: dict = field(default_factory=dict)


def consensus_label(labels) -> SentimentLabel | None:
    """Unique-plurality vote over exactly four tool labels; shared maxima tie."""
    labels = tuple(labels)
    if len(labels) != 4:
        raise ValueError(f"expected 4 tool labels, got {len(labels)}")
    counts = Counter(labels)
    ranked = counts.most_common()
    if len(ranked) > 1 and ranked[0][1] == ranked[1][1]:
        return None
    return ranked[0][0]


def make_feature_rows(scored: list[tuple[int, LexiconScores]],
                      thresholds: LabelThresholds | None = None) -> list[FeatureRow]:
    """Assemble per-article feature rows with tool labels and consensus."""
    rows = []
    for article_id, scores in scored:
        labels = tool_labels(scores, thresholds)
        rows.append(FeatureRow(
            article_id=article_id,
            features=scores.feature_vector(),
            tool_labels=labels,
            consensus=consensus_label(labels),
        ))
    return rows


def _round_half_away(x: float) -> int:
    return int(math.floor(x + 0.5)) if x >= 0 else -int(math.floor(-x + 0.5))


def stratified_split(rows: list[FeatureRow], test_fraction: float,
                     seed: int) -> tuple[list[FeatureRow], list[FeatureRow]]:
    """Per-class seeded shuffle; ~test_fraction of each class goes to test.

    Classes with a single row keep it in train. Tie rows are not splittable.
    """
    if not rows:
        raise ValueError("cannot split an empty row list")
    if not 0.0 < test_fraction < 1.0:
        raise ValueError(f"test_fraction must be in (0, 1), got {test_fraction}")
    if any(r.consensus is None for r in rows):
        raise ValueError("tie rows must be filtered out before splitting")

    rng = random.Random(seed)
    train: list[FeatureRow] = []
    test: list[FeatureRow] = []
    for label in LABEL_ORDER:
        members = [r for r in rows if r.consensus == label]
        if not members:
            continue
        rng.shuffle(members)
        n_test = _round_half_away(len(members) * test_fraction)
        n_test = min(n_test, len(members) - 1)
        test.extend(members[:n_test])
        train.extend(members[n_test:])
    return train, test


def _softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=-1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=-1, keepdims=True)


def loss_and_gradient(weights: np.ndarray, biases: np.ndarray, x: np.ndarray,
                      y: np.ndarray, class_weights: np.ndarray,
                      l2: float) -> tuple[float, np.ndarray, np.ndarray]:
    """Class-weighted multinomial cross-entropy with an L2 penalty on weights.

    loss = mean_i w[y_i] * (-log p_{y_i}(x_i)) + l2/2 * ||weights||^2
    Returns (loss, d_weights, d_biases); biases are unpenalized.
    """
    n = x.shape[0]
    logits = x @ weights.T + biases
    probs = _softmax(logits)
    row_w = class_weights[y]
    log_probs = logits - logits.max(axis=1, keepdims=True)
    log_probs = log_probs - np.log(np.exp(log_probs).sum(axis=1, keepdims=True))
    data_loss = float(-(row_w * log_probs[np.arange(n), y]).mean())
    loss = data_loss + 0.5 * l2 * float((weights ** 2).sum())

    delta = probs.copy()
    delta[np.arange(n), y] -= 1.0
    delta *= row_w[:, None]
    grad_w = delta.T @ x / n + l2 * weights
    grad_b = delta.mean(axis=0)
    return loss, grad_w, grad_b


def balanced_class_weights(y: np.ndarray) -> np.ndarray:
    """w[c] = N / (K * N_c) over the training labels; absent classes get 1.0."""
    weights = np.ones(N_CLASSES)
    n = len(y)
    for c in range(N_CLASSES):
        n_c = int((y == c).sum())
        if n_c > 0:
            weights[c] = n / (N_CLASSES * n_c)
    return weights


def train(rows: list[FeatureRow], config: TrainConfig | None = None) -> SoftmaxClassifier:
    """Full-batch gradient descent from zero init, halving the step on a loss
    increase, stopping at max_iter or when the improvement drops below
    tolerance."""
    config = config or TrainConfig()
    if any(r.consensus is None for r in rows):
        raise ValueError("tie rows must be excluded from training")
    x = np.array([r.features for r in rows], dtype=float)
    y = np.array([int(r.consensus) for r in rows], dtype=int)
    if x.size == 0:
        raise ValueError("no training rows")
    if not np.isfinite(x).all():
        raise ValueError("non-finite feature values in training data")
    if len(np.unique(y)) < 2:
        raise ValueError("training data contains a single class")

    means = x.mean(axis=0)
    stds = np.maximum(x.std(axis=0), STD_FLOOR)
    standardizer = StandardizationParams(means=means, stds=stds)
    xs = standardizer.apply(x)

    class_weights = balanced_class_weights(y)
    weights = np.zeros((N_CLASSES, N_FEATURES))
    biases = np.zeros(N_CLASSES)
    lr = config.learning_rate

    loss, grad_w, grad_b = loss_and_gradient(weights, biases, xs, y,
                                             class_weights, config.l2)
    iterations = 0
    for it in range(1, config.max_iter + 1):
        stalled = False
        while True:
            cand_w = weights - lr * grad_w
            cand_b = biases - lr * grad_b
            new_loss, new_gw, new_gb = loss_and_gradient(
                cand_w, cand_b, xs, y, class_weights, config.l2)
            if new_loss <= loss:
                break
            lr /= 2.0
            if lr < 1e-12:
                stalled = True
                break
        if stalled:
            break
        iterations = it
        improvement = loss - new_loss
        weights, biases = cand_w, cand_b
        loss, grad_w, grad_b = new_loss, new_gw, new_gb
        if improvement < config.tolerance:
            break

    return SoftmaxClassifier(
        weights=weights,
        biases=biases,
        class_weights=class_weights,
        standardizer=standardizer,
        training_meta={"iterations": iterations, "final_loss": loss,
                       "seed": config.seed},
    )


def predict_proba(model: SoftmaxClassifier, features) -> SentimentDistribution:
    """Softmax of the standardized-feature logits (overflow-safe)."""
    x = np.asarray(features, dtype=float)
    if x.shape != (N_FEATURES,):
        raise ValueError(f"expected {N_FEATURES} features, got shape {x.shape}")
    if not np.isfinite(x).all():
        raise ValueError("non-finite feature values")
    logits = model.weights @ model.standardizer.apply(x) + model.biases
    probs = _softmax(logits)
    return SentimentDistribution(*map(float, probs))


def predict(model: SoftmaxClassifier, features) -> SentimentLabel:
    return predict_proba(model, features).argmax_label()


def save_model(model: SoftmaxClassifier, path: str | Path) -> None:
    document = {
        "weights": model.weights.tolist(),
        "biases": model.biases.tolist(),
        "means": model.standardizer.means.tolist(),
        "stds": model.standardizer.stds.tolist(),
        "class_weights": model.class_weights.tolist(),
        "label_order": [label.name for label in LABEL_ORDER],
        "feature_order": list(FEATURE_ORDER),
        "training_meta": model.training_meta,
    }
    Path(path).write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> SoftmaxClassifier:
    document = json.loads(Path(path).read_text(encoding="utf-8"))
    if document.get("feature_order") != list(FEATURE_ORDER):
        raise ValueError(f"unexpected feature order: {document.get('feature_order')}")
    if document.get("label_order") != [label.name for label in LABEL_ORDER]:
        raise ValueError(f"unexpected label order: {document.get('label_order')}")
    return SoftmaxClassifier(
        weights=np.array(document["weights"], dtype=float),
        biases=np.array(document["biases"], dtype=float),
        class_weights=np.array(document["class_weights"], dtype=float),
        standardizer=StandardizationParams(
            means=np.array(document["means"], dtype=float),
            stds=np.array(document["stds"], dtype=float)),
        training_meta=document.get("training_meta", {}),
    )
