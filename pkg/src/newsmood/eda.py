"""TF-IDF term weighting for exploratory corpus analysis.

Term weight = (term count / doc length) * (ln(n_docs / (1 + df)) + 1); the
smoothed idf keeps every weight positive so sparse heatmaps stay meaningful.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

from .corpus import ProcessedArticle


@dataclass(frozen=True)
class TfidfModel:
    vocabulary: tuple[str, ...]
    document_frequencies: dict[str, int]
    n_documents: int


def fit_tfidf(corpus: list[ProcessedArticle], max_vocab: int) -> TfidfModel:
    """Keep the max_vocab terms with the highest document frequency
    (alphabetical on ties), counted over stopword-filtered tokens."""
    if not corpus:
        raise ValueError("cannot fit TF-IDF on an empty corpus")
    if max_vocab < 1:
        raise ValueError(f"max_vocab must be >= 1, got {max_vocab}")
    df: dict[str, int] = {}
    for doc in corpus:
        for term in set(doc.tokens):
            df[term] = df.get(term, 0) + 1
    kept = sorted(df.items(), key=lambda item: (-item[1], item[0]))[:max_vocab]
    vocabulary = tuple(term for term, _ in kept)
    return TfidfModel(
        vocabulary=vocabulary,
        document_frequencies={term: df[term] for term in vocabulary},
        n_documents=len(corpus),
    )


def tfidf_weights(model: TfidfModel, doc: ProcessedArticle) -> dict[str, float]:
    """Weights for the document's vocabulary terms; absent terms are omitted."""
    if not doc.tokens:
        return {}
    counts: dict[str, int] = {}
    for token in doc.tokens:
        if token in model.document_frequencies:
            counts[token] = counts.get(token, 0) + 1
    length = len(doc.tokens)
    weights = {}
    for term, count in counts.items():
        idf = math.log(model.n_documents / (1 + model.document_frequencies[term])) + 1
        weights[term] = (count / length) * idf
    return weights


def top_terms(model: TfidfModel, doc: ProcessedArticle,
              k: int) -> list[tuple[str, float]]:
    """k highest-weight terms, descending weight, alphabetical on ties."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    weights = tfidf_weights(model, doc)
    ranked = sorted(weights.items(), key=lambda item: (-item[1], item[0]))
    return ranked[:k]


def write_matrix_csv(path: str | Path, model: TfidfModel,
                     docs: list[ProcessedArticle]) -> list[list[float]]:
    """Documents-by-vocabulary weight matrix, for external heatmap tooling."""
    matrix = []
    with Path(path).open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["doc_id", *model.vocabulary])
        for doc in docs:
            weights = tfidf_weights(model, doc)
            row = [weights.get(term, 0.0) for term in model.vocabulary]
            writer.writerow([doc.id] + [f"{w:.6f}" for w in row])
            matrix.append(row)
    return matrix
