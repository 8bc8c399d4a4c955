"""End-to-end orchestration shared by the CLI and the HTTP service."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import agent, corpus, hybrid
from ._data import data_dir
from .lexicons import (LabelThresholds, LexiconBundle, LexiconScores,
                       load_bundle, score_all)

BUNDLED_CORPUS = "mini_corpus.csv"


@dataclass
class ScoredCorpus:
    articles: list[corpus.Article]
    processed: list[corpus.ProcessedArticle]
    scores: list[LexiconScores]
    rows: list[hybrid.FeatureRow]
    skipped: int

    def article(self, article_id: int) -> corpus.Article:
        return self.articles[article_id]

    @property
    def non_tie_rows(self) -> list[hybrid.FeatureRow]:
        return [r for r in self.rows if r.consensus is not None]


def bundled_corpus_path() -> Path:
    return data_dir() / BUNDLED_CORPUS


def load_and_score(path: str | Path | None = None,
                   thresholds: LabelThresholds | None = None,
                   bundle: LexiconBundle | None = None) -> ScoredCorpus:
    """Load a corpus CSV, preprocess, run all scorers, and vote consensus."""
    path = Path(path) if path is not None else bundled_corpus_path()
    bundle = bundle or load_bundle()
    articles, skipped = corpus.load_corpus(path)
    stopwords = corpus.load_stopwords()
    processed = corpus.preprocess_corpus(articles, stopwords)
    scores = [score_all(p, bundle) for p in processed]
    rows = hybrid.make_feature_rows(
        [(a.id, s) for a, s in zip(articles, scores)], thresholds)
    return ScoredCorpus(articles=articles, processed=processed, scores=scores,
                        rows=rows, skipped=skipped)


def build_pool(scored: ScoredCorpus,
               model: hybrid.SoftmaxClassifier) -> agent.ArticlePool:
    """Recommendation pool over every article (ties included), labelled by the
    fused model's prediction so each pool item carries a state."""
    items = []
    for row in scored.rows:
        dist = hybrid.predict_proba(model, row.features)
        items.append(agent.PoolItem(article_id=row.article_id,
                                    label=dist.argmax_label(),
                                    distribution=dist))
    return agent.ArticlePool(items)
