import pytest

from newsmood import hybrid, pipeline
from newsmood.corpus import ProcessedArticle
from newsmood.lexicons import load_bundle


def processed_from_text(text: str, article_id: int = 0) -> ProcessedArticle:
    """Build a ProcessedArticle without stopword removal, for scorer tests."""
    from newsmood.corpus import tokenize
    tokens = tuple(tokenize(text))
    return ProcessedArticle(id=article_id, raw_text=text,
                            clean_text=" ".join(tokens),
                            tokens=tokens, all_tokens=tokens)


@pytest.fixture(scope="session")
def bundle():
    return load_bundle()


@pytest.fixture(scope="session")
def scored_corpus():
    return pipeline.load_and_score()


@pytest.fixture(scope="session")
def split_and_model(scored_corpus):
    train_rows, test_rows = hybrid.stratified_split(
        scored_corpus.non_tie_rows, 0.2, seed=0)
    model = hybrid.train(train_rows, hybrid.TrainConfig(seed=0))
    return train_rows, test_rows, model
