import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newsmood.evaluation import (ClassMetrics, ComparisonReport,
                                 ConfusionMatrix, MetricsReport,
                                 compare_tools, comparison_to_dict, confusion,
                                 metrics, render_comparison)
from newsmood.hybrid import TrainConfig, train
from newsmood.lexicons import LABEL_ORDER, SentimentLabel
from test_hybrid import NEG, NEU, POS, make_row, toy_rows

labels_strategy = st.lists(st.sampled_from(list(LABEL_ORDER)),
                           min_size=1, max_size=40)


class TestConfusion:
    def test_perfect_is_diagonal(self):
        truth = [NEG, NEU, POS, POS]
        matrix = confusion(truth, truth)
        assert np.array_equal(matrix.counts, np.diag([1, 1, 2]))

    def test_single_off_diagonal_cell(self):
        matrix = confusion([POS] * 5, [NEG] * 5)
        expected = np.zeros((3, 3), dtype=int)
        expected[int(POS), int(NEG)] = 5
        assert np.array_equal(matrix.counts, expected)

    def test_hand_counted_pairs(self):
        truth = [NEG, NEG, NEU, POS, POS, POS]
        pred = [NEG, NEU, NEU, POS, NEG, POS]
        matrix = confusion(truth, pred)
        assert np.array_equal(matrix.counts,
                              np.array([[1, 1, 0], [0, 1, 0], [1, 0, 2]]))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            confusion([POS], [POS, NEG])

    def test_empty(self):
        with pytest.raises(ValueError):
            confusion([], [])


class TestMetrics:
    def test_diagonal_all_ones(self):
        report = metrics(ConfusionMatrix(np.diag([3, 4, 5])))
        assert report.accuracy == 1.0
        assert report.macro_f1 == 1.0
        for label in LABEL_ORDER:
            cm = report.per_class[label]
            assert (cm.precision, cm.recall, cm.f1) == (1.0, 1.0, 1.0)
        assert report.flags == ()

    def test_absent_class_zero_convention(self):
        counts = np.array([[4, 0, 0], [0, 0, 0], [0, 0, 3]])
        report = metrics(ConfusionMatrix(counts))
        neutral = report.per_class[NEU]
        assert (neutral.precision, neutral.recall, neutral.f1) == (0.0, 0.0, 0.0)
        assert any("Neutral" in flag for flag in report.flags)
        assert report.accuracy == 1.0

    def test_macro_f1_unweighted_mean(self):
        counts = np.array([[8, 1, 1], [2, 5, 1], [0, 1, 9]])
        report = metrics(ConfusionMatrix(counts))
        f1s = [report.per_class[label].f1 for label in LABEL_ORDER]
        assert report.macro_f1 == pytest.approx(sum(f1s) / 3)

    def test_support(self):
        counts = np.array([[8, 1, 1], [2, 5, 1], [0, 1, 9]])
        report = metrics(ConfusionMatrix(counts))
        assert report.support == {NEG: 10, NEU: 8, POS: 10}

    @given(truth=labels_strategy, seed=st.integers(0, 100))
    @settings(max_examples=40)
    def test_permutation_invariance(self, truth, seed):
        rng = np.random.default_rng(seed)
        pred = list(rng.choice(list(LABEL_ORDER), size=len(truth)))
        order = rng.permutation(len(truth))
        base = metrics(confusion(truth, pred))
        shuffled = metrics(confusion([truth[i] for i in order],
                                     [pred[i] for i in order]))
        assert base == shuffled

    @given(truth=labels_strategy, seed=st.integers(0, 100))
    @settings(max_examples=40)
    def test_count_doubling_invariance(self, truth, seed):
        rng = np.random.default_rng(seed)
        pred = list(rng.choice(list(LABEL_ORDER), size=len(truth)))
        base = metrics(confusion(truth, pred))
        doubled = metrics(confusion(truth + truth, pred + pred))
        assert base.accuracy == pytest.approx(doubled.accuracy)
        assert base.macro_f1 == pytest.approx(doubled.macro_f1)
        for label in LABEL_ORDER:
            assert base.per_class[label].f1 \
                == pytest.approx(doubled.per_class[label].f1)

    @given(truth=labels_strategy, seed=st.integers(0, 100))
    @settings(max_examples=40)
    def test_accuracy_is_support_weighted_recall(self, truth, seed):
        rng = np.random.default_rng(seed)
        pred = list(rng.choice(list(LABEL_ORDER), size=len(truth)))
        report = metrics(confusion(truth, pred))
        weighted = sum(report.per_class[label].recall * report.support[label]
                       for label in LABEL_ORDER) / len(truth)
        assert report.accuracy == pytest.approx(weighted)

    def test_empty_matrix_rejected(self):
        with pytest.raises(ValueError):
            metrics(ConfusionMatrix(np.zeros((3, 3), dtype=int)))


class TestCompareTools:
    def test_perfect_hybrid_row(self):
        rows = toy_rows()
        model = train(rows, TrainConfig(seed=0))
        comparison = compare_tools(rows, model, rows)
        assert comparison.models["hybrid"].accuracy == 1.0
        assert set(comparison.models) == {"hybrid", "vader", "textblob",
                                          "afinn", "swn"}

    def test_unanimous_tool_scores_one(self):
        rows = toy_rows()
        model = train(rows, TrainConfig(seed=0))
        comparison = compare_tools(rows, model, rows)
        # toy rows carry consensus as every tool label, so all tools are perfect
        for tool in ("vader", "textblob", "afinn", "swn"):
            assert comparison.models[tool].accuracy == 1.0

    def test_mini_corpus_ordering(self, scored_corpus, split_and_model):
        _, test_rows, model = split_and_model
        comparison = compare_tools(scored_corpus.non_tie_rows, model, test_rows)
        hybrid_f1 = comparison.models["hybrid"].macro_f1
        assert hybrid_f1 > comparison.models["textblob"].macro_f1
        assert hybrid_f1 > comparison.models["swn"].macro_f1

    def test_empty_test_set(self, split_and_model):
        _, _, model = split_and_model
        with pytest.raises(ValueError):
            compare_tools([], model, [])

    def test_tie_rows_counted(self, split_and_model):
        _, test_rows, model = split_and_model
        rows = list(test_rows) + [make_row(9999, (0.0,) * 4, None)]
        comparison = compare_tools(rows, model, test_rows)
        assert comparison.tie_excluded == 1
        assert comparison.dataset_rows == len(rows)


def reference_comparison():
    """Comparison table shaped like the published experiment summary."""
    def report(acc, mf1):
        cm = ClassMetrics(precision=mf1, recall=mf1, f1=mf1)
        return MetricsReport(per_class={label: cm for label in LABEL_ORDER},
                             accuracy=acc, macro_f1=mf1,
                             support={label: 10 for label in LABEL_ORDER})
    return ComparisonReport(
        models={
            "hybrid": report(0.896, 0.898),
            "afinn": report(0.913, 0.913),
            "vader": report(0.873, 0.874),
            "textblob": report(0.663, 0.653),
            "swn": report(0.564, 0.516),
        },
        dataset_rows=50, tie_excluded=3, test_rows=30)


def test_render_reference_shape():
    text = render_comparison(reference_comparison())
    lines = text.splitlines()
    assert lines[0].split() == ["model", "accuracy", "macro_f1",
                                "f1_neg", "f1_neu", "f1_pos"]
    for fragment in ("hybrid", "0.896", "0.898", "afinn", "0.913",
                     "vader", "0.873", "textblob", "0.663", "0.653",
                     "swn", "0.564", "0.516"):
        assert fragment in text


def test_json_schema():
    document = comparison_to_dict(reference_comparison())
    assert set(document) == {"models", "dataset"}
    assert document["dataset"] == {"rows": 50, "tie_excluded": 3, "test_rows": 30}
    names = [entry["name"] for entry in document["models"]]
    assert names == ["hybrid", "afinn", "vader", "textblob", "swn"]
    first = document["models"][0]
    assert first["accuracy"] == 0.896
    assert set(first["per_class"]) == {"Negative", "Neutral", "Positive"}
    assert set(first["per_class"]["Negative"]) == {"precision", "recall", "f1"}
    assert set(first["support"]) == {"Negative", "Neutral", "Positive"}
