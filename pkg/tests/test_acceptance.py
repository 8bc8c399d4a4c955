"""Acceptance suite: one test per release criterion, at the stated tolerance.

Run with `pytest -v tests/test_acceptance.py` for one pass/fail line per
criterion; each test also prints a `[acceptance] ... PASS` summary.
"""

import json
import random
import time

import numpy as np
import pytest

from newsmood import agent, evaluation, hybrid, pipeline
from newsmood.agent import (Action, AgentConfig, ArticlePool, PoolItem,
                            QTable, RewardModel, greedy_policy, q_update,
                            recommend, train_agent, value_iteration)
from newsmood.cli import main
from newsmood.hybrid import SentimentDistribution
from newsmood.lexicons import LABEL_ORDER, SentimentLabel
from test_hybrid import make_row

NEG, NEU, POS = (SentimentLabel.Negative, SentimentLabel.Neutral,
                 SentimentLabel.Positive)

# Q-table from a reference training run, and the recommendations its greedy
# policy produced for ten articles (probability triple -> selected action).
REFERENCE_Q = np.array([
    [8.748895, 8.730850, 8.741671],
    [8.603612, 8.634936, 8.635025],
    [12.509972, 12.495487, 12.532446],
])
REFERENCE_RECOMMENDATIONS = [
    ((0.0031, 0.9029, 0.0940), Action.RecommendPositive),
    ((0.0002, 0.2659, 0.7339), Action.RecommendPositive),
    ((0.9992, 0.0008, 0.0000), Action.RecommendNegative),
    ((0.0072, 0.9353, 0.0575), Action.RecommendPositive),
    ((0.0000, 0.0000, 0.9999968), Action.RecommendPositive),
    ((0.0000, 0.0000, 0.9999972), Action.RecommendPositive),
    ((0.0000, 0.0000, 0.9999941), Action.RecommendPositive),
    ((0.00003, 0.2244, 0.7756), Action.RecommendPositive),
    ((0.0000, 0.0003, 0.9997411), Action.RecommendPositive),
    ((0.6795, 0.3204, 0.0001), Action.RecommendNegative),
]
ORACLE_Q = np.array([
    [17.23, 16.93, 17.70],
    [16.93, 17.23, 17.70],
    [16.93, 16.93, 18.00],
])


def three_label_pool():
    return ArticlePool([
        PoolItem(0, NEG, SentimentDistribution(0.9, 0.05, 0.05)),
        PoolItem(1, NEU, SentimentDistribution(0.1, 0.8, 0.1)),
        PoolItem(2, POS, SentimentDistribution(0.05, 0.05, 0.9)),
    ])


def test_mini_corpus_hybrid_beats_weak_baselines():
    started = time.perf_counter()
    scored = pipeline.load_and_score()
    rows = scored.non_tie_rows
    assert len(rows) >= 500

    train_rows, test_rows = hybrid.stratified_split(rows, 0.2, seed=0)
    model = hybrid.train(train_rows, hybrid.TrainConfig(seed=0))
    comparison = evaluation.compare_tools(rows, model, test_rows)
    elapsed = time.perf_counter() - started

    hybrid_report = comparison.models["hybrid"]
    assert hybrid_report.macro_f1 > comparison.models["textblob"].macro_f1
    assert hybrid_report.macro_f1 > comparison.models["swn"].macro_f1
    assert hybrid_report.accuracy >= 0.80
    assert elapsed < 10.0
    print(f"\n[acceptance] hybrid-vs-baselines: PASS "
          f"(rows={len(rows)}, acc={hybrid_report.accuracy:.3f}, "
          f"macroF1={hybrid_report.macro_f1:.3f} vs "
          f"textblob={comparison.models['textblob'].macro_f1:.3f}, "
          f"swn={comparison.models['swn'].macro_f1:.3f}, {elapsed:.2f}s)")


def test_gradient_matches_finite_differences():
    from test_hybrid import TestGradient
    started = time.perf_counter()
    worst = 0.0
    for seed in range(10):
        rng = np.random.default_rng(1000 + seed)
        x = rng.normal(size=(9, 4))
        y = rng.integers(0, 3, size=9)
        if len(np.unique(y)) < 2:
            y[0], y[1] = 0, 2
        weights = rng.normal(scale=1.2, size=(3, 4))
        biases = rng.normal(scale=0.7, size=3)
        cw = hybrid.balanced_class_weights(y)
        _, grad_w, grad_b = hybrid.loss_and_gradient(weights, biases, x, y,
                                                     cw, 1e-4)
        num_w, num_b = TestGradient.numerical(weights, biases, x, y, cw, 1e-4)
        analytic = np.concatenate([grad_w.ravel(), grad_b])
        numeric = np.concatenate([num_w.ravel(), num_b])
        rel = np.linalg.norm(analytic - numeric) / max(
            np.linalg.norm(analytic), np.linalg.norm(numeric))
        worst = max(worst, rel)
        assert rel < 1e-5
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    print(f"\n[acceptance] gradient-check: PASS "
          f"(worst rel err {worst:.2e}, {elapsed:.2f}s)")


def test_rl_matches_value_iteration_oracle():
    started = time.perf_counter()
    q_star = value_iteration(RewardModel(), gamma=0.9)
    assert np.allclose(q_star, ORACLE_Q, atol=1e-8)

    config = AgentConfig(alpha=0.1, gamma=0.9, steps=200_000, seed=0,
                         alpha_decay_tau=1000)
    table, _ = train_agent(three_label_pool(), config, RewardModel())
    gap = np.abs(table.q - q_star).max()
    assert gap <= 0.5
    policy = greedy_policy(table)
    assert all(action is Action.RecommendPositive for action in policy.values())
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0

    rng = random.Random(42)
    gammas = [0.0, 0.5, 0.9, 0.0, 0.5]
    worst = gap
    for trial in range(5):
        profile = RewardModel(positivity_bonus=rng.uniform(0, 1),
                              congruence_bonus=rng.uniform(0, 1))
        gamma = gammas[trial]
        target = value_iteration(profile, gamma)
        trained, _ = train_agent(
            three_label_pool(),
            AgentConfig(gamma=gamma, steps=200_000, seed=trial,
                        alpha_decay_tau=1000),
            profile)
        trial_gap = np.abs(trained.q - target).max()
        worst = max(worst, trial_gap)
        assert trial_gap <= 0.5
    print(f"\n[acceptance] rl-oracle-equivalence: PASS "
          f"(default gap {gap:.4f}, worst profile gap {worst:.4f}, "
          f"main run {elapsed:.2f}s)")


def test_reference_qtable_policy_and_recommendations():
    table = QTable(q=REFERENCE_Q.copy(), visits=np.zeros((3, 3), dtype=int))
    policy = greedy_policy(table)
    assert policy[NEG] is Action.RecommendNegative
    assert policy[NEU] is Action.RecommendPositive
    assert policy[POS] is Action.RecommendPositive

    pool = three_label_pool()
    for triple, expected in REFERENCE_RECOMMENDATIONS:
        action, _ = recommend(table, SentimentDistribution(*triple), pool)
        assert action is expected
    print("\n[acceptance] reference-qtable-consistency: PASS "
          f"({len(REFERENCE_RECOMMENDATIONS)} recommendations exact)")


def test_q_update_identities():
    table = QTable.zeros()
    q_update(table, NEU, Action.RecommendPositive, 1.0, POS, 0.1, 0.9)
    assert table.q[int(NEU), int(Action.RecommendPositive)] == 0.1

    rng = np.random.default_rng(5)
    table = QTable(q=rng.normal(size=(3, 3)), visits=np.zeros((3, 3), int))
    before = table.q.copy()
    q_update(table, NEG, Action.RecommendNeutral, 3.7, POS, 0.0, 0.9)
    assert np.array_equal(table.q, before)

    table = QTable(q=rng.normal(size=(3, 3)), visits=np.zeros((3, 3), int))
    q_update(table, POS, Action.RecommendNegative, 2.25, NEG, 1.0, 0.0)
    assert table.q[int(POS), int(Action.RecommendNegative)] == 2.25
    print("\n[acceptance] q-update-identities: PASS (exact)")


def test_cli_pipeline_byte_determinism(tmp_path):
    outputs = []
    for run in ("a", "b"):
        workdir = tmp_path / run
        workdir.mkdir()
        model = workdir / "model.json"
        report = workdir / "report.json"
        qtable = workdir / "qtable.json"
        assert main(["train-hybrid", "--model", str(model), "--seed", "0"]) == 0
        assert main(["eval", "--model", str(model), "--out", str(report),
                     "--seed", "0", "--no-figures"]) == 0
        assert main(["train-rl", "--model", str(model), "--qtable",
                     str(qtable), "--steps", "20000", "--seed", "0",
                     "--no-figures"]) == 0
        outputs.append((model.read_bytes(), report.read_bytes(),
                        qtable.read_bytes()))
    assert outputs[0][0] == outputs[1][0]
    assert outputs[0][1] == outputs[1][1]
    assert outputs[0][2] == outputs[1][2]
    report_doc = json.loads(outputs[0][1])
    assert report_doc["models"][0]["name"] == "hybrid"
    print("\n[acceptance] pipeline-byte-determinism: PASS "
          "(model, report, qtable byte-identical)")


def test_metrics_identities():
    diagonal = evaluation.metrics(
        evaluation.ConfusionMatrix(np.diag([7, 3, 11])))
    assert diagonal.accuracy == 1.0
    assert diagonal.macro_f1 == 1.0
    assert all(diagonal.per_class[label].precision == 1.0
               and diagonal.per_class[label].recall == 1.0
               and diagonal.per_class[label].f1 == 1.0
               for label in LABEL_ORDER)

    rng = np.random.default_rng(12)
    truth = [SentimentLabel(int(v)) for v in rng.integers(0, 3, size=60)]
    pred = [SentimentLabel(int(v)) for v in rng.integers(0, 3, size=60)]
    base = evaluation.metrics(evaluation.confusion(truth, pred))
    order = rng.permutation(60)
    permuted = evaluation.metrics(evaluation.confusion(
        [truth[i] for i in order], [pred[i] for i in order]))
    assert base == permuted

    doubled = evaluation.metrics(evaluation.confusion(truth + truth,
                                                      pred + pred))
    assert base.accuracy == doubled.accuracy
    assert base.macro_f1 == doubled.macro_f1
    assert all(base.per_class[label] == doubled.per_class[label]
               for label in LABEL_ORDER)
    print("\n[acceptance] metrics-identities: PASS (exact)")


def test_split_stratification_counts():
    def round_half_away(x):
        return int(np.floor(x + 0.5))

    rng = random.Random(99)
    checked = 0
    for trial in range(100):
        sizes = [rng.randint(0, 200) for _ in range(3)]
        if sum(sizes) == 0:
            sizes[rng.randrange(3)] = 1
        rows = []
        i = 0
        for label, count in zip(LABEL_ORDER, sizes):
            for _ in range(count):
                rows.append(make_row(i, (float(i % 7), 0.0, 0.0, 0.0), label))
                i += 1
        train_rows, test_rows = hybrid.stratified_split(rows, 0.2, seed=trial)
        for label, count in zip(LABEL_ORDER, sizes):
            got = sum(1 for r in test_rows if r.consensus == label)
            expected = min(round_half_away(count * 0.2), max(0, count - 1))
            assert got == expected, (sizes, label, got, expected)
            checked += 1
        assert len(train_rows) + len(test_rows) == sum(sizes)
    print(f"\n[acceptance] split-stratification: PASS "
          f"({checked} class counts over 100 vectors)")
