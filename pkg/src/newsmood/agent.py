"""Tabular Q-learning recommender over 3 sentiment states x 3 recommend actions.

The discrete state is the argmax of an article-level sentiment distribution.
Training runs against a simulated reader whose engagement reward carries an
explicit positivity bonus and a mood-congruence bonus; value_iteration solves
the same MDP exactly and serves as the convergence oracle.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import asdict, dataclass
from enum import IntEnum
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .hybrid import SentimentDistribution
from .lexicons import LABEL_ORDER, SentimentLabel

# States are sentiment labels; the alias marks where a label acts as RL state.
SentimentState = SentimentLabel


class Action(IntEnum):
    RecommendNegative = 0
    RecommendNeutral = 1
    RecommendPositive = 2

    @property
    def target(self) -> SentimentLabel:
        return SentimentLabel(int(self))


ACTION_ORDER = (Action.RecommendNegative, Action.RecommendNeutral,
                Action.RecommendPositive)


@dataclass
class QTable:
    q: np.ndarray  # (3, 3) float, rows=states, cols=actions
    visits: np.ndarray  # (3, 3) int

    @classmethod
    def zeros(cls) -> "QTable":
        return cls(q=np.zeros((3, 3)), visits=np.zeros((3, 3), dtype=int))

    def copy(self) -> "QTable":
        return QTable(q=self.q.copy(), visits=self.visits.copy())


@dataclass(frozen=True)
class AgentConfig:
    alpha: float = 0.1
    gamma: float = 0.9
    epsilon_start: float = 1.0
    epsilon_end: float = 0.05
    epsilon_decay_steps: int | None = None  # defaults to steps // 2
    steps: int = 200_000
    seed: int = 0
    alpha_decay_tau: int | None = 1000

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")
        if not 0.0 <= self.gamma < 1.0:
            raise ValueError(f"gamma must be in [0, 1), got {self.gamma}")
        for name in ("epsilon_start", "epsilon_end"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")
        if self.epsilon_end > self.epsilon_start:
            raise ValueError("epsilon_end must not exceed epsilon_start")


@dataclass(frozen=True)
class RewardModel:
    """base engagement + bonus for positive content + bonus for mood match."""

    base: float = 1.0
    positivity_bonus: float = 0.5
    congruence_bonus: float = 0.3

    def reward(self, delivered: SentimentLabel, state: SentimentState) -> float:
        value = self.base
        if delivered == SentimentLabel.Positive:
            value += self.positivity_bonus
        if delivered == state:
            value += self.congruence_bonus
        return value


class PoolItem(NamedTuple):
    article_id: int
    label: SentimentLabel
    distribution: SentimentDistribution


class ArticlePool:
    """Recommendation candidates pre-indexed by their sentiment label."""

    def __init__(self, items: list[PoolItem]):
        if not items:
            raise ValueError("article pool is empty")
        self.items = list(items)
        self.by_label = {label: [it for it in self.items if it.label == label]
                         for label in LABEL_ORDER}

    def __len__(self) -> int:
        return len(self.items)


class StepResult(NamedTuple):
    reward: float
    next_state: SentimentState
    article_id: int
    fallback: bool


@dataclass
class TrainingLog:
    steps: int = 0
    total_reward: float = 0.0
    fallback_deliveries: int = 0
    final_epsilon: float = 0.0

    @property
    def mean_reward(self) -> float:
        return self.total_reward / self.steps if self.steps else 0.0


def state_of(dist: SentimentDistribution) -> SentimentState:
    """Discretize a distribution to its argmax component (ties -> Neutral)."""
    return dist.argmax_label()


def select_action(qtable: QTable, state: SentimentState, epsilon: float,
                  rng: random.Random) -> Action:
    """Epsilon-greedy over the state's Q-row, lowest index on exact ties."""
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must be in [0, 1], got {epsilon}")
    if epsilon > 0.0 and rng.random() < epsilon:
        return Action(rng.randrange(3))
    return Action(int(np.argmax(qtable.q[int(state)])))


def simulate_step(state: SentimentState, action: Action,
                  reward_model: RewardModel, pool: ArticlePool,
                  rng: random.Random) -> StepResult:
    """Deliver a random article of the action's target class and score it.

    When the pool has no article of that class, any article is delivered and
    the step is flagged as a fallback.
    """
    candidates = pool.by_label[action.target]
    fallback = not candidates
    chosen = rng.choice(candidates if candidates else pool.items)
    reward = reward_model.reward(chosen.label, state)
    return StepResult(reward=reward, next_state=chosen.label,
                      article_id=chosen.article_id, fallback=fallback)


def q_update(qtable: QTable, state: SentimentState, action: Action,
             reward: float, next_state: SentimentState, alpha: float,
             gamma: float) -> QTable:
    """One temporal-difference update; touches exactly the (state, action) cell.

    alpha = 0 is tolerated as an explicit no-op on the value (the visit is
    still recorded)."""
    if not math.isfinite(reward):
        raise ValueError(f"non-finite reward: {reward}")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    if not 0.0 <= gamma < 1.0:
        raise ValueError(f"gamma must be in [0, 1), got {gamma}")
    s, a = int(state), int(action)
    current = qtable.q[s, a]
    target = reward + gamma * qtable.q[int(next_state)].max()
    qtable.q[s, a] = current + alpha * (target - current)
    qtable.visits[s, a] += 1
    return qtable


def epsilon_at(step: int, config: AgentConfig) -> float:
    """Linear decay from epsilon_start to epsilon_end, then flat."""
    decay = config.epsilon_decay_steps
    if decay is None:
        decay = max(1, config.steps // 2)
    if decay <= 0:
        return config.epsilon_end
    frac = min(1.0, step / decay)
    return config.epsilon_start + (config.epsilon_end - config.epsilon_start) * frac


def train_agent(pool: ArticlePool, config: AgentConfig | None = None,
                reward_model: RewardModel | None = None) -> tuple[QTable, TrainingLog]:
    """Run the select -> simulate -> update loop for config.steps interactions.

    Per-cell step sizes shrink as alpha / (1 + visits/tau) when a decay tau is
    configured. Fully deterministic for a given seed.
    """
    config = config or AgentConfig()
    reward_model = reward_model or RewardModel()
    rng = random.Random(config.seed)
    qtable = QTable.zeros()
    log = TrainingLog()
    state = SentimentLabel.Neutral
    tau = config.alpha_decay_tau

    for step in range(config.steps):
        epsilon = epsilon_at(step, config)
        action = select_action(qtable, state, epsilon, rng)
        result = simulate_step(state, action, reward_model, pool, rng)
        alpha = config.alpha
        if tau is not None:
            alpha = alpha / (1.0 + qtable.visits[int(state), int(action)] / tau)
        q_update(qtable, state, action, result.reward, result.next_state,
                 alpha, config.gamma)
        state = result.next_state
        log.steps += 1
        log.total_reward += result.reward
        log.fallback_deliveries += result.fallback
        log.final_epsilon = epsilon
    return qtable, log


def greedy_policy(qtable: QTable) -> dict[SentimentState, Action]:
    """Per-state argmax action, lowest index on exact ties."""
    return {state: Action(int(np.argmax(qtable.q[int(state)])))
            for state in LABEL_ORDER}


def value_iteration(reward_model: RewardModel, gamma: float,
                    tolerance: float = 1e-10) -> np.ndarray:
    """Exact optimal Q for the delivery MDP: action a always hands over an
    article of its target class, so the next state is deterministic."""
    if not 0.0 <= gamma < 1.0:
        raise ValueError(f"gamma must be in [0, 1), got {gamma}")
    if tolerance <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    rewards = np.array([[reward_model.reward(a.target, s)
                         for a in ACTION_ORDER] for s in LABEL_ORDER])
    q = np.zeros((3, 3))
    while True:
        values = q.max(axis=1)  # V(s') indexed by the delivered label
        updated = rewards + gamma * values[np.newaxis, :]
        if np.abs(updated - q).max() < tolerance:
            return updated
        q = updated


def recommend(qtable: QTable, dist: SentimentDistribution, pool: ArticlePool,
              rng: random.Random | None = None) -> tuple[Action, int]:
    """Greedy action for the distribution's state plus a matching article.

    With an rng, the article is sampled uniformly among pool members of the
    action's target class; without one, the member with the highest
    target-class probability wins (ties to the lowest id). When no member
    matches, the highest target-class-probability article overall is used.
    """
    state = state_of(dist)
    action = greedy_policy(qtable)[state]
    target = action.target
    candidates = pool.by_label[target]
    if candidates and rng is not None:
        chosen = rng.choice(candidates)
    else:
        field_name = ("p_negative", "p_neutral", "p_positive")[int(target)]
        members = candidates if candidates else pool.items
        chosen = min(members,
                     key=lambda it: (-getattr(it.distribution, field_name),
                                     it.article_id))
    return action, chosen.article_id


def save_qtable(qtable: QTable, path: str | Path,
                config: AgentConfig | None = None,
                reward_model: RewardModel | None = None,
                steps_trained: int = 0) -> None:
    document = {
        "states": [label.name for label in LABEL_ORDER],
        "actions": [action.name for action in ACTION_ORDER],
        "q": qtable.q.tolist(),
        "visits": qtable.visits.tolist(),
        "config": asdict(config) if config else None,
        "reward_model": asdict(reward_model) if reward_model else None,
        "steps_trained": steps_trained,
    }
    Path(path).write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")


def load_qtable(path: str | Path) -> tuple[QTable, dict]:
    document = json.loads(Path(path).read_text(encoding="utf-8"))
    expected_states = [label.name for label in LABEL_ORDER]
    if document.get("states") != expected_states:
        raise ValueError(f"unexpected state order: {document.get('states')}")
    qtable = QTable(q=np.array(document["q"], dtype=float),
                    visits=np.array(document.get("visits",
                                                 np.zeros((3, 3)).tolist()),
                                    dtype=int))
    if qtable.q.shape != (3, 3):
        raise ValueError(f"expected a 3x3 table, got {qtable.q.shape}")
    return qtable, document
