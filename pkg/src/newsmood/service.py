"""HTTP service hosting live recommendation sessions.

Each session owns a copy of the trained Q-table; human feedback (engage +
dwell) is turned into a reward and applied as an online Q-update, so the
policy a session exposes drifts with its user. Sessions are in-memory and
mutations to one session are serialized.
"""

from __future__ import annotations

import random
import threading
import uuid
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .agent import (Action, ArticlePool, QTable, greedy_policy, q_update,
                    recommend)
from .corpus import Article
from .hybrid import SentimentDistribution
from .lexicons import LABEL_ORDER, SentimentLabel

ENGAGE_REWARD = 1.0
DWELL_REWARD_CAP = 0.5
DWELL_FULL_CREDIT_MS = 30_000


class FeedbackEvent(BaseModel):
    article_id: int
    engaged: bool
    dwell_ms: int = Field(ge=0)


def live_reward(event: FeedbackEvent) -> float:
    """1.0 for engagement plus up to 0.5 for dwell, saturating at 30 s."""
    dwell_share = min(event.dwell_ms / DWELL_FULL_CREDIT_MS, 1.0)
    return ENGAGE_REWARD * bool(event.engaged) + DWELL_REWARD_CAP * dwell_share


def one_hot_distribution(state: SentimentLabel) -> SentimentDistribution:
    """Canonical distribution representing a discrete state."""
    probs = [0.0, 0.0, 0.0]
    probs[int(state)] = 1.0
    return SentimentDistribution(*probs)


@dataclass
class Session:
    session_id: str
    qtable: QTable
    alpha: float
    gamma: float
    rng: random.Random
    current_state: SentimentLabel = SentimentLabel.Neutral
    last_recommendation: tuple[int, Action] | None = None
    cumulative_reward: float = 0.0
    history: list[tuple[int, str, float, str]] = dc_field(default_factory=list)
    lock: threading.Lock = dc_field(default_factory=threading.Lock)


class RecommenderService:
    """Owns the immutable article pool/model artifacts and mutable sessions."""

    def __init__(self, pool: ArticlePool | None,
                 articles: dict[int, Article],
                 base_qtable: QTable | None = None,
                 report: dict | None = None,
                 alpha: float = 0.1, gamma: float = 0.9, seed: int = 0):
        self.pool = pool
        self.articles = articles
        self.items_by_id = ({item.article_id: item for item in pool.items}
                            if pool else {})
        self.base_qtable = base_qtable if base_qtable is not None else QTable.zeros()
        self.report = report
        self.alpha = alpha
        self.gamma = gamma
        self.seed = seed
        self.sessions: dict[str, Session] = {}
        self._registry_lock = threading.Lock()
        self._created = 0

    def create_session(self) -> Session:
        with self._registry_lock:
            self._created += 1
            session = Session(
                session_id=uuid.uuid4().hex,
                qtable=self.base_qtable.copy(),
                alpha=self.alpha,
                gamma=self.gamma,
                rng=random.Random(self.seed + self._created),
            )
            self.sessions[session.session_id] = session
        return session

    def get_session(self, session_id: str) -> Session:
        session = self.sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404,
                                detail=f"unknown session {session_id!r}")
        return session

    def next_recommendation(self, session: Session) -> dict:
        if self.pool is None or len(self.pool) == 0:
            raise HTTPException(status_code=409, detail="article pool is empty")
        with session.lock:
            action, article_id = recommend(
                session.qtable, one_hot_distribution(session.current_state),
                self.pool, session.rng)
            session.last_recommendation = (article_id, action)
            article = self.articles[article_id]
            item = self.items_by_id[article_id]
            return {
                "article": {
                    "id": article.id,
                    "title": article.title,
                    "description": article.description,
                },
                "action": action.name,
                "state": session.current_state.name,
                "distribution": {
                    "p_negative": item.distribution.p_negative,
                    "p_neutral": item.distribution.p_neutral,
                    "p_positive": item.distribution.p_positive,
                },
            }

    def apply_feedback(self, session: Session, event: FeedbackEvent) -> dict:
        with session.lock:
            if session.last_recommendation is None:
                raise HTTPException(status_code=409,
                                    detail="no outstanding recommendation")
            article_id, action = session.last_recommendation
            if event.article_id != article_id:
                raise HTTPException(
                    status_code=409,
                    detail=f"feedback for article {event.article_id} but the "
                           f"outstanding recommendation is {article_id}")
            reward = live_reward(event)
            next_state = self.items_by_id[article_id].label
            state = session.current_state
            q_update(session.qtable, state, action, reward, next_state,
                     session.alpha, session.gamma)
            session.current_state = next_state
            session.last_recommendation = None
            session.cumulative_reward += reward
            session.history.append(
                (article_id, action.name, reward, next_state.name))
            return {
                "reward": reward,
                "q_row": [float(v) for v in session.qtable.q[int(state)]],
                "state_updated": state.name,
                "new_state": next_state.name,
            }

    def snapshot(self, session: Session) -> dict:
        with session.lock:
            policy = greedy_policy(session.qtable)
            return {
                "q": [[float(v) for v in row] for row in session.qtable.q],
                "visits": [[int(v) for v in row] for row in session.qtable.visits],
                "greedy_policy": {state.name: policy[state].name
                                  for state in LABEL_ORDER},
                "cumulative_reward": session.cumulative_reward,
                "history_length": len(session.history),
                "current_state": session.current_state.name,
            }


def create_app(service: RecommenderService,
               ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="newsmood")
    app.state.service = service

    @app.post("/api/session")
    def create_session() -> dict:
        session = service.create_session()
        return {"session_id": session.session_id}

    @app.get("/api/session/{session_id}/next")
    def next_recommendation(session_id: str) -> dict:
        return service.next_recommendation(service.get_session(session_id))

    @app.post("/api/session/{session_id}/feedback")
    def feedback(session_id: str, event: FeedbackEvent) -> dict:
        return service.apply_feedback(service.get_session(session_id), event)

    @app.get("/api/session/{session_id}/qtable")
    def qtable(session_id: str) -> dict:
        return service.snapshot(service.get_session(session_id))

    @app.get("/api/report")
    def report() -> dict:
        if service.report is None:
            raise HTTPException(status_code=404, detail="no evaluation report")
        return service.report

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
