"""Four dictionary-based sentiment scorers over one bundled word-list set.

Each scorer produces one component of the per-article score vector
(vader_compound, textblob_polarity, afinn_norm, swn_score) plus a rule-based
categorical label. All scorers read the pre-stopword token sequence, so the
stopword list never influences a sentiment score.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache

from ._data import DataIntegrityError, parse_table, read_data_file
from .corpus import ProcessedArticle, light_stem

# Intensity heuristics: negation flip, booster increment with distance decay,
# ALL-CAPS emphasis, trailing-exclamation emphasis, and the normalization
# constant mapping a valence sum onto [-1, 1].
NEGATION_SCALAR = -0.74
CAPS_INCREMENT = 0.733
EXCLAIM_INCREMENT = 0.292
MAX_EXCLAIM = 3
BOOSTER_DISTANCE_SCALE = (1.0, 0.95, 0.90)
NORMALIZATION_ALPHA = 15.0

TEXTBLOB_NEGATION_FACTOR = -0.5
NEGATION_WINDOW = 3


class SentimentLabel(IntEnum):
    """Three-class sentiment; the integer order is the fixed label order."""

    Negative = 0
    Neutral = 1
    Positive = 2

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.name


LABEL_ORDER = (SentimentLabel.Negative, SentimentLabel.Neutral,
               SentimentLabel.Positive)

# Feature/tool order is part of the model file format; do not reorder.
TOOL_ORDER = ("vader", "textblob", "afinn", "swn")
FEATURE_ORDER = ("vader_compound", "textblob_polarity", "afinn_norm", "swn_score")


class ThresholdError(ValueError):
    """Raised when a labelling threshold pair is inverted."""


@dataclass(frozen=True)
class LexiconBundle:
    afinn: dict[str, int]
    vader_valences: dict[str, float]
    vader_boosters: dict[str, float]
    vader_negators: frozenset[str]
    polarity: dict[str, float]
    swn: dict[str, tuple[float, float]]


@dataclass(frozen=True)
class LexiconScores:
    vader_compound: float
    afinn_raw: int
    afinn_norm: float
    textblob_polarity: float
    swn_score: float

    def feature_vector(self) -> tuple[float, float, float, float]:
        return (self.vader_compound, self.textblob_polarity,
                self.afinn_norm, self.swn_score)


@dataclass(frozen=True)
class LabelThresholds:
    """Symmetric label cutoffs per tool; AFINN labels from the raw sign."""

    vader: float = 0.05
    textblob: float = 0.05
    swn: float = 0.01


def _check_range(name: str, word: str, value: float, lo: float, hi: float) -> None:
    if not (lo <= value <= hi):
        raise DataIntegrityError(
            f"{name}: valence {value} for {word!r} outside [{lo}, {hi}]")


@lru_cache(maxsize=1)
def load_bundle() -> LexiconBundle:
    """Load and validate the bundled word lists (cached; immutable)."""
    afinn = {}
    for word, value in parse_table(read_data_file("afinn.txt"), 2):
        afinn[word] = int(value)
        _check_range("afinn", word, afinn[word], -5, 5)
    valences = {}
    for word, value in parse_table(read_data_file("vader_valences.txt"), 2):
        valences[word] = float(value)
        _check_range("vader_valences", word, valences[word], -4, 4)
    boosters = {w: float(v) for w, v
                in parse_table(read_data_file("vader_boosters.txt"), 2)}
    negators = frozenset(w for (w,) in parse_table(read_data_file("negators.txt"), 1))
    polarity = {}
    for word, value in parse_table(read_data_file("polarity.txt"), 2):
        polarity[word] = float(value)
        _check_range("polarity", word, polarity[word], -1, 1)
    swn = {}
    for word, pos, neg in parse_table(read_data_file("swn.txt"), 3):
        swn[word] = (float(pos), float(neg))
        _check_range("swn(pos)", word, swn[word][0], 0, 1)
        _check_range("swn(neg)", word, swn[word][1], 0, 1)
    for name, table in (("afinn", afinn), ("vader_valences", valences),
                        ("polarity", polarity), ("swn", swn)):
        if not table:
            raise DataIntegrityError(f"{name} lexicon is empty")
    return LexiconBundle(afinn=afinn, vader_valences=valences,
                         vader_boosters=boosters, vader_negators=negators,
                         polarity=polarity, swn=swn)


def _lookup(table: dict, token: str):
    """Exact lookup, then a single suffix-stripped retry."""
    value = table.get(token)
    if value is not None:
        return value
    stem = light_stem(token)
    if stem != token:
        return table.get(stem)
    return None


def _clamp(value: float) -> float:
    return max(-1.0, min(1.0, value))


def score_afinn(processed: ProcessedArticle,
                bundle: LexiconBundle | None = None) -> tuple[int, float]:
    """Integer valence sum and its length-normalized form."""
    bundle = bundle or load_bundle()
    raw = 0
    for token in processed.all_tokens:
        value = _lookup(bundle.afinn, token)
        if value is not None:
            raw += value
    return raw, raw / max(1, len(processed.all_tokens))


def _case_tokens(text: str) -> list[str]:
    """Whitespace-split words with surrounding punctuation stripped, case kept."""
    words = []
    for piece in text.replace("’", "'").split():
        stripped = piece.strip(string.punctuation)
        if stripped:
            words.append(stripped)
    return words


def _some_words_allcaps(words: list[str]) -> bool:
    upper = sum(1 for w in words if w.isupper())
    return 0 < upper < len(words)


def score_vader(processed: ProcessedArticle,
                bundle: LexiconBundle | None = None) -> float:
    """Intensity-aware compound score on the raw (case-preserved) text.

    Per valenced word: an ALL-CAPS emphasis bump when the rest of the text is
    not ALL-CAPS, booster increments from up to three preceding modifier words
    with distance decay, and a sign flip for negation cues in the same window.
    Up to three trailing '!' amplify the total, which is then mapped through
    s / sqrt(s^2 + alpha) onto [-1, 1].
    """
    bundle = bundle or load_bundle()
    words = _case_tokens(processed.raw_text)
    if not words:
        return 0.0
    cap_diff = _some_words_allcaps(words)
    lowered = [w.lower() for w in words]

    total = 0.0
    for i, word in enumerate(words):
        token = lowered[i]
        if token in bundle.vader_boosters:
            continue
        valence = bundle.vader_valences.get(token)
        if valence is None:
            continue
        if cap_diff and word.isupper():
            valence += CAPS_INCREMENT if valence > 0 else -CAPS_INCREMENT
        for distance in range(1, NEGATION_WINDOW + 1):
            j = i - distance
            if j < 0:
                break
            prev = lowered[j]
            if prev in bundle.vader_valences:
                continue
            if prev in bundle.vader_boosters:
                boost = bundle.vader_boosters[prev]
                boost = boost if valence > 0 else -boost
                valence += boost * BOOSTER_DISTANCE_SCALE[distance - 1]
            if prev in bundle.vader_negators:
                valence *= NEGATION_SCALAR
        total += valence

    if total != 0.0:
        text = processed.raw_text.rstrip()
        exclaims = min(len(text) - len(text.rstrip("!")), MAX_EXCLAIM)
        emphasis = exclaims * EXCLAIM_INCREMENT
        total += emphasis if total > 0 else -emphasis
    return _clamp(total / math.sqrt(total * total + NORMALIZATION_ALPHA))


def score_textblob(processed: ProcessedArticle,
                   bundle: LexiconBundle | None = None) -> float:
    """Mean dictionary polarity with a -0.5 factor after a nearby negation cue."""
    bundle = bundle or load_bundle()
    tokens = processed.all_tokens
    matched = []
    for i, token in enumerate(tokens):
        value = _lookup(bundle.polarity, token)
        if value is None:
            continue
        window = tokens[max(0, i - NEGATION_WINDOW):i]
        if any(t in bundle.vader_negators for t in window):
            value *= TEXTBLOB_NEGATION_FACTOR
        matched.append(value)
    if not matched:
        return 0.0
    return _clamp(sum(matched) / len(matched))


def score_swn(processed: ProcessedArticle,
              bundle: LexiconBundle | None = None) -> float:
    """Mean (pos - neg) over tokens found in the sense-averaged table."""
    bundle = bundle or load_bundle()
    matched = []
    for token in processed.all_tokens:
        entry = _lookup(bundle.swn, token)
        if entry is not None:
            matched.append(entry[0] - entry[1])
    if not matched:
        return 0.0
    return _clamp(sum(matched) / len(matched))


def score_all(processed: ProcessedArticle,
              bundle: LexiconBundle | None = None) -> LexiconScores:
    """Run all four scorers; deterministic for a given bundle."""
    bundle = bundle or load_bundle()
    afinn_raw, afinn_norm = score_afinn(processed, bundle)
    return LexiconScores(
        vader_compound=score_vader(processed, bundle),
        afinn_raw=afinn_raw,
        afinn_norm=afinn_norm,
        textblob_polarity=score_textblob(processed, bundle),
        swn_score=score_swn(processed, bundle),
    )


def categorize(score: float, negative_threshold: float,
               positive_threshold: float) -> SentimentLabel:
    """Three-way cut: >= positive_threshold, <= negative_threshold, else Neutral."""
    if negative_threshold > positive_threshold:
        raise ThresholdError(
            f"negative_threshold {negative_threshold} exceeds "
            f"positive_threshold {positive_threshold}")
    if score >= positive_threshold:
        return SentimentLabel.Positive
    if score <= negative_threshold:
        return SentimentLabel.Negative
    return SentimentLabel.Neutral


def label_afinn(afinn_raw: int) -> SentimentLabel:
    if afinn_raw > 0:
        return SentimentLabel.Positive
    if afinn_raw < 0:
        return SentimentLabel.Negative
    return SentimentLabel.Neutral


def tool_labels(scores: LexiconScores,
                thresholds: LabelThresholds | None = None
                ) -> tuple[SentimentLabel, SentimentLabel, SentimentLabel, SentimentLabel]:
    """Per-tool labels in TOOL_ORDER (vader, textblob, afinn, swn)."""
    t = thresholds or LabelThresholds()
    return (
        categorize(scores.vader_compound, -t.vader, t.vader),
        categorize(scores.textblob_polarity, -t.textblob, t.textblob),
        label_afinn(scores.afinn_raw),
        categorize(scores.swn_score, -t.swn, t.swn),
    )
