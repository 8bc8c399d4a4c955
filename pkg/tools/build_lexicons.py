#!/usr/bin/env python3
"""Regenerate the bundled lexicon data files under src/newsmood/data/.

The package ships self-contained, versioned word lists so that scoring never
depends on network downloads. Four files follow the word<TAB>value format
(AFINN-style integer valences, VADER-style real valences, booster increments,
pattern-style polarities), one is a word<TAB>pos<TAB>neg table (SentiWordNet-
style sense-averaged scores), plus a negator word set and a stopword list.

The sentiment vocabulary is hand-curated below. The SWN-style table is derived
from the curated valences with deterministic per-word sense dilution and
polarity leakage, which reproduces the characteristic weakness of word-level
sense averaging. Running this script is idempotent: a fixed RNG seed makes the
output byte-stable, and checksums.json records the sha256 of every file.
"""

import hashlib
import json
import random
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "newsmood" / "data"
VERSION = "1"
SEED = 20240401

# word -> (integer valence [-5,5], real valence [-4,4], polarity [-1,1] or None)
# Polarity is None for words outside the adjective/adverb-leaning coverage of
# pattern-style lexicons; those words are omitted from polarity.txt.
SENTIMENT_WORDS = {
    # --- positive adjectives / adverbs ---
    "good": (3, 1.9, 0.7),
    "great": (3, 3.1, 0.8),
    "excellent": (3, 2.7, 1.0),
    "amazing": (4, 2.8, 0.9),
    "awesome": (4, 3.1, 1.0),
    "fantastic": (4, 2.6, 0.9),
    "wonderful": (4, 2.7, 1.0),
    "brilliant": (4, 2.8, 0.9),
    "superb": (5, 3.0, 0.9),
    "outstanding": (5, 3.2, 0.9),
    "impressive": (3, 2.3, 0.75),
    "remarkable": (2, 2.0, 0.7),
    "extraordinary": (2, 2.2, 0.75),
    "exceptional": (3, 2.4, 0.8),
    "superior": (2, 1.8, 0.6),
    "positive": (2, 1.7, 0.6),
    "strong": (2, 1.2, 0.4),
    "stronger": (2, 1.3, 0.4),
    "robust": (2, 1.4, 0.4),
    "healthy": (2, 1.6, 0.5),
    "happy": (3, 2.7, 0.8),
    "happier": (3, 2.5, 0.8),
    "glad": (3, 2.0, 0.7),
    "joyful": (3, 2.9, 0.8),
    "cheerful": (2, 2.2, 0.7),
    "delighted": (3, 2.5, 0.8),
    "delightful": (3, 2.6, 0.9),
    "pleased": (3, 2.0, 0.65),
    "pleasant": (3, 2.1, 0.7),
    "hopeful": (2, 1.8, 0.5),
    "optimistic": (2, 1.6, 0.6),
    "upbeat": (2, 1.8, 0.6),
    "confident": (2, 1.9, 0.6),
    "proud": (2, 2.1, 0.65),
    "successful": (3, 2.2, 0.75),
    "triumphant": (4, 2.6, 0.8),
    "victorious": (3, 2.4, 0.8),
    "thriving": (3, 2.2, 0.7),
    "booming": (2, 1.8, 0.5),
    "flourishing": (3, 2.1, 0.7),
    "resilient": (2, 1.7, 0.5),
    "safe": (1, 1.4, 0.5),
    "safer": (1, 1.5, 0.5),
    "secure": (2, 1.5, 0.5),
    "stable": (2, 1.2, 0.4),
    "steady": (1, 1.0, 0.3),
    "calm": (2, 1.3, 0.3),
    "peaceful": (2, 2.1, 0.7),
    "generous": (2, 2.0, 0.6),
    "kind": (2, 1.9, 0.6),
    "gentle": (2, 1.7, 0.55),
    "friendly": (2, 2.0, 0.6),
    "warm": (1, 1.4, 0.45),
    "brave": (2, 2.1, 0.7),
    "courageous": (2, 2.3, 0.75),
    "heroic": (3, 2.5, 0.8),
    "fearless": (2, 1.9, 0.6),
    "inspiring": (3, 2.4, 0.8),
    "uplifting": (3, 2.3, 0.75),
    "encouraging": (2, 1.9, 0.6),
    "reassuring": (2, 1.7, 0.55),
    "charming": (3, 2.1, 0.7),
    "beautiful": (3, 2.6, 0.85),
    "gorgeous": (3, 2.7, 0.9),
    "stunning": (4, 2.3, 0.8),
    "spectacular": (4, 2.5, 0.85),
    "magnificent": (4, 2.8, 0.9),
    "glorious": (3, 2.6, 0.85),
    "dazzling": (3, 2.3, 0.8),
    "vibrant": (2, 1.9, 0.6),
    "lively": (2, 1.8, 0.55),
    "historic": (2, 1.4, 0.3),
    "landmark": (2, 1.2, 0.3),
    "popular": (2, 1.7, 0.5),
    "beloved": (3, 2.3, 0.75),
    "favourite": (2, 1.8, 0.6),
    "favorite": (2, 1.8, 0.6),
    "innovative": (2, 1.8, 0.55),
    "creative": (2, 1.9, 0.6),
    "smart": (1, 1.7, 0.5),
    "clever": (2, 1.9, 0.6),
    "wise": (2, 1.8, 0.55),
    "talented": (2, 2.1, 0.65),
    "gifted": (2, 2.0, 0.6),
    "skilful": (2, 1.8, 0.55),
    "effective": (2, 1.5, 0.45),
    "efficient": (2, 1.5, 0.45),
    "reliable": (2, 1.6, 0.5),
    "affordable": (2, 1.4, 0.45),
    "fair": (2, 1.4, 0.45),
    "honest": (2, 2.0, 0.65),
    "transparent": (1, 1.2, 0.35),
    "clean": (2, 1.5, 0.45),
    "fresh": (1, 1.3, 0.4),
    "modern": (1, 1.0, 0.3),
    "comfortable": (2, 1.6, 0.5),
    "luxurious": (3, 2.0, 0.65),
    "prosperous": (3, 2.1, 0.7),
    "wealthy": (2, 1.6, 0.45),
    "lucky": (3, 1.9, 0.6),
    "fortunate": (2, 1.8, 0.55),
    "grateful": (3, 2.2, 0.7),
    "thankful": (2, 2.1, 0.65),
    "satisfied": (2, 1.8, 0.55),
    "memorable": (1, 1.6, 0.5),
    "celebrated": (3, 2.0, 0.6),
    "festive": (2, 1.9, 0.6),
    "merry": (3, 2.2, 0.7),
    "jubilant": (3, 2.6, 0.8),
    "ecstatic": (4, 2.9, 0.9),
    "thrilled": (3, 2.4, 0.8),
    "thrilling": (3, 2.3, 0.75),
    "exciting": (3, 2.2, 0.7),
    "excited": (3, 2.3, 0.7),
    "promising": (2, 1.8, 0.55),
    "bright": (1, 1.7, 0.5),
    "brighter": (1, 1.8, 0.5),
    "sunny": (2, 1.7, 0.55),
    "perfect": (3, 2.7, 0.9),
    "ideal": (2, 2.0, 0.65),
    "better": (2, 1.9, 0.5),
    "best": (3, 3.2, 0.85),
    "finest": (3, 2.5, 0.8),
    "top": (2, 1.3, 0.4),
    "record": (1, 0.9, 0.25),
    # --- positive verbs / nouns (mostly absent from polarity.txt) ---
    "win": (4, 2.8, None),
    "winner": (4, 2.6, None),
    "winners": (4, 2.5, None),
    "winning": (4, 2.7, None),
    "won": (3, 2.6, None),
    "victory": (3, 2.8, None),
    "triumph": (4, 2.9, None),
    "champion": (3, 2.4, None),
    "champions": (3, 2.4, None),
    "celebrate": (3, 2.2, None),
    "celebrates": (3, 2.2, None),
    "celebration": (3, 2.3, None),
    "celebrations": (3, 2.3, None),
    "praise": (3, 2.1, None),
    "praised": (3, 2.1, None),
    "praises": (3, 2.0, None),
    "applaud": (2, 2.0, None),
    "applauded": (2, 2.0, None),
    "cheer": (2, 2.1, None),
    "cheers": (2, 2.0, None),
    "cheered": (2, 2.1, None),
    "rescue": (2, 1.6, None),
    "rescued": (2, 1.7, None),
    "rescues": (2, 1.6, None),
    "save": (2, 1.7, None),
    "saved": (2, 1.8, None),
    "saves": (2, 1.7, None),
    "recover": (2, 1.5, None),
    "recovered": (2, 1.6, None),
    "recovery": (2, 1.5, None),
    "recovering": (2, 1.4, None),
    "heal": (2, 1.7, None),
    "healing": (2, 1.8, None),
    "improve": (2, 1.6, None),
    "improved": (2, 1.7, None),
    "improves": (2, 1.6, None),
    "improvement": (2, 1.6, None),
    "improvements": (2, 1.5, None),
    "boost": (2, 1.5, None),
    "boosts": (2, 1.5, None),
    "boosted": (2, 1.6, None),
    "soar": (2, 1.4, None),
    "soars": (2, 1.4, None),
    "soared": (2, 1.4, None),
    "surge": (1, 1.0, None),
    "gain": (2, 1.4, None),
    "gains": (2, 1.4, None),
    "gained": (2, 1.4, None),
    "growth": (2, 1.3, None),
    "grow": (1, 1.1, None),
    "grows": (1, 1.1, None),
    "growing": (1, 1.1, None),
    "agree": (1, 1.0, None),
    "agreement": (1, 1.0, None),
    "agreed": (1, 1.1, None),
    "support": (2, 1.3, None),
    "supports": (2, 1.3, None),
    "supported": (2, 1.3, None),
    "welcome": (2, 1.8, None),
    "welcomed": (2, 1.8, None),
    "welcomes": (2, 1.7, None),
    "approve": (2, 1.5, None),
    "approved": (2, 1.6, None),
    "approval": (2, 1.5, None),
    "award": (3, 1.9, None),
    "awarded": (3, 2.0, None),
    "awards": (3, 1.9, None),
    "honour": (2, 1.9, None),
    "honoured": (2, 2.0, None),
    "honor": (2, 1.9, None),
    "honored": (2, 2.0, None),
    "success": (2, 2.1, None),
    "successes": (2, 2.0, None),
    "succeed": (3, 2.0, None),
    "succeeds": (3, 2.0, None),
    "succeeded": (3, 2.1, None),
    "benefit": (2, 1.4, None),
    "benefits": (2, 1.4, None),
    "breakthrough": (3, 2.1, None),
    "progress": (2, 1.5, None),
    "protect": (1, 1.2, None),
    "protects": (1, 1.2, None),
    "protected": (1, 1.3, None),
    "protection": (1, 1.2, None),
    "revive": (2, 1.4, None),
    "revival": (2, 1.4, None),
    "reunite": (2, 1.8, None),
    "reunited": (2, 1.9, None),
    "reunion": (2, 1.8, None),
    "donate": (2, 1.7, None),
    "donated": (2, 1.7, None),
    "donation": (2, 1.6, None),
    "donations": (2, 1.6, None),
    "charity": (2, 1.8, None),
    "volunteer": (2, 1.6, None),
    "volunteers": (2, 1.6, None),
    "hero": (2, 2.3, None),
    "heroes": (2, 2.3, None),
    "hope": (2, 1.9, None),
    "hopes": (2, 1.8, None),
    "joy": (3, 2.7, None),
    "delight": (3, 2.4, None),
    "love": (3, 3.2, None),
    "loved": (3, 2.9, None),
    "loves": (3, 3.0, None),
    "smile": (2, 2.1, None),
    "smiles": (2, 2.1, None),
    "laugh": (1, 2.2, None),
    "laughter": (1, 2.2, None),
    "comfort": (2, 1.7, None),
    "relief": (2, 1.6, None),
    "relieved": (2, 1.7, None),
    "opportunity": (2, 1.4, None),
    "opportunities": (2, 1.4, None),
    "achievement": (3, 2.1, None),
    "achieve": (2, 1.8, None),
    "achieved": (2, 1.9, None),
    "milestone": (2, 1.5, None),
    "thrive": (3, 2.2, None),
    "thrives": (3, 2.2, None),
    "flourish": (3, 2.1, None),
    "peace": (2, 2.4, None),
    "freedom": (2, 2.2, None),
    "justice": (2, 1.8, None),
    "unity": (2, 1.6, None),
    "stability": (2, 1.3, None),
    "prosperity": (3, 2.2, None),
    # --- negative adjectives / adverbs ---
    "bad": (-3, -2.5, -0.7),
    "worse": (-3, -2.6, -0.7),
    "worst": (-3, -3.1, -0.9),
    "terrible": (-3, -2.1, -0.9),
    "awful": (-3, -2.0, -1.0),
    "horrible": (-3, -2.5, -0.9),
    "horrific": (-3, -2.9, -0.9),
    "horrifying": (-3, -2.8, -0.9),
    "dreadful": (-3, -2.2, -0.8),
    "appalling": (-2, -2.3, -0.8),
    "atrocious": (-3, -2.6, -0.9),
    "poor": (-2, -1.5, -0.4),
    "weak": (-2, -1.1, -0.4),
    "weaker": (-2, -1.2, -0.4),
    "fragile": (-2, -1.2, -0.4),
    "negative": (-2, -1.6, -0.6),
    "sad": (-2, -2.1, -0.7),
    "sadder": (-2, -2.0, -0.7),
    "unhappy": (-2, -1.9, -0.6),
    "miserable": (-3, -2.3, -0.8),
    "gloomy": (-2, -1.7, -0.55),
    "grim": (-2, -1.6, -0.6),
    "bleak": (-2, -1.5, -0.6),
    "dire": (-3, -1.9, -0.7),
    "tragic": (-2, -2.4, -0.8),
    "heartbreaking": (-3, -2.5, -0.85),
    "devastating": (-3, -2.7, -0.85),
    "devastated": (-2, -2.5, -0.8),
    "severe": (-2, -1.6, -0.5),
    "serious": (-2, -1.2, -0.35),
    "grave": (-2, -1.5, -0.5),
    "critical": (-2, -1.3, -0.4),
    "dangerous": (-2, -1.8, -0.6),
    "perilous": (-2, -1.9, -0.65),
    "deadly": (-3, -2.3, -0.8),
    "lethal": (-2, -2.1, -0.7),
    "fatal": (-3, -2.4, -0.8),
    "violent": (-3, -2.2, -0.7),
    "brutal": (-3, -2.4, -0.8),
    "savage": (-3, -2.3, -0.75),
    "cruel": (-3, -2.5, -0.8),
    "vicious": (-2, -2.3, -0.75),
    "ruthless": (-2, -2.0, -0.65),
    "angry": (-3, -2.3, -0.7),
    "furious": (-3, -2.6, -0.8),
    "outraged": (-3, -2.2, -0.7),
    "enraged": (-2, -2.4, -0.75),
    "bitter": (-2, -1.8, -0.6),
    "hostile": (-2, -1.9, -0.6),
    "fearful": (-2, -1.7, -0.55),
    "afraid": (-2, -1.9, -0.6),
    "scared": (-2, -1.9, -0.6),
    "terrified": (-3, -2.6, -0.85),
    "anxious": (-2, -1.6, -0.5),
    "nervous": (-2, -1.4, -0.45),
    "worried": (-3, -1.5, -0.5),
    "alarming": (-2, -1.8, -0.6),
    "alarmed": (-2, -1.7, -0.55),
    "shocking": (-2, -1.9, -0.6),
    "shocked": (-2, -1.8, -0.55),
    "desperate": (-3, -1.9, -0.65),
    "hopeless": (-2, -2.1, -0.7),
    "helpless": (-2, -1.8, -0.6),
    "vulnerable": (-2, -1.3, -0.4),
    "painful": (-2, -1.9, -0.6),
    "agonising": (-3, -2.2, -0.75),
    "ugly": (-3, -1.9, -0.6),
    "nasty": (-3, -2.0, -0.65),
    "toxic": (-2, -1.8, -0.55),
    "filthy": (-2, -1.7, -0.55),
    "rotten": (-3, -1.9, -0.6),
    "corrupt": (-3, -2.3, -0.75),
    "dishonest": (-2, -2.0, -0.65),
    "illegal": (-2, -1.6, -0.5),
    "unlawful": (-2, -1.5, -0.5),
    "unfair": (-2, -1.7, -0.55),
    "unjust": (-2, -1.8, -0.6),
    "wrong": (-2, -1.5, -0.45),
    "faulty": (-2, -1.3, -0.4),
    "broken": (-1, -1.4, -0.4),
    "failing": (-2, -1.6, -0.5),
    "chaotic": (-2, -1.7, -0.5),
    "turbulent": (-2, -1.4, -0.45),
    "troubled": (-2, -1.5, -0.5),
    "troubling": (-2, -1.6, -0.5),
    "disturbing": (-2, -1.9, -0.6),
    "distressing": (-2, -2.0, -0.65),
    "controversial": (-1, -0.9, -0.25),
    "costly": (-2, -1.1, -0.35),
    "expensive": (-1, -0.8, -0.25),
    "sick": (-2, -1.5, -0.45),
    "ill": (-2, -1.4, -0.45),
    "dying": (-3, -2.5, -0.8),
    "dead": (-3, -2.6, -0.8),
    "catastrophic": (-3, -2.8, -0.9),
    "disastrous": (-3, -2.6, -0.85),
    "unprecedented": (-1, -0.5, -0.1),
    "guilty": (-3, -1.9, -0.6),
    "ashamed": (-2, -1.9, -0.6),
    "embarrassing": (-2, -1.7, -0.55),
    "humiliating": (-3, -2.1, -0.7),
    "pathetic": (-2, -2.0, -0.65),
    "useless": (-2, -1.8, -0.55),
    "pointless": (-2, -1.6, -0.5),
    "reckless": (-2, -1.8, -0.55),
    "careless": (-2, -1.6, -0.5),
    "dismal": (-3, -1.9, -0.6),
    "abysmal": (-3, -2.2, -0.75),
    # --- negative verbs / nouns ---
    "war": (-2, -2.6, None),
    "wars": (-2, -2.5, None),
    "crisis": (-2, -2.0, None),
    "crises": (-2, -2.0, None),
    "attack": (-2, -2.0, None),
    "attacks": (-2, -2.0, None),
    "attacked": (-2, -2.1, None),
    "kill": (-3, -3.0, None),
    "killed": (-3, -3.1, None),
    "kills": (-3, -3.0, None),
    "killing": (-3, -3.0, None),
    "murder": (-2, -3.2, None),
    "murdered": (-2, -3.2, None),
    "death": (-2, -2.9, None),
    "deaths": (-2, -2.9, None),
    "die": (-3, -2.8, None),
    "died": (-3, -2.8, None),
    "dies": (-3, -2.8, None),
    "injury": (-2, -1.9, None),
    "injuries": (-2, -1.9, None),
    "injured": (-2, -1.9, None),
    "wound": (-2, -1.8, None),
    "wounded": (-2, -1.9, None),
    "casualty": (-2, -2.0, None),
    "casualties": (-2, -2.1, None),
    "victim": (-2, -1.8, None),
    "victims": (-2, -1.8, None),
    "bomb": (-3, -2.5, None),
    "bombs": (-3, -2.5, None),
    "bombing": (-3, -2.6, None),
    "explosion": (-2, -2.1, None),
    "blast": (-2, -1.9, None),
    "shooting": (-2, -2.3, None),
    "shot": (-2, -1.9, None),
    "crash": (-2, -1.9, None),
    "crashed": (-2, -1.9, None),
    "crashes": (-2, -1.8, None),
    "collapse": (-2, -1.8, None),
    "collapsed": (-2, -1.8, None),
    "collapses": (-2, -1.7, None),
    "fail": (-2, -1.8, None),
    "fails": (-2, -1.8, None),
    "failed": (-2, -1.9, None),
    "failure": (-2, -2.0, None),
    "failures": (-2, -2.0, None),
    "loss": (-3, -1.9, None),
    "losses": (-3, -1.9, None),
    "lose": (-3, -1.8, None),
    "loses": (-3, -1.8, None),
    "lost": (-3, -1.7, None),
    "threat": (-2, -1.8, None),
    "threats": (-2, -1.8, None),
    "threaten": (-2, -1.9, None),
    "threatens": (-2, -1.9, None),
    "threatened": (-2, -1.9, None),
    "fear": (-2, -2.1, None),
    "fears": (-2, -2.0, None),
    "panic": (-3, -2.2, None),
    "chaos": (-2, -2.0, None),
    "scandal": (-3, -2.2, None),
    "fraud": (-4, -2.6, None),
    "corruption": (-3, -2.4, None),
    "abuse": (-3, -2.7, None),
    "abused": (-3, -2.7, None),
    "assault": (-2, -2.4, None),
    "robbery": (-2, -2.1, None),
    "theft": (-2, -1.9, None),
    "riot": (-2, -2.0, None),
    "riots": (-2, -2.0, None),
    "unrest": (-2, -1.7, None),
    "conflict": (-2, -1.8, None),
    "clashes": (-2, -1.7, None),
    "fighting": (-2, -1.7, None),
    "invasion": (-2, -2.1, None),
    "invade": (-2, -2.0, None),
    "invaded": (-2, -2.1, None),
    "occupation": (-1, -1.2, None),
    "siege": (-2, -1.9, None),
    "shelling": (-2, -2.0, None),
    "strike": (-1, -0.9, None),
    "strikes": (-1, -0.9, None),
    "damage": (-3, -1.9, None),
    "damages": (-3, -1.9, None),
    "damaged": (-3, -1.9, None),
    "destroy": (-3, -2.4, None),
    "destroyed": (-3, -2.5, None),
    "destruction": (-3, -2.5, None),
    "disaster": (-2, -2.5, None),
    "disasters": (-2, -2.5, None),
    "catastrophe": (-3, -2.7, None),
    "emergency": (-2, -1.6, None),
    "tragedy": (-2, -2.6, None),
    "punish": (-2, -1.8, None),
    "punished": (-2, -1.8, None),
    "punishment": (-2, -1.7, None),
    "condemn": (-2, -1.8, None),
    "condemned": (-2, -1.8, None),
    "condemns": (-2, -1.8, None),
    "accuse": (-2, -1.5, None),
    "accuses": (-2, -1.5, None),
    "accused": (-2, -1.5, None),
    "accusations": (-2, -1.5, None),
    "blame": (-2, -1.6, None),
    "blames": (-2, -1.6, None),
    "blamed": (-2, -1.6, None),
    "warn": (-2, -1.3, None),
    "warns": (-2, -1.3, None),
    "warned": (-2, -1.3, None),
    "warning": (-2, -1.4, None),
    "warnings": (-2, -1.4, None),
    "concern": (-1, -1.0, None),
    "concerns": (-1, -1.0, None),
    "worry": (-3, -1.6, None),
    "worries": (-3, -1.6, None),
    "crime": (-2, -1.9, None),
    "crimes": (-2, -1.9, None),
    "criminal": (-3, -2.0, None),
    "prison": (-2, -1.6, None),
    "jailed": (-2, -1.7, None),
    "arrest": (-2, -1.4, None),
    "arrested": (-2, -1.4, None),
    "ban": (-2, -1.2, None),
    "banned": (-2, -1.3, None),
    "sanctions": (-1, -1.0, None),
    "cuts": (-1, -0.9, None),
    "shortage": (-2, -1.4, None),
    "shortages": (-2, -1.4, None),
    "deficit": (-2, -1.2, None),
    "debt": (-2, -1.3, None),
    "recession": (-2, -1.9, None),
    "slump": (-2, -1.5, None),
    "plunge": (-2, -1.4, None),
    "plunges": (-2, -1.4, None),
    "plummet": (-2, -1.5, None),
    "plummets": (-2, -1.5, None),
    "decline": (-2, -1.2, None),
    "declines": (-2, -1.2, None),
    "drought": (-2, -1.6, None),
    "famine": (-2, -2.3, None),
    "flood": (-2, -1.7, None),
    "floods": (-2, -1.7, None),
    "flooding": (-2, -1.7, None),
    "earthquake": (-2, -1.9, None),
    "wildfire": (-2, -1.8, None),
    "outbreak": (-2, -1.7, None),
    "epidemic": (-2, -1.9, None),
    "pandemic": (-2, -1.9, None),
    "infection": (-2, -1.6, None),
    "infections": (-2, -1.6, None),
    "virus": (-1, -1.3, None),
    "disease": (-2, -1.8, None),
    "cancer": (-1, -2.0, None),
    "suffer": (-2, -2.0, None),
    "suffers": (-2, -2.0, None),
    "suffering": (-2, -2.1, None),
    "struggle": (-2, -1.5, None),
    "struggles": (-2, -1.5, None),
    "struggling": (-2, -1.5, None),
    "hardship": (-2, -1.7, None),
    "poverty": (-2, -1.9, None),
    "homeless": (-2, -1.8, None),
    "hunger": (-2, -1.7, None),
    "grief": (-2, -2.2, None),
    "mourning": (-2, -2.1, None),
    "mourn": (-2, -2.1, None),
    "anger": (-3, -2.2, None),
    "fury": (-3, -2.3, None),
    "outrage": (-3, -2.1, None),
    "protest": (-1, -0.9, None),
    "protests": (-1, -0.9, None),
    "backlash": (-2, -1.5, None),
    "row": (-1, -0.8, None),
    "dispute": (-1, -1.0, None),
    "crackdown": (-2, -1.3, None),
    "hate": (-3, -2.7, None),
    "hatred": (-3, -2.6, None),
    "racism": (-3, -2.8, None),
    "terror": (-3, -2.7, None),
    "terrorism": (-3, -2.9, None),
    "terrorist": (-3, -2.8, None),
    "hostage": (-2, -2.0, None),
    "kidnap": (-2, -2.3, None),
    "kidnapped": (-2, -2.3, None),
    "torture": (-4, -2.9, None),
    "massacre": (-3, -3.1, None),
    "genocide": (-4, -3.4, None),
    "atrocity": (-3, -2.9, None),
    "atrocities": (-3, -2.9, None),
    "refugee": (-1, -1.1, None),
    "refugees": (-1, -1.1, None),
    "evacuate": (-1, -1.2, None),
    "evacuated": (-1, -1.2, None),
    "resign": (-1, -1.0, None),
    "resigns": (-1, -1.0, None),
    "resigned": (-1, -1.0, None),
    "sacked": (-2, -1.5, None),
    "scrapped": (-1, -1.0, None),
    "delay": (-1, -0.9, None),
    "delays": (-1, -0.9, None),
    "delayed": (-1, -0.9, None),
    "cancel": (-1, -1.1, None),
    "cancelled": (-1, -1.2, None),
    "chaos": (-2, -2.0, None),
    "misery": (-2, -2.2, None),
    "despair": (-3, -2.4, None),
    "defeat": (-2, -1.8, None),
    "defeated": (-2, -1.8, None),
    "relegated": (-2, -1.6, None),
}

# Adjectives the pattern-style polarity list does NOT cover. Word-coverage
# gaps are the defining weakness of that lexicon family; keeping the gaps
# explicit makes the polarity scorer behave like one instead of shadowing the
# integer-valence list.
POLARITY_GAPS = {
    "impressive", "remarkable", "outstanding", "uplifting", "encouraging",
    "historic", "landmark", "popular", "successful", "confident",
    "optimistic", "upbeat", "hopeful", "thriving", "booming", "flourishing",
    "resilient", "vibrant", "lively", "stunning", "spectacular", "promising",
    "safe", "safer", "secure", "stable", "steady", "strong", "stronger",
    "robust", "healthy", "generous", "brave", "courageous", "heroic",
    "fearless", "smart", "effective", "efficient", "reliable", "affordable",
    "transparent", "modern", "memorable", "record", "top", "festive",
    "sunny", "bright", "brighter", "fresh", "clean", "proud", "prosperous",
    "wealthy", "exceptional", "extraordinary", "superior",
    "grim", "bleak", "dire", "severe", "serious", "grave", "critical",
    "dangerous", "perilous", "deadly", "lethal", "fatal", "violent",
    "brutal", "savage", "vicious", "ruthless", "desperate", "hopeless",
    "helpless", "catastrophic", "disastrous", "shocking", "shocked",
    "alarming", "alarmed", "troubled", "troubling", "chaotic", "turbulent",
    "weak", "weaker", "fragile", "poor", "worried", "disturbing",
    "distressing", "reckless", "careless", "corrupt", "dishonest",
    "illegal", "unlawful", "controversial", "costly", "expensive", "sick",
    "ill", "vulnerable", "fearful", "afraid", "scared", "terrified",
    "anxious", "nervous", "guilty", "ashamed", "broken", "failing",
    "faulty", "wrong", "unprecedented", "toxic", "filthy", "bitter",
    "hostile", "dying", "dead",
}

# Degree adverbs: +0.293 intensifies, -0.293 dampens; distance scaling and the
# ALL-CAPS bump live in the scorer, not the data.
BOOSTERS_UP = [
    "absolutely", "amazingly", "completely", "considerably", "decidedly",
    "deeply", "enormously", "entirely", "especially", "exceptionally",
    "extremely", "greatly", "highly", "hugely", "incredibly", "intensely",
    "majorly", "particularly", "purely", "quite", "really", "remarkably",
    "seriously", "so", "substantially", "thoroughly", "totally",
    "tremendously", "truly", "unbelievably", "unusually", "utterly", "very",
]
BOOSTERS_DOWN = [
    "almost", "fairly", "marginally", "mildly", "moderately", "nearly",
    "occasionally", "partly", "slightly", "somewhat",
]

NEGATORS = [
    "not", "no", "never", "neither", "nor", "nothing", "nobody", "none",
    "cannot", "can't", "don't", "doesn't", "didn't", "isn't", "aren't",
    "wasn't", "weren't", "won't", "wouldn't", "couldn't", "shouldn't",
    "hasn't", "haven't", "hadn't", "ain't", "without", "hardly", "barely",
    "scarcely", "rarely", "seldom", "lacks", "lacking",
]

STOPWORDS = [
    "a", "about", "above", "across", "after", "again", "against", "all",
    "also", "am", "an", "and", "any", "are", "as", "at", "be", "because",
    "been", "before", "being", "below", "between", "both", "but", "by",
    "can", "could", "did", "do", "does", "doing", "down", "during", "each",
    "either", "else", "ever", "every", "few", "for", "from", "further",
    "had", "has", "have", "having", "he", "her", "here", "hers", "herself",
    "him", "himself", "his", "how", "i", "if", "in", "into", "is", "it",
    "its", "itself", "just", "may", "me", "might", "more", "most", "much",
    "must", "my", "myself", "nor", "not", "now", "of", "off", "on", "once",
    "only", "onto", "or", "other", "others", "ought", "our", "ours",
    "ourselves", "out", "over", "own", "per", "same", "shall", "she",
    "should", "since", "so", "some", "such", "than", "that", "the", "their",
    "theirs", "them", "themselves", "then", "there", "these", "they",
    "this", "those", "through", "till", "to", "too", "under", "until",
    "unto", "up", "upon", "us", "was", "we", "were", "what", "when",
    "whenever", "where", "whether", "which", "while", "who", "whom",
    "whose", "why", "will", "with", "within", "would", "yet", "you",
    "your", "yours", "yourself", "yourselves", "no", "via", "amid",
    "among", "around", "before", "behind", "beside", "besides", "beyond",
    "despite", "except", "inside", "near", "outside", "toward", "towards",
    "underneath", "thus", "hence", "however", "although", "though",
    "unless", "whatever", "whichever", "whoever", "i'm", "i've", "i'll",
    "it's", "he's", "she's", "we're", "they're", "you're", "that's",
    "there's", "what's", "who's",
]

# Objective vocabulary: receives only small sense-averaging noise in the
# SWN-style table and appears in no other lexicon.
NEUTRAL_WORDS = [
    "government", "minister", "ministers", "parliament", "police", "court",
    "judge", "inquiry", "report", "reports", "council", "election",
    "elections", "vote", "votes", "voters", "campaign", "policy",
    "policies", "budget", "market", "markets", "economy", "trade",
    "company", "companies", "business", "businesses", "bank", "banks",
    "finance", "industry", "factory", "workers", "staff", "union",
    "transport", "railway", "trains", "airport", "flight", "flights",
    "weather", "rain", "snow", "temperature", "school", "schools",
    "university", "students", "teachers", "hospital", "hospitals",
    "doctors", "nurses", "health", "research", "science", "scientists",
    "technology", "internet", "phone", "energy", "oil", "gas",
    "electricity", "fuel", "prices", "price", "inflation", "tax", "taxes",
    "pension", "pensions", "housing", "homes", "property", "football",
    "cricket", "rugby", "tennis", "league", "cup", "match", "matches",
    "team", "teams", "player", "players", "season", "manager", "club",
    "clubs", "film", "films", "music", "festival", "museum", "art",
    "artist", "book", "books", "author", "television", "series", "radio",
    "travel", "tourism", "holiday", "island", "region", "city", "towns",
    "town", "village", "border", "country", "nation", "europe", "london",
    "england", "scotland", "wales", "ireland", "ukraine", "russia",
    "america", "china", "president", "leader", "leaders", "secretary",
    "chief", "spokesman", "statement", "interview", "meeting", "summit",
    "talks", "deal", "plan", "plans", "scheme", "project", "funding",
    "review", "figures", "data", "survey", "study", "committee",
    "chancellor", "mayor", "mp", "mps", "bbc", "news", "week", "month",
    "year", "people", "public", "family", "families", "children", "women",
    "men", "residents", "community", "drivers", "passengers", "customers",
]


def _fmt(value: float) -> str:
    text = f"{value:.3f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-0") else "0"


def write_lines(path: Path, header: str, lines: list[str]) -> None:
    body = "\n".join([f"# {header}", f"# version: {VERSION}"] + lines) + "\n"
    path.write_text(body, encoding="utf-8")
    print(f"wrote {path.name}: {len(lines)} entries")


def build_swn(rng: random.Random) -> list[str]:
    """Sense-averaged (pos, neg) rows: diluted polar words plus noisy objective ones."""
    rows = []
    for word in sorted(SENTIMENT_WORDS):
        _, vader, polarity = SENTIMENT_WORDS[word]
        signal = vader / 4.0 if polarity is None else (vader / 4.0 + polarity) / 2.0
        dilution = rng.uniform(0.3, 0.75)
        leak = rng.uniform(0.0, 0.08)
        # A slice of the vocabulary averages out badly across senses.
        if rng.random() < 0.08:
            dilution *= rng.uniform(0.05, 0.3)
            leak = rng.uniform(0.05, 0.18)
        strength = min(1.0, abs(signal) * dilution)
        if signal >= 0:
            pos, neg = strength + rng.uniform(0, 0.05), leak
        else:
            pos, neg = leak, strength + rng.uniform(0, 0.05)
        rows.append(f"{word}\t{min(1.0, pos):.3f}\t{min(1.0, neg):.3f}")
    for word in sorted(set(NEUTRAL_WORDS) - set(SENTIMENT_WORDS)):
        pos = rng.uniform(0.0, 0.09)
        neg = rng.uniform(0.0, 0.09)
        rows.append(f"{word}\t{pos:.3f}\t{neg:.3f}")
    return rows


def main() -> None:
    rng = random.Random(SEED)
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    afinn = [f"{w}\t{v[0]}" for w, v in sorted(SENTIMENT_WORDS.items())]
    write_lines(DATA_DIR / "afinn.txt",
                "AFINN-style integer valences in [-5, 5], word<TAB>value", afinn)

    vader = [f"{w}\t{_fmt(v[1])}" for w, v in sorted(SENTIMENT_WORDS.items())]
    write_lines(DATA_DIR / "vader_valences.txt",
                "VADER-style mean valences in [-4, 4], word<TAB>value", vader)

    boosters = [f"{w}\t0.293" for w in sorted(BOOSTERS_UP)]
    boosters += [f"{w}\t-0.293" for w in sorted(BOOSTERS_DOWN)]
    write_lines(DATA_DIR / "vader_boosters.txt",
                "degree-adverb increments, word<TAB>value", sorted(boosters))

    write_lines(DATA_DIR / "negators.txt",
                "negation cue words, one per line", sorted(set(NEGATORS)))

    polarity = [f"{w}\t{_fmt(v[2])}" for w, v in sorted(SENTIMENT_WORDS.items())
                if v[2] is not None and w not in POLARITY_GAPS]
    write_lines(DATA_DIR / "polarity.txt",
                "pattern-style polarities in [-1, 1], word<TAB>value", polarity)

    write_lines(DATA_DIR / "swn.txt",
                "sense-averaged positivity/negativity, word<TAB>pos<TAB>neg",
                build_swn(rng))

    write_lines(DATA_DIR / "stopwords.txt",
                "English function words removed before TF-IDF", sorted(set(STOPWORDS)))

    checksums = {}
    for path in sorted(DATA_DIR.glob("*.txt")):
        checksums[path.name] = hashlib.sha256(path.read_bytes()).hexdigest()
    (DATA_DIR / "checksums.json").write_text(
        json.dumps(checksums, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote checksums.json: {len(checksums)} files")


if __name__ == "__main__":
    main()
