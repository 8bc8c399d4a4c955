#!/usr/bin/env python3
"""Regenerate the bundled mini corpus at src/newsmood/data/mini_corpus.csv.

Builds a feed-style CSV (title, pubDate, guid, link, description) of short
news items from phrase templates. Sentiment-bearing slots draw from the same
curated vocabulary as the bundled lexicons, so the scorers have realistic hit
rates; neutral filler comes from words no scorer knows. A fixed seed keeps the
file byte-stable. A few rows carry an empty description on purpose (the loader
counts and skips them).
"""

import csv
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from build_lexicons import SENTIMENT_WORDS  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "newsmood" / "data" / "mini_corpus.csv"
SEED = 7120394
N_ARTICLES = 900

# Proportions of article moods (mixed items blend both polarities).
WEIGHTS = {"negative": 0.34, "positive": 0.30, "neutral": 0.26, "mixed": 0.10}

POS_ADJ = [
    "good", "great", "excellent", "impressive", "remarkable", "outstanding",
    "brilliant", "wonderful", "fantastic", "superb", "inspiring", "uplifting",
    "encouraging", "historic", "popular", "successful", "confident",
    "optimistic", "hopeful", "thriving", "resilient", "vibrant", "stunning",
    "spectacular", "magnificent", "promising", "beautiful", "safe", "stable",
    "strong", "generous", "brave", "heroic", "delightful", "cheerful",
]
POS_VERB = [
    "celebrates", "praises", "welcomes", "boosts", "improves", "saves",
    "rescues", "supports", "honours", "cheers", "recovers", "thrives",
    "soars", "wins", "gains", "improved", "welcomed", "praised", "rescued",
]
POS_NOUN = [
    "victory", "triumph", "success", "breakthrough", "recovery", "progress",
    "achievement", "milestone", "celebration", "award", "boost", "relief",
    "hope", "joy", "agreement", "improvement", "support", "charity",
    "donation", "reunion", "growth", "prosperity", "unity", "peace",
]
NEG_ADJ = [
    "bad", "terrible", "awful", "horrible", "dreadful", "grim", "bleak",
    "dire", "tragic", "severe", "dangerous", "deadly", "fatal", "violent",
    "brutal", "cruel", "angry", "furious", "desperate", "hopeless",
    "devastating", "catastrophic", "disastrous", "shocking", "alarming",
    "troubled", "chaotic", "weak", "poor", "worried", "miserable",
    "heartbreaking", "disturbing", "reckless", "corrupt",
]
NEG_VERB = [
    "condemns", "warns", "threatens", "fails", "collapses", "suffers",
    "struggles", "plunges", "accuses", "blames", "kills", "dies",
    "destroys", "plummets", "declines", "mourns", "resigns", "punished",
    "attacked", "injured", "wounded", "condemned", "warned", "threatened",
]
NEG_NOUN = [
    "crisis", "war", "attack", "disaster", "tragedy", "scandal", "fraud",
    "corruption", "outbreak", "explosion", "chaos", "panic", "threat",
    "conflict", "collapse", "damage", "destruction", "casualties", "deaths",
    "injuries", "losses", "famine", "drought", "floods", "recession",
    "unrest", "riots", "fury", "outrage", "grief", "misery", "despair",
    "hardship", "poverty", "shortage", "debt",
]

NEUTRAL_ADJ = [
    "new", "annual", "local", "national", "regional", "official", "public",
    "weekly", "monthly", "digital", "online", "rural", "urban", "central",
    "northern", "southern", "eastern", "western", "major", "latest",
    "upcoming", "ongoing", "joint", "revised", "updated",
]
NEUTRAL_VERB = [
    "announces", "publishes", "outlines", "confirms", "reviews", "considers",
    "discusses", "examines", "presents", "unveils", "schedules", "updates",
    "launches", "introduces", "holds", "hosts", "visits", "attends",
    "opens", "begins", "continues", "expands", "releases", "sets",
]
NEUTRAL_NOUN = [
    "report", "review", "survey", "study", "plan", "scheme", "budget",
    "policy", "statement", "meeting", "summit", "inquiry", "committee",
    "project", "programme", "timetable", "framework", "strategy",
    "consultation", "proposal", "figures", "data", "findings", "guidelines",
]
SUBJECTS = [
    "The government", "The council", "The NHS", "The Bank of England",
    "Downing Street", "The Home Office", "MPs", "Ministers",
    "The committee", "Union leaders", "The club", "The company",
    "Scientists", "Researchers", "Doctors", "Teachers", "The charity",
    "The regulator", "The watchdog", "Campaigners", "Economists",
    "The prime minister", "The chancellor", "The mayor", "Police",
]
TOPICS = [
    "energy prices", "rail services", "hospital waiting times",
    "school funding", "housing supply", "food costs", "fuel supplies",
    "the jobs market", "high street shops", "coastal communities",
    "city centre traffic", "broadband coverage", "water quality",
    "museum funding", "the tourist season", "exam results",
    "vaccination rates", "farm exports", "steel production",
    "airport staffing", "library services", "bus routes",
    "social care", "flood defences", "court backlogs",
]
PLACES = [
    "London", "Manchester", "Glasgow", "Cardiff", "Belfast", "Yorkshire",
    "Ukraine", "Brussels", "Edinburgh", "Birmingham", "Liverpool", "Leeds",
    "Bristol", "Cornwall", "Kent", "Cumbria", "Norfolk", "Devon",
    "the Midlands", "the north east", "the south west",
]
CATEGORIES = ["uk", "world", "business", "politics", "health", "science",
              "sport", "entertainment", "technology", "education"]

MONTHS = ["Jan", "Feb", "Mar", "Apr", "May", "Jun",
          "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"]
DAYS = ["Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"]


def check_vocab() -> None:
    """Every sentiment slot word must resolve in the curated vocabulary."""
    from newsmood.corpus import light_stem
    known = set(SENTIMENT_WORDS)
    for bank in (POS_ADJ, POS_VERB, POS_NOUN, NEG_ADJ, NEG_VERB, NEG_NOUN):
        for word in bank:
            if word not in known and light_stem(word) not in known:
                raise SystemExit(f"slot word {word!r} is not in the lexicon")


def pub_date(rng: random.Random, index: int) -> str:
    # Deterministic RFC-1123-style stamps over a spring/summer window.
    day_of_year = 66 + index // 9  # starts 7 Mar, advances ~daily
    month_lengths = [31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31]
    month, day = 0, day_of_year
    while day > month_lengths[month]:
        day -= month_lengths[month]
        month += 1
    weekday = DAYS[(day_of_year + 2) % 7]
    return (f"{weekday}, {day:02d} {MONTHS[month]} 2022 "
            f"{rng.randrange(24):02d}:{rng.randrange(60):02d}:"
            f"{rng.randrange(60):02d} GMT")


def negative_item(rng: random.Random) -> tuple[str, str]:
    adj, adj2 = rng.sample(NEG_ADJ, 2)
    noun, noun2 = rng.sample(NEG_NOUN, 2)
    verb = rng.choice(NEG_VERB)
    place = rng.choice(PLACES)
    subject = rng.choice(SUBJECTS)
    topic = rng.choice(TOPICS)
    styles = [
        (f"{place} {noun} leaves {rng.randrange(3, 90)} dead",
         f"{subject} {verb} after a {adj} {noun} in {place}, with officials "
         f"warning the {noun2} could deepen an already {adj2} situation for "
         f"residents."),
        (f"{topic.capitalize()} hit by {adj} {noun}",
         f"A {adj} {noun} has disrupted {topic} across {place}, and "
         f"{subject.lower()} warned of {adj2} {noun2} for thousands of "
         f"families this winter."),
        (f"'{adj.capitalize()} and {adj2}': {noun} grows in {place}",
         f"Witnesses described {adj} scenes as the {noun} spread through "
         f"{place}. {subject} {verb} the response, calling the {noun2} "
         f"{adj2}."),
        (f"{subject} {verb} over {place} {noun}",
         f"The {noun} in {place} has left communities facing {adj} "
         f"{noun2}, {subject.lower()} said, as fears mount over {topic}."),
    ]
    return rng.choice(styles)


def positive_item(rng: random.Random) -> tuple[str, str]:
    adj, adj2 = rng.sample(POS_ADJ, 2)
    noun, noun2 = rng.sample(POS_NOUN, 2)
    verb = rng.choice(POS_VERB)
    place = rng.choice(PLACES)
    subject = rng.choice(SUBJECTS)
    topic = rng.choice(TOPICS)
    styles = [
        (f"{place} {verb} {adj} {noun}",
         f"{subject} {verb} a {adj} {noun} for {topic}, hailing the "
         f"{noun2} as {adj2} news for families across {place}."),
        (f"{topic.capitalize()} sees {adj} {noun}",
         f"A {adj} {noun} in {topic} brought {noun2} to {place}, and "
         f"{subject.lower()} said the outlook is {adj2}."),
        (f"'{adj.capitalize()}': {noun} celebrated in {place}",
         f"Crowds gathered to celebrate a {adj} {noun} in {place}. "
         f"{subject} praised the {adj2} {noun2} behind the effort."),
        (f"{subject} hails {adj} {place} {noun}",
         f"The {noun} marks {adj} progress on {topic}, with {noun2} "
         f"described as {adj2} by {subject.lower()} in {place}."),
    ]
    return rng.choice(styles)


def neutral_item(rng: random.Random) -> tuple[str, str]:
    adj, adj2 = rng.sample(NEUTRAL_ADJ, 2)
    noun, noun2 = rng.sample(NEUTRAL_NOUN, 2)
    verb = rng.choice(NEUTRAL_VERB)
    place = rng.choice(PLACES)
    subject = rng.choice(SUBJECTS)
    topic = rng.choice(TOPICS)
    styles = [
        (f"{subject} {verb} {adj} {noun} on {topic}",
         f"{subject} {verb} a {adj} {noun} setting out next steps on "
         f"{topic}, with a {adj2} {noun2} expected in {place} later this "
         f"year."),
        (f"{adj.capitalize()} {noun} for {place} {topic}",
         f"A {adj} {noun} covering {topic} was presented in {place}. The "
         f"{noun2} includes {adj2} timetables for consultation with "
         f"residents."),
        (f"{place} {noun} {verb} {topic} changes",
         f"The {adj} {noun} on {topic} {verb} a series of {adj2} measures, "
         f"{subject.lower()} confirmed during a meeting in {place}."),
    ]
    return rng.choice(styles)


def mixed_item(rng: random.Random) -> tuple[str, str]:
    pos_adj = rng.choice(POS_ADJ)
    pos_noun = rng.choice(POS_NOUN)
    neg_adj = rng.choice(NEG_ADJ)
    neg_noun = rng.choice(NEG_NOUN)
    place = rng.choice(PLACES)
    subject = rng.choice(SUBJECTS)
    topic = rng.choice(TOPICS)
    styles = [
        (f"{place} {neg_noun}: {subject.lower()} sees {pos_noun} ahead",
         f"Despite the {neg_adj} {neg_noun} affecting {topic}, {subject.lower()} "
         f"pointed to a {pos_adj} {pos_noun} and said conditions in {place} "
         f"are improving."),
        (f"{pos_noun.capitalize()} hopes amid {neg_adj} {neg_noun}",
         f"{subject} reported a {pos_adj} {pos_noun} on {topic}, though the "
         f"{neg_noun} in {place} remains {neg_adj} for many households."),
    ]
    return rng.choice(styles)


def decorate(rng: random.Random, title: str, desc: str, mood: str) -> tuple[str, str]:
    """Occasional intensity cues: boosters, negation, caps, exclamations."""
    roll = rng.random()
    if mood in ("positive", "negative"):
        bank = POS_ADJ if mood == "positive" else NEG_ADJ
        if roll < 0.08:
            words = desc.split()
            for i, w in enumerate(words):
                if w.rstrip(".,") in bank:
                    words[i] = f"{rng.choice(['very', 'really', 'extremely'])} {w}"
                    break
            desc = " ".join(words)
        elif roll < 0.12:
            words = desc.split()
            for i, w in enumerate(words):
                if w.rstrip(".,") in bank:
                    words[i] = w.rstrip(".,").upper() + w[len(w.rstrip('.,')):]
                    break
            desc = " ".join(words)
        elif roll < 0.15 and mood == "positive":
            desc = desc.rstrip(".") + "!"
    elif mood == "neutral" and roll < 0.06:
        # A negated sentiment word keeps the overall tone mild.
        desc += f" Officials said the outcome was not {rng.choice(POS_ADJ)}."
    return title, desc


def main() -> None:
    check_vocab()
    rng = random.Random(SEED)
    moods = list(WEIGHTS)
    weights = [WEIGHTS[m] for m in moods]
    makers = {"negative": negative_item, "positive": positive_item,
              "neutral": neutral_item, "mixed": mixed_item}

    rows = []
    for i in range(N_ARTICLES):
        mood = rng.choices(moods, weights=weights, k=1)[0]
        title, desc = makers[mood](rng)
        title, desc = decorate(rng, title, desc, mood)
        category = rng.choice(CATEGORIES)
        article_no = 60000000 + i * 37 + rng.randrange(30)
        guid = f"https://www.bbc.co.uk/news/{category}-{article_no}"
        rows.append([title, pub_date(rng, i), guid,
                     f"{guid}?at_medium=RSS", desc])
        if i in (137, 422, 761):  # blank descriptions exercise the skip path
            rows.append([f"{rng.choice(PLACES)} live updates",
                         pub_date(rng, i), guid + "-live",
                         f"{guid}-live?at_medium=RSS", ""])

    with OUT.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["title", "pubDate", "guid", "link", "description"])
        writer.writerows(rows)
    print(f"wrote {OUT}: {len(rows)} rows")


if __name__ == "__main__":
    main()
