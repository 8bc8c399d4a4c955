"""News corpus loading, tokenization, and preprocessing.

The input format is a UTF-8 CSV in feed-export style: a header row with at
least title, pubDate, guid, link and description columns (any order, extras
ignored). The description field is what gets sentiment-scored downstream, so
rows with an empty description are skipped and counted rather than erroring.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from pathlib import Path

from ._data import parse_table, read_data_file

REQUIRED_COLUMNS = ("title", "pubDate", "guid", "link", "description")

# Maximal runs of letters/digits, with apostrophes kept when they sit between
# such runs ("don't"). Underscore and everything else separates.
_TOKEN_RE = re.compile(r"[^\W_]+(?:'[^\W_]+)*", re.UNICODE)

_SUFFIX_RULES = (("ies", "y"), ("es", ""), ("s", ""), ("ed", ""),
                 ("ing", ""), ("ly", ""))


class CorpusError(Exception):
    """Raised for unreadable or structurally invalid corpus files."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Article:
    id: int
    title: str
    pub_date: str
    guid: str
    link: str
    description: str


@dataclass(frozen=True)
class ProcessedArticle:
    """An article plus its token views.

    raw_text keeps the original description byte-for-byte (the intensity-aware
    scorer needs capitalization and punctuation). all_tokens is the full
    lowercase token sequence; tokens has stopwords removed and is what feeds
    TF-IDF and clean_text. All lexicon scorers read all_tokens so the stopword
    list can never change a sentiment score.
    """

    id: int
    raw_text: str
    clean_text: str
    tokens: tuple[str, ...]
    all_tokens: tuple[str, ...]


def tokenize(text: str) -> list[str]:
    """Lowercased maximal runs of letters/digits with internal apostrophes."""
    return _TOKEN_RE.findall(text.replace("’", "'").lower())


def light_stem(token: str) -> str:
    """Suffix-stripping fallback used on lexicon lookup misses.

    Strips a possessive "'s", then applies at most one suffix rule
    (ies->y, -es, -s, -ed, -ing, -ly) provided the stem keeps >= 3 chars.
    Stored tokens are never mutated; this only widens dictionary lookups.
    """
    if token.endswith("'s"):
        token = token[:-2]
    for suffix, replacement in _SUFFIX_RULES:
        if token.endswith(suffix):
            stem = token[: len(token) - len(suffix)] + replacement
            if len(stem) >= 3:
                return stem
    return token


def preprocess(article: Article, stopwords: frozenset[str]) -> ProcessedArticle:
    """Tokenize an article description and strip stopwords."""
    all_tokens = tuple(tokenize(article.description))
    tokens = tuple(t for t in all_tokens if t not in stopwords)
    return ProcessedArticle(
        id=article.id,
        raw_text=article.description,
        clean_text=" ".join(tokens),
        tokens=tokens,
        all_tokens=all_tokens,
    )


def load_stopwords() -> frozenset[str]:
    rows = parse_table(read_data_file("stopwords.txt"), columns=1)
    return frozenset(word for (word,) in rows)


def load_corpus(path: str | Path, encoding: str = "utf-8") -> tuple[list[Article], int]:
    """Load articles from a CSV file.

    Returns (articles, skipped) where skipped counts rows dropped for an
    empty description. Article ids are assigned by position among kept rows.
    """
    path = Path(path)
    if not path.is_file():
        raise CorpusError(f"corpus file not found: {path}")

    articles: list[Article] = []
    skipped = 0
    with path.open("r", encoding=encoding, newline="") as handle:
        reader = csv.reader(handle, strict=True)
        try:
            try:
                header = next(reader)
            except StopIteration:
                raise CorpusError("empty file: missing header row", line=1)
            missing = [c for c in REQUIRED_COLUMNS if c not in header]
            if missing:
                raise CorpusError(
                    f"missing required column(s): {', '.join(missing)}", line=1)
            index = {c: header.index(c) for c in REQUIRED_COLUMNS}
            for row in reader:
                if not row:
                    continue
                if len(row) != len(header):
                    raise CorpusError(
                        f"expected {len(header)} fields, got {len(row)} "
                        "(unbalanced quotes or stray delimiter)",
                        line=reader.line_num)
                fields = {c: row[i] for c, i in index.items()}
                if fields["description"] == "":
                    skipped += 1
                    continue
                articles.append(Article(
                    id=len(articles),
                    title=fields["title"],
                    pub_date=fields["pubDate"],
                    guid=fields["guid"],
                    link=fields["link"],
                    description=fields["description"],
                ))
        except csv.Error as exc:
            raise CorpusError(f"malformed CSV: {exc}", line=reader.line_num) from exc
    return articles, skipped


def preprocess_corpus(articles: list[Article],
                      stopwords: frozenset[str] | None = None) -> list[ProcessedArticle]:
    if stopwords is None:
        stopwords = load_stopwords()
    return [preprocess(a, stopwords) for a in articles]


def write_processed_csv(path: str | Path, articles: list[Article],
                        processed: list[ProcessedArticle]) -> None:
    """Write the corpus with clean_text and tokens columns appended."""
    with Path(path).open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["id", "title", "pubDate", "guid", "link",
                         "description", "clean_text", "tokens"])
        for article, proc in zip(articles, processed):
            writer.writerow([article.id, article.title, article.pub_date,
                             article.guid, article.link, article.description,
                             proc.clean_text, " ".join(proc.tokens)])
