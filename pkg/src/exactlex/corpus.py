"""Text ingestion: tokenization, word/bigram counting, and frequency-of-frequency summaries."""

from __future__ import annotations

import sys
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .errors import IngestionError


@dataclass(frozen=True)
class TokenizerConfig:
    lowercase: bool = True
    strip_punctuation: bool = True
    sentence_reset: bool = False  # when set, bigrams do not span newlines


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def tokenize(text: str, config: TokenizerConfig = TokenizerConfig()) -> list[str]:
    """Split text into maximal non-whitespace runs, optionally lowercased and
    stripped of leading/trailing punctuation. Empty tokens are dropped."""
    tokens = []
    for raw in text.split():
        token = raw
        if config.strip_punctuation:
            start, end = 0, len(token)
            while start < end and _is_punct(token[start]):
                start += 1
            while end > start and _is_punct(token[end - 1]):
                end -= 1
            token = token[start:end]
        if config.lowercase:
            token = token.lower()
        if token:
            tokens.append(token)
    return tokens


@dataclass
class BigramCounts:
    """Adjacent-pair counts plus positional word marginals.

    For a pair (w1, w2): pair_counts[(w1, w2)] is the joint count n11,
    first_counts[w1] the count of w1 in first position (the row marginal) and
    second_counts[w2] the count of w2 in second position (the column marginal).
    total_bigrams is the number of adjacent positions, the scan's sample size.
    """

    pair_counts: Counter = field(default_factory=Counter)
    first_counts: Counter = field(default_factory=Counter)
    second_counts: Counter = field(default_factory=Counter)
    total_bigrams: int = 0

    def add_pair(self, w1: str, w2: str, count: int = 1) -> None:
        self.pair_counts[(w1, w2)] += count
        self.first_counts[w1] += count
        self.second_counts[w2] += count
        self.total_bigrams += count

    def merge(self, other: "BigramCounts", boundary: tuple[str, str] | None = None) -> "BigramCounts":
        """Combine two shard counts; `boundary` is the bigram spanning the shard
        seam (last token of this shard, first token of the other), which plain
        concatenation would have counted but independent shards cannot see."""
        merged = BigramCounts(
            pair_counts=self.pair_counts + other.pair_counts,
            first_counts=self.first_counts + other.first_counts,
            second_counts=self.second_counts + other.second_counts,
            total_bigrams=self.total_bigrams + other.total_bigrams,
        )
        if boundary is not None:
            merged.add_pair(*boundary)
        return merged


@dataclass(frozen=True)
class CorpusSummary:
    token_count: int
    distinct_words: int
    distinct_bigrams: int
    word_freq_of_freq: dict[int, int]
    bigram_freq_of_freq: dict[int, int]
    hapax_word_pct: float
    word_le5_pct: float
    hapax_bigram_pct: float
    bigram_le5_pct: float


def count_bigrams(tokens: list[str]) -> BigramCounts:
    """Count every adjacent token pair; fewer than two tokens give empty counts."""
    counts = BigramCounts()
    for w1, w2 in zip(tokens, tokens[1:]):
        counts.add_pair(w1, w2)
    return counts


def count_text(text: str, config: TokenizerConfig = TokenizerConfig()) -> tuple[Counter, BigramCounts]:
    """Tokenize and count a whole text; returns (word counts, bigram counts).

    With sentence_reset, each line is counted as its own shard and no bigram
    spans a newline.
    """
    words: Counter = Counter()
    bigrams = BigramCounts()
    units = text.splitlines() if config.sentence_reset else [text]
    for unit in units:
        tokens = tokenize(unit, config)
        words.update(tokens)
        for w1, w2 in zip(tokens, tokens[1:]):
            bigrams.add_pair(w1, w2)
    return words, bigrams


def read_text(path: str | Path) -> str:
    """Read a UTF-8 text file (or '-' for stdin); decode failures name the byte offset."""
    if str(path) == "-":
        data = sys.stdin.buffer.read()
    else:
        data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IngestionError(
            f"invalid UTF-8 in {path} at byte offset {exc.start}"
        ) from exc


def _freq_of_freq(counts: Counter) -> dict[int, int]:
    histogram: Counter = Counter(counts.values())
    return dict(sorted(histogram.items()))


def _pct_at_most(fof: dict[int, int], limit: int, distinct: int) -> float:
    if distinct == 0:
        return 0.0
    return 100.0 * sum(v for f, v in fof.items() if f <= limit) / distinct


def zipf_summary(bigrams: BigramCounts, word_counts: Counter) -> CorpusSummary:
    """Frequency-of-frequency histograms and the hapax / five-or-fewer percentages."""
    word_fof = _freq_of_freq(word_counts)
    bigram_fof = _freq_of_freq(bigrams.pair_counts)
    distinct_words = len(word_counts)
    distinct_bigrams = len(bigrams.pair_counts)
    return CorpusSummary(
        token_count=sum(word_counts.values()),
        distinct_words=distinct_words,
        distinct_bigrams=distinct_bigrams,
        word_freq_of_freq=word_fof,
        bigram_freq_of_freq=bigram_fof,
        hapax_word_pct=_pct_at_most(word_fof, 1, distinct_words),
        word_le5_pct=_pct_at_most(word_fof, 5, distinct_words),
        hapax_bigram_pct=_pct_at_most(bigram_fof, 1, distinct_bigrams),
        bigram_le5_pct=_pct_at_most(bigram_fof, 5, distinct_bigrams),
    )
