"""Find dependent word pairs in a synthetic corpus and compare test rankings.

Builds a Zipf-distributed random corpus, plants a few genuinely collocated
pairs in it, then scans for partners of a fixed second word and prints the
ranked comparison table. The planted pairs should surface at the dependent
end under every test; where the tests disagree is where the large-sample
approximations are strained.
"""

import numpy as np

from exactlex import association_scan, count_bigrams, zipf_summary
from collections import Counter

rng = np.random.default_rng(42)

vocab = 5000
ranks = np.arange(1, vocab + 1)
probs = (1.0 / ranks) / (1.0 / ranks).sum()
tokens = [f"w{i}" for i in rng.choice(vocab, size=200_000, p=probs)]

# scatter plain "tea" occurrences, then plant real collocations on top:
# "strong tea", "black tea", and a rare "herbal tea"
for pos in rng.integers(0, len(tokens), size=300):
    tokens[int(pos)] = "tea"
for count, first in ((60, "strong"), (25, "black"), (4, "herbal")):
    for _ in range(count):
        pos = int(rng.integers(0, len(tokens) - 1))
        tokens[pos:pos + 2] = [first, "tea"]

words = Counter(tokens)
bigrams = count_bigrams(tokens)

summary = zipf_summary(bigrams, words)
print(f"corpus: {summary.token_count} tokens, {summary.distinct_words} word types, "
      f"{summary.distinct_bigrams} bigram types")
print(f"hapax words: {summary.hapax_word_pct:.0f}%   "
      f"words occurring <= 5 times: {summary.word_le5_pct:.0f}%")
print(f"hapax bigrams: {summary.hapax_bigram_pct:.0f}%   "
      f"bigrams occurring <= 5 times: {summary.bigram_le5_pct:.0f}%\n")

records = association_scan(bigrams, fixed_second="tea", min_count=1)
print(f"{'word':<12}{'n11':>5}{'m11':>8}{'exact':>9}{'rk':>4}"
      f"{'G2 p':>9}{'rk':>4}{'X2 p':>9}{'rk':>4}{'t p':>9}{'rk':>4}")
for r in records[-12:] + records[:3]:
    def cell(p):
        return f"{p:9.4f}" if p is not None else f"{'--':>9}"

    def rk(k):
        return f"{k:4d}" if k is not None else f"{'--':>4}"

    print(f"{r.word:<12}{r.n11:>5}{r.m11:>8.2f}{cell(r.exact_two_p)}{rk(r.exact_rank)}"
          f"{cell(r.g2_p)}{rk(r.g2_rank)}{cell(r.x2_p)}{rk(r.x2_rank)}"
          f"{cell(r.t_p)}{rk(r.t_rank)}")
print("\n(highest ranks = most dependent; planted pairs should sit at the bottom)")
