from collections import Counter

import numpy as np
import pytest

from exactlex import (
    NoObservationsError,
    association_scan,
    bigram_table,
    count_bigrams,
    fisher_exact,
    rank_records,
)
from exactlex.assoc import RANK_KEYS, AssociationRecord
from exactlex.corpus import BigramCounts


def oil_industry_counts() -> BigramCounts:
    counts = BigramCounts()
    counts.add_pair("oil", "industry", 17)
    counts.add_pair("oil", "prices", 229)
    counts.add_pair("steel", "industry", 935)
    counts.add_pair("steel", "prices", 1381647)
    return counts


def test_oil_industry_table_construction():
    t = bigram_table(oil_industry_counts(), "oil", "industry")
    assert t.cells == (17, 229, 935, 1381647)
    assert t.row1 == 246
    assert t.col1 == 952


def test_perfectly_collocated_pair():
    counts = BigramCounts()
    counts.add_pair("status", "quo", 5)
    counts.add_pair("x", "y", 20)
    t = bigram_table(counts, "status", "quo")
    assert t.n12 == 0 and t.n21 == 0
    assert t.n11 == 5


def test_absent_pair_keeps_marginals():
    counts = oil_industry_counts()
    t = bigram_table(counts, "oil", "prices")
    assert t.n11 == 229
    t = bigram_table(counts, "steel", "industry")
    assert t.cells == (935, 1381647, 17, 229)
    # both words present but never adjacent
    counts.add_pair("a", "b", 1)
    counts.add_pair("c", "d", 1)
    t = bigram_table(counts, "a", "d")
    assert t.n11 == 0
    assert t.row1 == counts.first_counts["a"]
    assert t.col1 == counts.second_counts["d"]


def test_absent_word_gives_zero_marginal_not_error():
    t = bigram_table(oil_industry_counts(), "nonexistent", "industry")
    assert t.row1 == 0
    assert t.col1 == 952


def test_scan_synthetic_corpus():
    tokens = "big cat big cat big dog".split()
    counts = count_bigrams(tokens)
    records = association_scan(counts, fixed_second="cat")
    assert [r.word for r in records] == ["big"]
    assert records[0].n11 == 2
    # 5 bigram positions; "big" first 3 times, "cat" second twice
    assert records[0].m11 == pytest.approx(3 * 2 / 5)


def test_scan_requires_exactly_one_fixed_slot():
    counts = count_bigrams(["a", "b"])
    with pytest.raises(ValueError):
        association_scan(counts)
    with pytest.raises(ValueError):
        association_scan(counts, fixed_second="b", fixed_first="a")


def test_scan_unknown_word_errors():
    counts = count_bigrams("a b c".split())
    with pytest.raises(NoObservationsError):
        association_scan(counts, fixed_second="zebra")
    with pytest.raises(NoObservationsError):
        association_scan(counts, fixed_first="zebra")


def test_scan_fixed_first_mode():
    tokens = "oil price oil price oil shock gas price".split()
    records = association_scan(count_bigrams(tokens), fixed_first="oil")
    assert {r.word for r in records} == {"price", "shock"}


def test_rank_semantics():
    def rec(word, p):
        return AssociationRecord(
            word=word, n11=1, m11=0.5, exact_left_p=1.0, exact_right_p=p,
            exact_two_p=p, point_p=p,
        )

    records = [rec("a", 0.9), rec("b", 0.1), rec("c", 0.5)]
    ranked, excluded = rank_records(records, "exact")
    assert not excluded
    assert {(r.word, r.exact_rank) for r in ranked} == {("a", 1), ("c", 2), ("b", 3)}


def test_rank_ties_break_lexicographically():
    def rec(word):
        return AssociationRecord(
            word=word, n11=1, m11=0.5, exact_left_p=1.0, exact_right_p=0.3,
            exact_two_p=0.3, point_p=0.3,
        )

    ranked, _ = rank_records([rec("delta"), rec("alpha"), rec("beta")], "exact")
    assert [(r.word, r.exact_rank) for r in ranked] == [
        ("alpha", 1), ("beta", 2), ("delta", 3)
    ]


def test_rank_excludes_undefined():
    defined = AssociationRecord(word="a", n11=1, m11=0.5, exact_left_p=1.0,
                                exact_right_p=0.2, exact_two_p=0.2, point_p=0.2,
                                g2_p=0.4)
    undefined = AssociationRecord(word="b", n11=1, m11=0.5, exact_left_p=1.0,
                                  exact_right_p=0.1, exact_two_p=0.1, point_p=0.1,
                                  g2_p=None, asym_note="degenerate")
    ranked, excluded = rank_records([defined, undefined], "g2")
    assert [r.word for r in ranked] == ["a"]
    assert [r.word for r in excluded] == ["b"]
    assert undefined.g2_rank is None


def random_counts(rng, vocab=30, n_tokens=400) -> BigramCounts:
    tokens = [f"w{i}" for i in rng.integers(0, vocab, size=n_tokens)]
    return count_bigrams(tokens)


def test_scan_invariants_on_random_corpora():
    rng = np.random.default_rng(21)
    for trial in range(20):
        counts = random_counts(rng)
        fixed = max(counts.second_counts, key=counts.second_counts.get)
        records = association_scan(counts, fixed_second=fixed)
        # every co-occurring first word appears exactly once
        assert sum(r.n11 for r in records) == counts.second_counts[fixed]
        # ranks are a permutation of 1..N per defined key
        for key in RANK_KEYS:
            ranks = [getattr(r, f"{key}_rank") for r in records
                     if getattr(r, f"{key}_rank") is not None]
            assert sorted(ranks) == list(range(1, len(ranks) + 1))
        # rebuilding the table from the record's word is idempotent
        for r in records[:5]:
            t = bigram_table(counts, r.word, fixed)
            assert t.n11 == r.n11
            assert t.total == counts.total_bigrams


def test_overrepresented_pairs_show_in_upper_tail():
    rng = np.random.default_rng(33)
    for _ in range(10):
        counts = random_counts(rng, vocab=15, n_tokens=300)
        fixed = max(counts.second_counts, key=counts.second_counts.get)
        for r in association_scan(counts, fixed_second=fixed):
            if r.n11 > r.m11:
                assert r.exact_right_p < r.exact_left_p


def test_scan_order_is_deterministic():
    counts = random_counts(np.random.default_rng(5))
    fixed = max(counts.second_counts, key=counts.second_counts.get)
    first = association_scan(counts, fixed_second=fixed)
    second = association_scan(counts, fixed_second=fixed)
    assert [(r.word, r.exact_rank) for r in first] == [(r.word, r.exact_rank) for r in second]
    # output ordered by exact rank
    ranks = [r.exact_rank for r in first]
    assert ranks == sorted(ranks)
