"""Association pipeline: per-bigram 2x2 tables, all tests, ranked output."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import asymptotic
from .corpus import BigramCounts
from .errors import DegenerateTableError, NoObservationsError, UndefinedStatisticError
from .exact import fisher_exact
from .tables import ContingencyTable2x2, expected_counts

RANK_KEYS = ("exact", "g2", "x2", "t")


@dataclass
class AssociationRecord:
    """One row of a ranked association scan (the varying word against the fixed one)."""

    word: str
    n11: int
    m11: float
    exact_left_p: float
    exact_right_p: float
    exact_two_p: float
    point_p: float
    g2_p: float | None = None
    x2_p: float | None = None
    t_p: float | None = None
    asym_note: str | None = None  # why the chi-square tests are absent
    t_note: str | None = None  # why the t-test is absent
    exact_rank: int | None = None
    g2_rank: int | None = None
    x2_rank: int | None = None
    t_rank: int | None = None

    def p_for(self, key: str) -> float | None:
        # Ranking uses the two-sided exact value (the convention the ranked
        # reference output follows); left/right remain available per record.
        return {"exact": self.exact_two_p, "g2": self.g2_p,
                "x2": self.x2_p, "t": self.t_p}[key]


def bigram_table(counts: BigramCounts, w1: str, w2: str) -> ContingencyTable2x2:
    """The 2x2 table classifying every bigram position by presence of w1 first
    and w2 second. A word absent from its position yields a zero marginal, not
    an error; tests decide for themselves whether they can handle it."""
    if counts.total_bigrams < 1:
        raise NoObservationsError("no bigrams counted")
    n11 = counts.pair_counts.get((w1, w2), 0)
    n12 = counts.first_counts.get(w1, 0) - n11
    n21 = counts.second_counts.get(w2, 0) - n11
    n22 = counts.total_bigrams - n11 - n12 - n21
    return ContingencyTable2x2(n11, n12, n21, n22)


def _score(counts: BigramCounts, word: str, table: ContingencyTable2x2) -> AssociationRecord:
    fisher = fisher_exact(table)
    record = AssociationRecord(
        word=word,
        n11=table.n11,
        m11=expected_counts(table).m11,
        exact_left_p=fisher.left_p,
        exact_right_p=fisher.right_p,
        exact_two_p=fisher.two_sided_p,
        point_p=fisher.point_p,
    )
    try:
        record.g2_p = asymptotic.likelihood_g2(table).p_value
        record.x2_p = asymptotic.pearson_x2(table).p_value
    except DegenerateTableError as exc:
        record.asym_note = str(exc)
    try:
        record.t_p = asymptotic.t_test(table).p_value
    except UndefinedStatisticError as exc:
        record.t_note = str(exc)
    return record


def rank_records(
    records: list[AssociationRecord], key: str
) -> tuple[list[AssociationRecord], list[AssociationRecord]]:
    """Assign ranks for one test: rank 1 is the largest unrounded p-value (most
    independent), rank N the smallest. Ties break lexicographically by word.
    Records without a defined p-value for the key are excluded and returned
    separately."""
    if key not in RANK_KEYS:
        raise ValueError(f"unknown rank key {key!r}")
    included = [r for r in records if r.p_for(key) is not None]
    excluded = [r for r in records if r.p_for(key) is None]
    included.sort(key=lambda r: (-r.p_for(key), r.word))
    for rank, record in enumerate(included, start=1):
        setattr(record, f"{key}_rank", rank)
    return included, excluded


def association_scan(
    counts: BigramCounts,
    fixed_second: str | None = None,
    fixed_first: str | None = None,
    min_count: int = 1,
) -> list[AssociationRecord]:
    """Score every partner of the fixed word and rank by all four tests.

    Exactly one of fixed_second / fixed_first selects the fixed slot; the
    record's word is the varying slot. Results are ordered by exact-test rank.
    """
    if (fixed_second is None) == (fixed_first is None):
        raise ValueError("exactly one of fixed_second or fixed_first is required")

    if fixed_second is not None:
        if counts.second_counts.get(fixed_second, 0) < 1:
            raise NoObservationsError(
                f"no observations: {fixed_second!r} never occurs in second position"
            )
        partners = {
            (w1, c) for (w1, w2), c in counts.pair_counts.items() if w2 == fixed_second
        }
        tables = {w: bigram_table(counts, w, fixed_second) for w, c in partners if c >= min_count}
    else:
        if counts.first_counts.get(fixed_first, 0) < 1:
            raise NoObservationsError(
                f"no observations: {fixed_first!r} never occurs in first position"
            )
        partners = {
            (w2, c) for (w1, w2), c in counts.pair_counts.items() if w1 == fixed_first
        }
        tables = {w: bigram_table(counts, fixed_first, w) for w, c in partners if c >= min_count}

    # Deterministic base order regardless of counting/iteration order.
    records = [_score(counts, w, tables[w]) for w in sorted(tables)]
    for key in RANK_KEYS:
        rank_records(records, key)
    records.sort(key=lambda r: (r.exact_rank is None, r.exact_rank, r.word))
    return records
