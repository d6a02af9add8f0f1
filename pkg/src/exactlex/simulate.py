"""Multinomial table sampling and Monte Carlo calibration of the tests.

Samples 2x2 tables under a fixed-total multinomial plan and tabulates how
often each test rejects at the requested significance levels. Under a true
independence model this exposes how far each test's null rejection rate
drifts from its nominal level on skewed data; the exact test stays at or
below it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import asymptotic
from .errors import DegenerateTableError, UndefinedStatisticError
from .exact import FisherResult, fisher_from_dist, hypergeom_distribution
from .tables import ContingencyTable2x2

RNG_ALGORITHM = "numpy-pcg64"

TEST_NAMES = ("fisher_left", "fisher_right", "fisher_two", "x2", "g2", "t")


@dataclass(frozen=True)
class MultinomialModel:
    """Cell probabilities of the sampling population."""

    p11: float
    p12: float
    p21: float
    p22: float

    def __post_init__(self) -> None:
        probs = (self.p11, self.p12, self.p21, self.p22)
        if any(p < 0 or p > 1 for p in probs):
            raise ValueError(f"cell probabilities must be in [0, 1]: {probs}")
        if abs(sum(probs) - 1.0) > 1e-12:
            raise ValueError(f"cell probabilities must sum to 1: {probs}")

    @classmethod
    def independent(cls, p_row: float, p_col: float) -> "MultinomialModel":
        """Model with p_ij = p_i * p_j (the independence null)."""
        return cls(
            p11=p_row * p_col,
            p12=p_row * (1.0 - p_col),
            p21=(1.0 - p_row) * p_col,
            p22=(1.0 - p_row) * (1.0 - p_col),
        )

    @property
    def probs(self) -> tuple[float, float, float, float]:
        return (self.p11, self.p12, self.p21, self.p22)


@dataclass
class TestTally:
    valid_trials: int = 0
    rejections: dict[float, int] = field(default_factory=dict)
    p_sum: float = 0.0

    def record(self, p: float, alphas: tuple[float, ...]) -> None:
        self.valid_trials += 1
        self.p_sum += p
        for alpha in alphas:
            if p <= alpha:
                self.rejections[alpha] = self.rejections.get(alpha, 0) + 1

    def rejection_rate(self, alpha: float) -> float:
        if self.valid_trials == 0:
            return 0.0
        return self.rejections.get(alpha, 0) / self.valid_trials

    def mean_p(self) -> float:
        return self.p_sum / self.valid_trials if self.valid_trials else math.nan


@dataclass
class CalibrationReport:
    trials: int
    n_total: int
    model: MultinomialModel
    alphas: tuple[float, ...]
    seed: int
    rng_algorithm: str
    tallies: dict[str, TestTally]
    degenerate_trials: int

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "n_total": self.n_total,
            "model": {"p11": self.model.p11, "p12": self.model.p12,
                      "p21": self.model.p21, "p22": self.model.p22},
            "alphas": list(self.alphas),
            "seed": self.seed,
            "rng_algorithm": self.rng_algorithm,
            "degenerate_trials": self.degenerate_trials,
            "tests": {
                name: {
                    "valid_trials": tally.valid_trials,
                    "mean_p": tally.mean_p(),
                    "rejection_rates": {str(a): tally.rejection_rate(a) for a in self.alphas},
                }
                for name, tally in self.tallies.items()
            },
        }


def sample_table(model: MultinomialModel, n_total: int,
                 rng: np.random.Generator) -> ContingencyTable2x2:
    """One multinomial draw of a 2x2 table; counts always sum to n_total."""
    if n_total < 1:
        raise ValueError(f"sample size must be >= 1, got {n_total}")
    n11, n12, n21, n22 = (int(c) for c in rng.multinomial(n_total, model.probs))
    return ContingencyTable2x2(n11, n12, n21, n22)


def _fisher_cached(table: ContingencyTable2x2, cache: dict) -> FisherResult:
    # Under a fixed model the sampled marginals repeat heavily; reuse the
    # enumerated distribution per (row1, col1) pair.
    key = (table.total, table.row1, table.col1)
    dist = cache.get(key)
    if dist is None:
        dist = hypergeom_distribution(*key)
        cache[key] = dist
    return fisher_from_dist(dist, table.n11)


def calibration(
    model: MultinomialModel,
    n_total: int,
    trials: int,
    alphas: tuple[float, ...] = (0.01, 0.05, 0.10),
    seed: int = 0,
) -> CalibrationReport:
    """Sample `trials` tables and tabulate each test's rejection rate per alpha.

    Degenerate tables (a zero marginal) are never resampled: they count for
    the exact test (whose p-values are 1 there) and are excluded from the
    asymptotic tallies, per each test's own error rules.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    alphas = tuple(alphas)
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    draws = rng.multinomial(n_total, model.probs, size=trials)

    tallies = {name: TestTally() for name in TEST_NAMES}
    degenerate = 0
    dist_cache: dict = {}
    for row in draws:
        table = ContingencyTable2x2(int(row[0]), int(row[1]), int(row[2]), int(row[3]))
        fisher = _fisher_cached(table, dist_cache)
        tallies["fisher_left"].record(fisher.left_p, alphas)
        tallies["fisher_right"].record(fisher.right_p, alphas)
        tallies["fisher_two"].record(fisher.two_sided_p, alphas)
        try:
            tallies["x2"].record(asymptotic.pearson_x2(table).p_value, alphas)
            tallies["g2"].record(asymptotic.likelihood_g2(table).p_value, alphas)
        except DegenerateTableError:
            degenerate += 1
        try:
            tallies["t"].record(asymptotic.t_test(table).p_value, alphas)
        except UndefinedStatisticError:
            pass
    return CalibrationReport(
        trials=trials,
        n_total=n_total,
        model=model,
        alphas=alphas,
        seed=seed,
        rng_algorithm=RNG_ALGORITHM,
        tallies=tallies,
        degenerate_trials=degenerate,
    )
