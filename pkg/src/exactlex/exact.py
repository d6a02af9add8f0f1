"""Hypergeometric enumeration and Fisher's exact test for 2x2 tables.

With all marginals fixed, n11 determines the whole table, so the exact test
reduces to enumerating the hypergeometric distribution of n11 over its
feasible range. Probabilities are carried in log space: the log-pmf is built
by the exact ratio recurrence outward from the mode and then normalized with
a log-sum-exp, so no factorial ever overflows and extreme tails never
underflow, even at sample sizes of 10^9.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleMarginalsError
from .tables import ContingencyTable2x2

# Relative slack when deciding whether pmf(k) <= pmf(observed) in the
# two-sided tally; keeps exactly-tied mirror tables in deterministically.
TWO_SIDED_TIE_REL_TOL = 1e-7


@dataclass(frozen=True)
class HypergeomDist:
    """Distribution of n11 over all 2x2 tables with the given fixed marginals."""

    n_total: int
    row1_total: int
    col1_total: int
    support_lo: int
    support_hi: int
    log_pmf: np.ndarray  # indexed by n11 - support_lo

    @property
    def support(self) -> range:
        return range(self.support_lo, self.support_hi + 1)

    def log_pmf_at(self, n11: int) -> float:
        if not self.support_lo <= n11 <= self.support_hi:
            return -math.inf
        return float(self.log_pmf[n11 - self.support_lo])

    def pmf_at(self, n11: int) -> float:
        return math.exp(self.log_pmf_at(n11))

    def pmf(self) -> np.ndarray:
        return np.exp(self.log_pmf)


@dataclass(frozen=True)
class FisherResult:
    """Left-, right-, and two-sided exact p-values plus the observed table's probability."""

    left_p: float
    right_p: float
    two_sided_p: float
    point_p: float


def hypergeom_distribution(n_total: int, row1_total: int, col1_total: int) -> HypergeomDist:
    """Enumerate the full log-pmf of n11 under fixed marginals.

    Cost is O(support size) = O(min(row1_total, col1_total) - support_lo).
    """
    if n_total < 1:
        raise InfeasibleMarginalsError(f"sample size must be >= 1, got {n_total}")
    if not 0 <= row1_total <= n_total or not 0 <= col1_total <= n_total:
        raise InfeasibleMarginalsError(
            f"infeasible marginals: row1={row1_total}, col1={col1_total}, total={n_total}"
        )

    lo = max(0, row1_total + col1_total - n_total)
    hi = min(row1_total, col1_total)
    size = hi - lo + 1
    if size == 1:
        return HypergeomDist(n_total, row1_total, col1_total, lo, hi, np.zeros(1))

    # Step ratio pmf(k+1)/pmf(k) = (row1-k)(col1-k) / ((k+1)(n-row1-col1+k+1)),
    # exact in small integers; its log is accurate to a few ulps per step.
    k = np.arange(lo, hi, dtype=np.float64)
    log_ratio = (
        np.log(row1_total - k)
        + np.log(col1_total - k)
        - np.log(k + 1.0)
        - np.log(n_total - row1_total - col1_total + k + 1.0)
    )

    mode = min(hi, max(lo, (row1_total + 1) * (col1_total + 1) // (n_total + 2)))
    mi = mode - lo
    unnorm = np.empty(size)
    unnorm[mi] = 0.0
    if mi < size - 1:
        unnorm[mi + 1 :] = np.cumsum(log_ratio[mi:])
    if mi > 0:
        unnorm[:mi] = -np.cumsum(log_ratio[:mi][::-1])[::-1]

    # Normalize so the pmf sums to 1 to machine precision regardless of any
    # drift in the base point; lgamma accuracy never enters the pmf.
    peak = unnorm.max()
    log_norm = peak + math.log(math.fsum(np.exp(unnorm - peak)))
    return HypergeomDist(n_total, row1_total, col1_total, lo, hi, unnorm - log_norm)


def fisher_from_dist(dist: HypergeomDist, n11: int) -> FisherResult:
    """Tail sums of an already-enumerated distribution at the observed n11."""
    idx = n11 - dist.support_lo
    pmf = dist.pmf()
    point = float(pmf[idx])
    left = min(1.0, math.fsum(pmf[: idx + 1]))
    right = min(1.0, math.fsum(pmf[idx:]))
    cutoff = dist.log_pmf[idx] + math.log1p(TWO_SIDED_TIE_REL_TOL)
    two = min(1.0, math.fsum(pmf[dist.log_pmf <= cutoff]))
    return FisherResult(left_p=left, right_p=right, two_sided_p=two, point_p=point)


def fisher_exact(table: ContingencyTable2x2) -> FisherResult:
    """Fisher's exact test: tail sums of the hypergeometric distribution of n11.

    A zero marginal forces a single feasible table, which is certain under the
    null; all four probabilities are then 1.
    """
    dist = hypergeom_distribution(table.total, table.row1, table.col1)
    return fisher_from_dist(dist, table.n11)
