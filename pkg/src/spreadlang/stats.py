"""Significance and correlation statistics used by the evaluation and
echo-chamber analyses.

Implemented directly from the textbook formulas; only the Student-t CDF
is delegated to ``scipy.special.stdtr``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np
from scipy.special import stdtr

__all__ = ["TestReport", "welch_t_test", "spearman_rho", "mean_std"]


@dataclass(frozen=True)
class TestReport:
    """Result of a two-sided significance test."""

    statistic: float
    df: float | None
    p_value: float


class DegenerateSampleError(ValueError):
    pass


def mean_std(sample) -> tuple[float, float]:
    """Mean and sample standard deviation (n-1 denominator, 0 when n=1)."""
    x = np.asarray(sample, dtype=np.float64)
    if x.size == 0:
        raise ValueError("empty sample")
    mean = float(x.mean())
    if x.size == 1:
        return mean, 0.0
    return mean, float(math.sqrt(((x - mean) ** 2).sum() / (x.size - 1)))


def welch_t_test(a, b) -> TestReport:
    """Unpaired Welch's t test (unequal variances), two-sided.

    Degrees of freedom follow Welch-Satterthwaite; the p-value comes from
    the Student-t CDF. Raises ``DegenerateSampleError`` if either sample
    has fewer than two values or both have zero variance.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    na, nb = a.size, b.size
    if na < 2 or nb < 2:
        raise DegenerateSampleError("need at least two values per sample")
    va = a.var(ddof=1)
    vb = b.var(ddof=1)
    if va == 0.0 and vb == 0.0:
        raise DegenerateSampleError("both samples have zero variance")
    sa, sb = va / na, vb / nb
    t = (a.mean() - b.mean()) / math.sqrt(sa + sb)
    df = (sa + sb) ** 2 / (sa**2 / (na - 1) + sb**2 / (nb - 1))
    p = 2.0 * float(stdtr(df, -abs(t)))
    return TestReport(statistic=float(t), df=float(df), p_value=p)


def _ranks(x: np.ndarray) -> np.ndarray:
    """Ranks starting at 1, ties resolved as average ranks."""
    order = np.argsort(x, kind="stable")
    ranks = np.empty(x.size, dtype=np.float64)
    i = 0
    while i < x.size:
        j = i
        while j + 1 < x.size and x[order[j + 1]] == x[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def _pearson(x: np.ndarray, y: np.ndarray) -> float:
    xc = x - x.mean()
    yc = y - y.mean()
    denom = math.sqrt(float(xc @ xc) * float(yc @ yc))
    return float(xc @ yc) / denom


# Exhaustive permutation testing is exact but factorial; beyond this many
# observations we switch to the t approximation.
_EXACT_PERM_MAX_N = 8


def spearman_rho(x, y) -> TestReport:
    """Spearman rank correlation with a two-sided p-value.

    rho is the Pearson correlation of the (average-tie) ranks. For n <= 8
    the p-value enumerates all rank permutations exactly; for larger n it
    uses the usual t approximation with n-2 degrees of freedom.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = x.size
    if n != y.size:
        raise ValueError("samples must have equal length")
    if n < 3:
        raise ValueError("need at least 3 observations")
    rx = _ranks(x)
    ry = _ranks(y)
    if np.all(rx == rx[0]) or np.all(ry == ry[0]):
        raise DegenerateSampleError("zero rank variance")
    rho = _pearson(rx, ry)

    if n <= _EXACT_PERM_MAX_N:
        perms = np.array(list(permutations(ry)), dtype=np.float64)
        xc = rx - rx.mean()
        pc = perms - perms.mean(axis=1, keepdims=True)
        denom = np.sqrt((xc @ xc) * (pc * pc).sum(axis=1))
        rhos = (pc @ xc) / denom
        # slack absorbs reduction-order rounding when counting equal-rho perms
        count = int(np.sum(np.abs(rhos) >= abs(rho) - 1e-12))
        p = count / len(perms)
    else:
        if abs(rho) >= 1.0:
            p = 0.0
        else:
            t = rho * math.sqrt((n - 2) / (1.0 - rho * rho))
            p = 2.0 * float(stdtr(n - 2, -abs(t)))
    return TestReport(statistic=rho, df=float(n - 2), p_value=min(p, 1.0))
