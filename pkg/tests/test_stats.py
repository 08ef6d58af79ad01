import math
from itertools import permutations

import numpy as np
import pytest
from scipy.integrate import quad

from spreadlang.stats import (
    DegenerateSampleError,
    mean_std,
    spearman_rho,
    welch_t_test,
)


def t_density(x, df):
    c = math.gamma((df + 1) / 2.0) / (math.sqrt(df * math.pi) * math.gamma(df / 2.0))
    return c * (1.0 + x * x / df) ** (-(df + 1) / 2.0)


def two_sided_p_by_quadrature(t, df):
    # independent reference: integrate the t density over the upper tail
    tail, _ = quad(t_density, abs(t), np.inf, args=(df,))
    return 2.0 * tail


class TestWelch:
    def test_identical_samples_give_t_zero_p_one(self):
        r = welch_t_test([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
        assert r.statistic == 0.0
        assert r.p_value == pytest.approx(1.0)

    def test_hand_worked_example(self):
        # a={1,2,3}, b={4,5,6}: means 2 and 5, both variances 1, n=3 each
        # t = -3 / sqrt(2/3), Welch-Satterthwaite df = 4
        r = welch_t_test([1, 2, 3], [4, 5, 6])
        assert r.statistic == pytest.approx(-3.0 / math.sqrt(2.0 / 3.0), abs=1e-9)
        assert r.statistic == pytest.approx(-3.674, abs=1e-3)
        assert r.df == pytest.approx(4.0, abs=1e-9)
        assert r.p_value == pytest.approx(0.0213, abs=1e-3)
        assert r.p_value == pytest.approx(
            two_sided_p_by_quadrature(r.statistic, r.df), abs=1e-6
        )

    def test_swapping_samples_negates_t(self):
        r1 = welch_t_test([1, 2, 3], [4, 5, 6])
        r2 = welch_t_test([4, 5, 6], [1, 2, 3])
        assert r2.statistic == pytest.approx(-r1.statistic)
        assert r2.p_value == pytest.approx(r1.p_value)

    def test_p_matches_quadrature_on_random_samples(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            a = rng.normal(0.0, 1.0, size=rng.integers(2, 12))
            b = rng.normal(0.4, 2.0, size=rng.integers(2, 12))
            r = welch_t_test(a, b)
            assert r.p_value == pytest.approx(
                two_sided_p_by_quadrature(r.statistic, r.df), abs=1e-6
            )

    def test_shift_invariance(self):
        a = [1.0, 2.0, 5.0, 4.0]
        b = [0.5, 3.0, 2.0]
        r1 = welch_t_test(a, b)
        r2 = welch_t_test([v + 100.0 for v in a], [v + 100.0 for v in b])
        assert r2.statistic == pytest.approx(r1.statistic, abs=1e-9)
        assert r2.p_value == pytest.approx(r1.p_value, abs=1e-9)

    def test_degenerate_samples_rejected(self):
        with pytest.raises(DegenerateSampleError):
            welch_t_test([1.0], [1.0, 2.0])
        with pytest.raises(DegenerateSampleError):
            welch_t_test([2.0, 2.0], [5.0, 5.0])


def brute_force_spearman_p(x, y):
    """Enumerate all permutations of y; count |rho| at least as extreme.

    Uses the d^2 formula, valid for tie-free integer ranks, so it is an
    independent route from the implementation's Pearson-of-ranks.
    """
    n = len(x)
    rank = {v: i + 1 for i, v in enumerate(sorted(x))}
    rx = [rank[v] for v in x]
    rank = {v: i + 1 for i, v in enumerate(sorted(y))}
    ry = [rank[v] for v in y]

    def rho_d2(a, b):
        d2 = sum((u - v) ** 2 for u, v in zip(a, b))
        return 1.0 - 6.0 * d2 / (n * (n * n - 1))

    observed = abs(rho_d2(rx, ry))
    count = sum(1 for p in permutations(ry) if abs(rho_d2(rx, p)) >= observed)
    return count / math.factorial(n)


class TestSpearman:
    def test_perfectly_decreasing(self):
        r = spearman_rho([1, 2, 3, 4, 5], [10, 8, 6, 4, 2])
        assert r.statistic == pytest.approx(-1.0)

    def test_identity(self):
        r = spearman_rho([1, 2, 3, 4], [1, 2, 3, 4])
        assert r.statistic == pytest.approx(1.0)

    def test_exact_permutation_p_matches_enumeration(self):
        x = [3.0, 1.0, 7.0, 2.0, 9.0, 5.0, 4.0]
        y = [0.2, 1.1, -0.4, 0.9, -1.3, 0.1, 0.6]
        r = spearman_rho(x, y)
        assert r.p_value == pytest.approx(brute_force_spearman_p(x, y), abs=1e-3)

    def test_monotone_transform_invariance(self):
        x = [0.1, 0.7, 0.3, 0.9, 0.5, 0.2]
        y = [2.0, -1.0, 4.0, 0.5, 3.0, 9.0]
        r1 = spearman_rho(x, y)
        r2 = spearman_rho([math.exp(v) for v in x], [v**3 for v in y])
        assert r2.statistic == pytest.approx(r1.statistic)
        assert r2.p_value == pytest.approx(r1.p_value)

    def test_constant_input_rejected(self):
        with pytest.raises(DegenerateSampleError):
            spearman_rho([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])

    def test_large_n_uses_t_approximation(self):
        rng = np.random.default_rng(3)
        x = rng.normal(size=30)
        y = 0.6 * x + rng.normal(size=30)
        r = spearman_rho(x, y)
        assert 0.0 < r.p_value < 0.05
        assert r.statistic > 0.3


class TestMeanStd:
    def test_singleton(self):
        assert mean_std([5.0]) == (5.0, 0.0)

    def test_hand_values(self):
        mean, std = mean_std([1.0, 1.0, 1.0, 10.0])
        assert mean == pytest.approx(3.25)
        assert std == pytest.approx(4.5)

    def test_symmetric_pair(self):
        mean, std = mean_std([-1.0, 1.0])
        assert mean == pytest.approx(0.0)
        assert std == pytest.approx(math.sqrt(2.0))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            mean_std([])
