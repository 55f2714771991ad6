import math

import numpy as np
import pytest

from corrbeta import (
    CorrelatedBetaTarget,
    DirichletAlphas,
    DirichletDraw,
    Infeasible,
    InvalidShape,
    JohnkStats,
    RngStream,
    TooManyRejections,
    dirichlet_pair_covariances,
    johnk_efficiency,
    sample_correlated_beta,
    sample_dirichlet_gamma,
    sample_dirichlet_johnk,
    sample_gamma,
    solve_alphas,
    to_pair,
)
from corrbeta.samplers import (
    dirichlet_gamma_batch,
    dirichlet_johnk_batch,
    gamma_variates,
    to_pairs,
)

N = 10**6


@pytest.mark.parametrize("shape", [0.0625, 1.0, 5.0])
def test_gamma_moments(shape):
    g = gamma_variates(RngStream(11), shape, N)
    assert g.min() > 0
    # mean = variance = shape; 3 standard errors
    assert abs(g.mean() - shape) < 3 * math.sqrt(shape / N)
    if shape == 1.0:
        assert abs(g.var() - 1) < 0.01


def test_gamma_scalar_and_invalid():
    assert sample_gamma(RngStream(1), 2.5) > 0
    with pytest.raises(InvalidShape):
        sample_gamma(RngStream(1), 0.0)


def test_gamma_small_shape_ks():
    from scipy import stats

    g = gamma_variates(RngStream(3), 0.3, 20000)
    assert stats.kstest(g, stats.gamma(0.3).cdf).pvalue > 0.001


def test_dirichlet_gamma_symmetric_means():
    x = dirichlet_gamma_batch(RngStream(5), DirichletAlphas(1, 1, 1, 1), N)
    assert np.all(np.abs(x.mean(axis=0) - 0.25) < 0.003)
    assert np.all(x[:, 1:].sum(axis=1) < 1)


def test_dirichlet_gamma_covariance():
    a = DirichletAlphas(0.75, 0.25, 0.25, 0.75)
    x = dirichlet_gamma_batch(RngStream(6), a, N)
    prod = (x[:, 1] - x[:, 1].mean()) * (x[:, 2] - x[:, 2].mean())
    se = prod.std() / math.sqrt(N)
    assert abs(prod.mean() - dirichlet_pair_covariances(a)[0]) < 3 * se


def test_single_draws_valid():
    s = RngStream(9)
    a = DirichletAlphas(0.3, 0.2, 0.1, 0.4)
    for draw in [sample_dirichlet_gamma(s, a) for _ in range(200)] + [
        sample_dirichlet_johnk(s, a) for _ in range(200)
    ]:
        xs = (draw.x1, draw.x2, draw.x3)
        assert all(0 < v < 1 for v in xs) and sum(xs) < 1


def _binomial_3sigma(p, n):
    return 3 * math.sqrt(p * (1 - p) / n)


def test_johnk_uniform_rate():
    stats = JohnkStats()
    dirichlet_johnk_batch(RngStream(8), DirichletAlphas(1, 1, 1, 1), 5000, stats=stats)
    assert stats.accepts == 5000
    assert abs(stats.rate - 1 / 24) < _binomial_3sigma(1 / 24, stats.attempts)


def test_johnk_table_cell_rate():
    a = solve_alphas(CorrelatedBetaTarget(0.25, 0.25, 0.25, 0.5))
    stats = JohnkStats()
    dirichlet_johnk_batch(RngStream(12), a, 90000, stats=stats)
    assert abs(stats.rate - johnk_efficiency(a)) < _binomial_3sigma(0.897, stats.attempts)


def test_johnk_scalar_counts_every_trial():
    stats = JohnkStats()
    s = RngStream(4)
    for _ in range(500):
        sample_dirichlet_johnk(s, DirichletAlphas(1, 1, 1, 1), stats=stats)
    assert stats.accepts == 500 and stats.attempts > 500
    assert abs(stats.rate - 1 / 24) < _binomial_3sigma(1 / 24, stats.attempts)


def test_johnk_matches_gamma_means():
    a = DirichletAlphas(0.6, 0.3, 1.2, 0.8)
    n = 10**5
    xj = dirichlet_johnk_batch(RngStream(21), a, n)
    xg = dirichlet_gamma_batch(RngStream(22), a, n)
    se = np.sqrt(xj.var(axis=0) / n + xg.var(axis=0) / n)
    assert np.all(np.abs(xj.mean(axis=0) - xg.mean(axis=0)) < 4 * se)


def test_johnk_budget_exhausted():
    stats = JohnkStats()
    with pytest.raises(TooManyRejections):
        dirichlet_johnk_batch(RngStream(1), DirichletAlphas(40, 40, 40, 40), 1, 3000, stats)
    assert stats.attempts == 3000 and stats.accepts == 0
    with pytest.raises(TooManyRejections):
        sample_dirichlet_johnk(RngStream(1), DirichletAlphas(40, 40, 40, 40), max_attempts=50)


def test_johnk_budget_counts_run_across_blocks():
    # acceptance ~ 1/24: runs of 1 rejection are common, of 400 essentially impossible
    with pytest.raises(TooManyRejections):
        dirichlet_johnk_batch(RngStream(2), DirichletAlphas(1, 1, 1, 1), 100, max_attempts=1)
    dirichlet_johnk_batch(RngStream(2), DirichletAlphas(1, 1, 1, 1), 100, max_attempts=400)


def test_johnk_tiny_shapes_do_not_underflow():
    a = DirichletAlphas(0.01, 0.01, 0.01, 0.01)
    x = dirichlet_johnk_batch(RngStream(3), a, 2000)
    assert np.all(np.isfinite(x))
    assert np.allclose(x.sum(axis=1), 1.0)


def test_to_pair():
    p = to_pair(DirichletDraw(0.2, 0.3, 0.1))
    assert (p.y1, p.y2) == pytest.approx((0.3, 0.4))
    tiny = to_pair(DirichletDraw(1e-300, 1e-300, 1e-300))
    assert 0 < tiny.y1 < 1 and 0 < tiny.y2 < 1


def test_to_pairs_mean():
    a = DirichletAlphas(1, 1, 1, 1)
    y1, y2 = to_pairs(dirichlet_gamma_batch(RngStream(13), a, N))
    assert abs(y1.mean() - 0.5) < 0.002


class TestCorrelatedBeta:
    def test_gamma_correlation_and_mean(self):
        b = sample_correlated_beta(RngStream(1), CorrelatedBetaTarget(1, 1, 1, 0.5), N)
        assert abs(np.corrcoef(b.y1, b.y2)[0, 1] - 0.5) < 0.01
        assert abs(b.y1.mean() - 0.5) < 0.002
        assert b.stats is None

    def test_johnk_rate(self):
        b = sample_correlated_beta(
            RngStream(2), CorrelatedBetaTarget(0.25, 0.25, 0.25, 0.5), 10**5, "johnk"
        )
        assert abs(b.stats.rate - 0.897) < _binomial_3sigma(0.897, b.stats.attempts) + 5e-4

    def test_independent_limit(self):
        b = sample_correlated_beta(RngStream(3), CorrelatedBetaTarget(1, 1, 1, 0), N)
        assert abs(np.corrcoef(b.y1, b.y2)[0, 1]) < 0.01

    @pytest.mark.parametrize("method", ["gamma", "johnk"])
    def test_deterministic(self, method):
        t = CorrelatedBetaTarget(0.7, 1.3, 0.9, 0.4)
        a = sample_correlated_beta(RngStream(5, 3), t, 5000, method)
        b = sample_correlated_beta(RngStream(5, 3), t, 5000, method)
        assert a.y1.tobytes() == b.y1.tobytes() and a.y2.tobytes() == b.y2.tobytes()
        assert (a.seed, a.stream_id, len(a)) == (5, 3, 5000)

    @pytest.mark.parametrize("method", ["gamma", "johnk"])
    def test_open_interval(self, method):
        t = CorrelatedBetaTarget(0.25, 0.25, 0.25, 0.75)
        b = sample_correlated_beta(RngStream(6), t, 20000, method)
        for y in (b.y1, b.y2):
            assert y.min() > 0 and y.max() < 1

    def test_marginal_variance(self):
        t = CorrelatedBetaTarget(2.0, 3.0, 1.0, 0.3)
        b = sample_correlated_beta(RngStream(7), t, N)
        c1, c2 = t.c1, t.c2
        var = c1 * c2 / ((c1 + c2) ** 2 * (c1 + c2 + 1))
        assert b.y1.var() == pytest.approx(var, rel=0.01)
        assert abs(np.corrcoef(b.y1, b.y2)[0, 1] - 0.3) < 0.01

    def test_infeasible(self):
        with pytest.raises(Infeasible):
            sample_correlated_beta(RngStream(0), CorrelatedBetaTarget(2, 1, 1, 0.6), 10)

    def test_pairs_view(self):
        b = sample_correlated_beta(RngStream(0), CorrelatedBetaTarget(1, 1, 1, 0.5), 3)
        assert [p.y1 for p in b.pairs()] == b.y1.tolist()
