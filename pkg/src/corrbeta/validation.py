"""Statistical checks of sampled pairs against their target law.

Moments and correlation are compared with closed-form beta values inside
four-standard-error bands; marginal shape is checked with a one-sample
Kolmogorov-Smirnov statistic against the beta CDF.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .params import CorrelatedBetaTarget, derived_c4
from .rng import RngStream
from .samplers import DEFAULT_MAX_ATTEMPTS, Method, sample_correlated_beta
from .special import regularized_incomplete_beta

__all__ = [
    "ValidationReport",
    "beta_mean",
    "beta_variance",
    "beta_central_moment4",
    "ks_statistic",
    "ks_critical",
    "validate_sampler",
    "regularized_incomplete_beta",
]

MOMENT_SIGMAS = 4.0
CORR_FLOOR = 0.01
# asymptotic KS critical value at alpha ~ 0.01
KS_COEF = 1.63
MIN_N = 1000


def beta_mean(a: float, b: float) -> float:
    return a / (a + b)


def beta_variance(a: float, b: float) -> float:
    s = a + b
    return a * b / (s * s * (s + 1.0))


def beta_central_moment4(a: float, b: float) -> float:
    s = a + b
    raw = [1.0]
    for k in range(4):
        raw.append(raw[-1] * (a + k) / (s + k))
    m1 = raw[1]
    return raw[4] - 4 * m1 * raw[3] + 6 * m1**2 * raw[2] - 3 * m1**4


def ks_statistic(samples, a: float, b: float) -> float:
    """One-sample KS distance between ``samples`` and ``Be(a, b)``."""
    x = np.sort(np.asarray(samples, dtype=float))
    n = len(x)
    cdf = regularized_incomplete_beta(x, a, b)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - cdf), np.max(cdf - (i - 1) / n)))


def ks_critical(n: int) -> float:
    return KS_COEF / math.sqrt(n)


@dataclass(frozen=True)
class ValidationReport:
    n: int
    mean_y1: float
    mean_y2: float
    var_y1: float
    var_y2: float
    corr: float
    expected_mean_y1: float
    expected_mean_y2: float
    expected_var_y1: float
    expected_var_y2: float
    expected_corr: float
    ks_y1: float
    ks_y2: float
    pass_: bool
    tolerance_spec: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.pass_

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("pass_")
        return d

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _expected(target: CorrelatedBetaTarget) -> dict:
    c4 = derived_c4(target)
    return {
        "expected_mean_y1": beta_mean(target.c1, target.c2),
        "expected_mean_y2": beta_mean(target.c3, c4),
        "expected_var_y1": beta_variance(target.c1, target.c2),
        "expected_var_y2": beta_variance(target.c3, c4),
        "expected_corr": target.r,
    }


def validate_sampler(
    stream: RngStream,
    target: CorrelatedBetaTarget,
    n: int,
    method: Method | str = Method.GAMMA,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> ValidationReport:
    """Sample ``n`` pairs and test them against the target marginals and correlation.

    Bands: means and variances within 4 standard errors of the closed-form
    beta values, correlation within ``max(0.01, 4 (1 - r^2) / sqrt(n))``,
    and each KS statistic below ``1.63 / sqrt(n)``.
    """
    if n < MIN_N:
        raise ValueError(f"validation needs n >= {MIN_N}, got {n}")
    batch = sample_correlated_beta(stream, target, n, method, max_attempts)
    y1, y2 = batch.y1, batch.y2
    exp = _expected(target)
    c4 = derived_c4(target)
    shapes = ((target.c1, target.c2), (target.c3, c4))

    mean_se = [math.sqrt(beta_variance(a, b) / n) for a, b in shapes]
    var_se = [
        math.sqrt((beta_central_moment4(a, b) - beta_variance(a, b) ** 2) / n) for a, b in shapes
    ]
    corr_band = max(CORR_FLOOR, MOMENT_SIGMAS * (1.0 - target.r**2) / math.sqrt(n))
    ks_band = ks_critical(n)
    tolerance = {
        "mean_y1": MOMENT_SIGMAS * mean_se[0],
        "mean_y2": MOMENT_SIGMAS * mean_se[1],
        "var_y1": MOMENT_SIGMAS * var_se[0],
        "var_y2": MOMENT_SIGMAS * var_se[1],
        "corr": corr_band,
        "ks": ks_band,
        "method": str(Method(method).value),
        "seed": stream.seed,
        "stream": stream.stream_id,
    }

    observed = {
        "mean_y1": float(y1.mean()),
        "mean_y2": float(y2.mean()),
        "var_y1": float(y1.var(ddof=1)),
        "var_y2": float(y2.var(ddof=1)),
        "corr": float(np.corrcoef(y1, y2)[0, 1]),
    }
    ks_y1 = ks_statistic(y1, *shapes[0])
    ks_y2 = ks_statistic(y2, *shapes[1])

    ok = all(
        abs(observed[key] - exp["expected_" + key]) <= tolerance[key] for key in observed
    )
    ok = ok and ks_y1 < ks_band and ks_y2 < ks_band
    return ValidationReport(n=n, **observed, **exp, ks_y1=ks_y1, ks_y2=ks_y2, pass_=ok,
                            tolerance_spec=tolerance)
