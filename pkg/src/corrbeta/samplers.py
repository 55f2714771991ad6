"""Dirichlet and correlated beta samplers.

Two exact routes to a Dirichlet vector are provided:

* gamma ratios, ``X_i = Z_i / sum(Z)`` with ``Z_i ~ Gamma(a_i, 1)``;
* the generalized Johnk rejection method, ``Z_i = U_i ** (1 / a_i)``
  accepted when ``sum(Z) <= 1``.

Both work internally with log-variates and normalize through a
log-sum-exp, so shapes well below 1 do not underflow.  Batch functions
return numpy arrays; the scalar functions wrap them for single draws.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidShape, TooManyRejections
from .params import CorrelatedBetaTarget, DirichletAlphas, solve_alphas
from .rng import RngStream

__all__ = [
    "Method",
    "DirichletDraw",
    "SamplePair",
    "JohnkStats",
    "SampleBatch",
    "DEFAULT_MAX_ATTEMPTS",
    "log_gamma_variates",
    "gamma_variates",
    "sample_gamma",
    "dirichlet_gamma_batch",
    "dirichlet_johnk_batch",
    "johnk_trials",
    "sample_dirichlet_gamma",
    "sample_dirichlet_johnk",
    "to_pair",
    "to_pairs",
    "sample_correlated_beta",
]

DEFAULT_MAX_ATTEMPTS = 10**6
_MAX_CHUNK = 1 << 20


class Method(str, enum.Enum):
    GAMMA = "gamma"
    JOHNK = "johnk"


@dataclass(frozen=True)
class DirichletDraw:
    """Coordinates ``x1, x2, x3``; ``x0 = 1 - x1 - x2 - x3`` is implied."""

    x1: float
    x2: float
    x3: float

    @property
    def x0(self) -> float:
        return 1.0 - self.x1 - self.x2 - self.x3


@dataclass(frozen=True)
class SamplePair:
    y1: float
    y2: float


@dataclass
class JohnkStats:
    """Running tally of Johnk trials."""

    attempts: int = 0
    accepts: int = 0

    @property
    def rate(self) -> float:
        return self.accepts / self.attempts if self.attempts else math.nan


@dataclass
class SampleBatch:
    """``n`` correlated beta pairs plus what is needed to regenerate them."""

    y1: np.ndarray
    y2: np.ndarray
    seed: int
    stream_id: int
    method: Method
    alphas: DirichletAlphas
    stats: JohnkStats | None = None

    def __len__(self) -> int:
        return len(self.y1)

    def pairs(self) -> list[SamplePair]:
        return [SamplePair(float(a), float(b)) for a, b in zip(self.y1, self.y2)]


# -- gamma -----------------------------------------------------------------


def _log_gamma_mt(stream: RngStream, shape: float, n: int) -> np.ndarray:
    """Log of Gamma(shape, 1) variates, ``shape >= 1`` (Marsaglia-Tsang)."""
    d = shape - 1.0 / 3.0
    c = 1.0 / math.sqrt(9.0 * d)
    out = np.empty(n)
    filled = 0
    while filled < n:
        need = n - filled
        # acceptance is >= 0.95 for every shape >= 1
        m = need + need // 10 + 16
        x = stream.normal(m)
        v = 1.0 + c * x
        ok = v > 0
        x, v = x[ok], v[ok]
        v = v * v * v
        log_u = stream.log_uniform(len(v))
        logv = np.log(v)
        accept = log_u < 0.5 * x * x + d * (1.0 - v + logv)
        logs = math.log(d) + logv[accept]
        take = min(len(logs), need)
        out[filled : filled + take] = logs[:take]
        filled += take
    return out


def log_gamma_variates(stream: RngStream, shape: float, n: int) -> np.ndarray:
    """``n`` values of ``log(G)`` with ``G ~ Gamma(shape, 1)``.

    Shapes below 1 use ``G = G' * U ** (1 / shape)`` with
    ``G' ~ Gamma(shape + 1, 1)``, evaluated as a sum of logs.
    """
    if not (shape > 0 and math.isfinite(shape)):
        raise InvalidShape(f"gamma shape must be positive, got {shape!r}")
    if shape >= 1.0:
        return _log_gamma_mt(stream, shape, n)
    boosted = _log_gamma_mt(stream, shape + 1.0, n)
    return boosted + stream.log_uniform(n) / shape


def gamma_variates(stream: RngStream, shape: float, n: int) -> np.ndarray:
    return np.exp(log_gamma_variates(stream, shape, n))


def sample_gamma(stream: RngStream, shape: float) -> float:
    """One exact ``Gamma(shape, 1)`` variate."""
    return float(gamma_variates(stream, shape, 1)[0])


# -- Dirichlet ---------------------------------------------------------------


def _normalize_logs(logz: np.ndarray) -> np.ndarray:
    m = logz.max(axis=1, keepdims=True)
    w = np.exp(logz - m)
    return w / w.sum(axis=1, keepdims=True)


def dirichlet_gamma_batch(stream: RngStream, alphas: DirichletAlphas, n: int) -> np.ndarray:
    """``(n, 4)`` array of Dirichlet vectors ``(x0, x1, x2, x3)`` by gamma ratios."""
    logz = np.column_stack([log_gamma_variates(stream, a, n) for a in alphas.as_tuple()])
    return _normalize_logs(logz)


def johnk_trials(stream: RngStream, inv_shapes: np.ndarray, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Run ``m`` Johnk trials; return ``log(Z)`` of shape ``(m, 4)`` and the acceptance mask."""
    logz = stream.log_uniform((m, 4)) * inv_shapes
    top = logz.max(axis=1)
    log_s = top + np.log(np.exp(logz - top[:, None]).sum(axis=1))
    return logz, log_s <= 0.0


def dirichlet_johnk_batch(
    stream: RngStream,
    alphas: DirichletAlphas,
    n: int,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    stats: JohnkStats | None = None,
) -> np.ndarray:
    """``(n, 4)`` array of Dirichlet vectors by generalized Johnk rejection.

    Trials are generated in blocks.  ``stats`` counts every trial up to and
    including the ``n``-th acceptance; surplus trials in the last block are
    discarded uncounted.

    Raises:
        TooManyRejections: if ``max_attempts`` consecutive trials are all
            rejected while waiting for a single draw.
    """
    if max_attempts < 1:
        raise ValueError("max_attempts must be >= 1")
    if stats is None:
        stats = JohnkStats()
    inv = 1.0 / np.array(alphas.as_tuple())
    out = np.empty((n, 4))
    filled = 0
    run = 0  # rejections already counted for the draw in progress
    tried = accepted = 0
    while filled < n:
        need = n - filled
        rate = accepted / tried if accepted else 0.5
        m = int(min(_MAX_CHUNK, max(1024, 1.2 * need / max(rate, 1e-6))))
        logz, ok = johnk_trials(stream, inv, m)
        acc_idx = np.flatnonzero(ok)[:need]
        tried += m
        accepted += len(acc_idx)

        # rejections preceding each acceptance, plus the trailing run
        starts = np.concatenate(([0], acc_idx + 1))
        stops = np.concatenate((acc_idx, [m]))
        gaps = stops - starts
        gaps[0] += run
        if len(acc_idx) == need:
            gaps = gaps[:-1]
        over = np.flatnonzero(gaps >= max_attempts)
        if len(over):
            k = int(over[0])
            stats.accepts += k
            stats.attempts += int(starts[k]) + max_attempts - (run if k == 0 else 0)
            raise TooManyRejections(max_attempts)

        if len(acc_idx):
            out[filled : filled + len(acc_idx)] = _normalize_logs(logz[acc_idx])
            filled += len(acc_idx)
            stats.accepts += len(acc_idx)
        if filled == n:
            stats.attempts += int(acc_idx[-1]) + 1
        else:
            stats.attempts += m
            run = int(gaps[-1])
    return out


def sample_dirichlet_gamma(stream: RngStream, alphas: DirichletAlphas) -> DirichletDraw:
    """One Dirichlet draw by gamma ratios."""
    x = dirichlet_gamma_batch(stream, alphas, 1)[0]
    return DirichletDraw(float(x[1]), float(x[2]), float(x[3]))


def sample_dirichlet_johnk(
    stream: RngStream,
    alphas: DirichletAlphas,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    stats: JohnkStats | None = None,
) -> DirichletDraw:
    """One Dirichlet draw by Johnk rejection, one trial at a time.

    Each trial draws four uniforms, forms ``Z_i = exp(log(U_i) / a_i)`` and
    accepts when ``sum(Z) <= 1``.
    """
    if max_attempts < 1:
        raise ValueError("max_attempts must be >= 1")
    if stats is None:
        stats = JohnkStats()
    shapes = alphas.as_tuple()
    for _ in range(max_attempts):
        stats.attempts += 1
        logz = [math.log(stream.uniform()) / a for a in shapes]
        top = max(logz)
        w = [math.exp(v - top) for v in logz]
        total = sum(w)
        if top + math.log(total) <= 0.0:
            stats.accepts += 1
            return DirichletDraw(w[1] / total, w[2] / total, w[3] / total)
    raise TooManyRejections(max_attempts)


# -- pairs -------------------------------------------------------------------


# a sum within half an ulp of 0 or 1 is pulled back onto the nearest
# representable interior point
_Y_MIN = np.nextafter(0.0, 1.0)
_Y_MAX = np.nextafter(1.0, 0.0)


def to_pair(draw: DirichletDraw) -> SamplePair:
    y1, y2 = np.clip((draw.x1 + draw.x3, draw.x2 + draw.x3), _Y_MIN, _Y_MAX)
    return SamplePair(float(y1), float(y2))


def to_pairs(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Map an ``(n, 4)`` Dirichlet batch to ``(y1, y2)`` arrays."""
    y1 = np.clip(x[:, 1] + x[:, 3], _Y_MIN, _Y_MAX)
    y2 = np.clip(x[:, 2] + x[:, 3], _Y_MIN, _Y_MAX)
    return y1, y2


def sample_correlated_beta(
    stream: RngStream,
    target: CorrelatedBetaTarget,
    n: int,
    method: Method | str = Method.GAMMA,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> SampleBatch:
    """Draw ``n`` pairs with marginals ``Be(c1, c2)``, ``Be(c3, c4)`` and correlation ``r``.

    Raises:
        Infeasible: if the target has no positive Dirichlet solution.
        TooManyRejections: Johnk method only, see :func:`dirichlet_johnk_batch`.
    """
    method = Method(method)
    if n < 1:
        raise ValueError("n must be >= 1")
    alphas = solve_alphas(target)
    stats = None
    if method is Method.GAMMA:
        x = dirichlet_gamma_batch(stream, alphas, n)
    else:
        stats = JohnkStats()
        x = dirichlet_johnk_batch(stream, alphas, n, max_attempts, stats)
    y1, y2 = to_pairs(x)
    return SampleBatch(y1, y2, stream.seed, stream.stream_id, method, alphas, stats)
