"""Acceptance probability of the generalized Johnk method.

For shapes ``a0..a3`` with total ``g`` the probability that
``sum(U_i ** (1 / a_i)) <= 1`` is

    eps = prod(a_i * Gamma(a_i)) / (g * Gamma(g))
        = exp(sum(lnGamma(a_i + 1)) - lnGamma(g + 1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from .errors import InvalidInput
from .params import CorrelatedBetaTarget, DirichletAlphas, solve_alphas
from .rng import RngStream
from .samplers import johnk_trials
from .special import log_gamma

__all__ = [
    "PAPER_C1_VALUES",
    "PAPER_C2_VALUES",
    "EfficiencyGrid",
    "johnk_efficiency",
    "efficiency_grid",
    "empirical_efficiency",
    "round_half_up",
]

PAPER_C1_VALUES = (0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0)
PAPER_C2_VALUES = (0.23, 0.25, 0.5, 0.75, 1.0, 2.0, 3.0, 5.0)


def round_half_up(value: float, places: int = 3) -> Decimal:
    """Round the exact binary value of ``value`` half-up."""
    return Decimal(value).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def johnk_efficiency(alphas: DirichletAlphas) -> float:
    """Exact acceptance probability of Johnk's method for ``alphas``."""
    shapes = alphas.as_tuple()
    log_eps = sum(log_gamma(a + 1.0) for a in shapes) - log_gamma(sum(shapes) + 1.0)
    # exp underflows cleanly to 0.0 for extreme shapes
    return min(1.0, math.exp(log_eps))


@dataclass(frozen=True)
class EfficiencyGrid:
    """Johnk efficiency over ``c1 = c3`` rows and ``c2`` columns at fixed ``r``."""

    r: float
    c1_values: tuple[float, ...]
    c2_values: tuple[float, ...]
    cells: np.ndarray
    constraint_tag: str = "c1=c3"

    def rounded(self, places: int = 3) -> list[list[Decimal]]:
        return [[round_half_up(v, places) for v in row] for row in self.cells]

    def to_csv(self) -> str:
        header = ["c1\\c2"] + [_fmt_label(c) for c in self.c2_values]
        lines = [",".join(header)]
        for c1, row in zip(self.c1_values, self.rounded()):
            lines.append(",".join([_fmt_label(c1)] + [str(v) for v in row]))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "constraint": self.constraint_tag,
            "c1_values": list(self.c1_values),
            "c2_values": list(self.c2_values),
            "cells": self.cells.tolist(),
            "rounded": [[str(v) for v in row] for row in self.rounded()],
        }

    def to_text(self) -> str:
        width = 7
        title = f"Efficiency with Johnk's method, c1=c3, r={self.r:.2f}"
        head = "c1 \\ c2".ljust(width) + "".join(
            _fmt_label(c).rjust(width) for c in self.c2_values
        )
        rule = "-" * len(head)
        lines = [title, rule, head, rule]
        for c1, row in zip(self.c1_values, self.rounded()):
            lines.append(f"{c1:.2f}".ljust(width) + "".join(str(v).rjust(width) for v in row))
        lines.append(rule)
        return "\n".join(lines) + "\n"


def _fmt_label(value: float) -> str:
    return f"{value:.2f}"


def efficiency_grid(r: float, c1_values=PAPER_C1_VALUES, c2_values=PAPER_C2_VALUES) -> EfficiencyGrid:
    """Tabulate Johnk efficiency for ``c1 = c3`` (always feasible) at correlation ``r``."""
    if not (0.0 <= r < 1.0):
        raise InvalidInput(f"r must lie in [0, 1), got {r!r}")
    c1_values = tuple(float(c) for c in c1_values)
    c2_values = tuple(float(c) for c in c2_values)
    if not c1_values or not c2_values:
        raise InvalidInput("c1 and c2 lists must be non-empty")
    for c in c1_values + c2_values:
        if not (c > 0 and math.isfinite(c)):
            raise InvalidInput(f"grid values must be positive, got {c!r}")
    cells = np.array(
        [
            [johnk_efficiency(solve_alphas(CorrelatedBetaTarget(c1, c2, c1, r))) for c2 in c2_values]
            for c1 in c1_values
        ]
    )
    return EfficiencyGrid(r, c1_values, c2_values, cells)


def empirical_efficiency(
    stream: RngStream, alphas: DirichletAlphas, attempts: int
) -> tuple[float, float]:
    """Monte Carlo acceptance rate of Johnk trials.

    Returns:
        ``(rate, half_width)`` where ``half_width`` is three binomial
        standard errors of ``rate``.
    """
    if attempts < 1:
        raise InvalidInput("attempts must be >= 1")
    inv = 1.0 / np.array(alphas.as_tuple())
    hits = 0
    left = attempts
    while left:
        m = min(left, 1 << 20)
        _, ok = johnk_trials(stream, inv, m)
        hits += int(np.count_nonzero(ok))
        left -= m
    rate = hits / attempts
    return rate, 3.0 * math.sqrt(rate * (1.0 - rate) / attempts)
