"""Inverse problem: beta marginals plus correlation -> Dirichlet shapes.

Two correlated beta variates are built from a four-shape Dirichlet vector
``(X0, X1, X2, X3)`` as ``Y1 = X1 + X3`` and ``Y2 = X2 + X3``.  With
``Y1 ~ Be(c1, c2)`` and ``Y2 ~ Be(c3, c4)`` the shapes are pinned by

    c1 = a1 + a3,   c2 = a0 + a2,   c3 = a2 + a3,   c4 = a0 + a1,

and the correlation of ``(Y1, Y2)`` fixes ``a3``.  Not every target is
reachable: all four shapes must be strictly positive.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import Infeasible, InvalidInput, InvalidTarget

__all__ = [
    "CorrelatedBetaTarget",
    "DirichletAlphas",
    "FeasibilityReport",
    "SpecialCase",
    "CaseBounds",
    "derived_c4",
    "solve_alpha3",
    "solve_alphas",
    "check_feasibility",
    "target_correlation",
    "covariance_y",
    "dirichlet_pair_covariances",
    "variance_x3",
    "case_bounds",
    "max_feasible_r",
]

# restriction identifiers used in FeasibilityReport.violated
ALPHA1_POSITIVE = "alpha1_positive"
ALPHA2_POSITIVE = "alpha2_positive"
ALPHA0_POSITIVE = "alpha0_positive"
ALPHA3_POSITIVE = "alpha3_positive"
C4_POSITIVE = "c4_positive"

MAXR_TOL = 1e-10


class SpecialCase(str, enum.Enum):
    GENERAL = "General"
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    CASE_III = "CaseIII"
    CASE_IV = "CaseIV"


def _check_shapes(c1: float, c2: float, c3: float) -> None:
    for name, value in (("c1", c1), ("c2", c2), ("c3", c3)):
        if not (math.isfinite(value) and value > 0):
            raise InvalidTarget(f"{name} must be a positive finite number, got {value!r}")


@dataclass(frozen=True)
class CorrelatedBetaTarget:
    """Desired pair of beta marginals ``Be(c1, c2)``, ``Be(c3, c4)`` and correlation ``r``.

    ``c4`` is implied by ``c4 = c1 + c2 - c3``.  Construction only checks
    that the shapes are positive and ``0 <= r < 1``; a non-positive ``c4`` is
    left for :func:`check_feasibility` to report.
    """

    c1: float
    c2: float
    c3: float
    r: float

    def __post_init__(self) -> None:
        _check_shapes(self.c1, self.c2, self.c3)
        if not (0.0 <= self.r < 1.0):
            raise InvalidTarget(f"r must lie in [0, 1), got {self.r!r}")

    @property
    def c4(self) -> float:
        return derived_c4(self)

    @property
    def special_case(self) -> SpecialCase:
        return _classify(self.c1, self.c2, self.c3)


@dataclass(frozen=True)
class DirichletAlphas:
    """Shapes ``(a0, a1, a2, a3)`` of the latent Dirichlet distribution."""

    a0: float
    a1: float
    a2: float
    a3: float

    def __post_init__(self) -> None:
        for name in ("a0", "a1", "a2", "a3"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidInput(f"{name} must be strictly positive, got {value!r}")

    @property
    def gamma_sum(self) -> float:
        return self.a0 + self.a1 + self.a2 + self.a3

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a0, self.a1, self.a2, self.a3)

    def marginal_shapes(self) -> tuple[float, float, float, float]:
        """Return ``(c1, c2, c3, c4)`` reproduced from the shapes."""
        return (self.a1 + self.a3, self.a0 + self.a2, self.a2 + self.a3, self.a0 + self.a1)


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    alpha3: float
    # (a1, a2, a0, a3) in the order the restrictions are listed
    margins: tuple[float, float, float, float]
    violated: tuple[str, ...] = field(default_factory=tuple)
    special_case: SpecialCase = SpecialCase.GENERAL

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "alpha3": self.alpha3,
            "margins": {
                "alpha1": self.margins[0],
                "alpha2": self.margins[1],
                "alpha0": self.margins[2],
                "alpha3": self.margins[3],
            },
            "violated": list(self.violated),
            "special_case": self.special_case.value,
        }


def _classify(c1: float, c2: float, c3: float) -> SpecialCase:
    if c1 == c2 == c3:
        return SpecialCase.CASE_IV
    if c1 == c3:
        return SpecialCase.CASE_I
    if c2 == c3:
        return SpecialCase.CASE_II
    if c1 == c2:
        return SpecialCase.CASE_III
    return SpecialCase.GENERAL


def _alpha3(c1: float, c2: float, c3: float, r: float) -> float:
    c4 = c1 + c2 - c3
    return (r * math.sqrt(c1 * c2 * c3 * c4) + c1 * c3) / (c1 + c2)


def _margins(c1: float, c2: float, c3: float, r: float) -> tuple[float, float, float, float]:
    a3 = _alpha3(c1, c2, c3, r)
    return (c1 - a3, c3 - a3, c2 - c3 + a3, a3)


def _is_feasible(c1: float, c2: float, c3: float, r: float) -> bool:
    return c1 + c2 > c3 and all(m > 0 for m in _margins(c1, c2, c3, r))


def derived_c4(target: CorrelatedBetaTarget) -> float:
    """Second shape of the ``Y2`` marginal, ``c1 + c2 - c3``."""
    c4 = target.c1 + target.c2 - target.c3
    if not c4 > 0:
        raise InvalidTarget(
            f"c1 + c2 must exceed c3 (got c1={target.c1}, c2={target.c2}, c3={target.c3})"
        )
    return c4


def solve_alpha3(target: CorrelatedBetaTarget) -> float:
    """Shape of the shared component ``X3``; always strictly positive."""
    derived_c4(target)
    return _alpha3(target.c1, target.c2, target.c3, target.r)


def check_feasibility(target: CorrelatedBetaTarget) -> FeasibilityReport:
    """Evaluate strict positivity of all four solved shapes.

    A target with ``c1 + c2 <= c3`` is reported as violating
    ``c4_positive``; ``alpha3`` and the margins are then NaN since the
    square root in the solution is undefined.
    """
    c1, c2, c3, r = target.c1, target.c2, target.c3, target.r
    case = _classify(c1, c2, c3)
    if not c1 + c2 > c3:
        nan = math.nan
        return FeasibilityReport(False, nan, (nan, nan, nan, nan), (C4_POSITIVE,), case)
    margins = _margins(c1, c2, c3, r)
    names = (ALPHA1_POSITIVE, ALPHA2_POSITIVE, ALPHA0_POSITIVE, ALPHA3_POSITIVE)
    violated = tuple(name for name, m in zip(names, margins) if not m > 0)
    return FeasibilityReport(not violated, margins[3], margins, violated, case)


def solve_alphas(target: CorrelatedBetaTarget) -> DirichletAlphas:
    """Solve for the Dirichlet shapes reproducing ``target``.

    Raises:
        Infeasible: if any shape would be non-positive.  The exception
            carries the :class:`FeasibilityReport`.
    """
    report = check_feasibility(target)
    if not report.feasible:
        raise Infeasible(report)
    a1, a2, a0, a3 = report.margins
    return DirichletAlphas(a0=a0, a1=a1, a2=a2, a3=a3)


def target_correlation(alphas: DirichletAlphas) -> float:
    """Pearson correlation of ``Y1 = X1 + X3`` and ``Y2 = X2 + X3``."""
    a0, a1, a2, a3 = alphas.as_tuple()
    num = a0 * a3 - a1 * a2
    return num / math.sqrt((a1 + a3) * (a0 + a2) * (a2 + a3) * (a0 + a1))


def _cov_scale(alphas: DirichletAlphas) -> float:
    g = alphas.gamma_sum
    return g * g * (g + 1.0)


def covariance_y(alphas: DirichletAlphas) -> float:
    a0, a1, a2, a3 = alphas.as_tuple()
    return (a0 * a3 - a1 * a2) / _cov_scale(alphas)


def dirichlet_pair_covariances(alphas: DirichletAlphas) -> tuple[float, float, float]:
    """``(Cov(X1, X2), Cov(X1, X3), Cov(X2, X3))``; all negative."""
    _, a1, a2, a3 = alphas.as_tuple()
    s = _cov_scale(alphas)
    return (-a1 * a2 / s, -a1 * a3 / s, -a2 * a3 / s)


def variance_x3(alphas: DirichletAlphas) -> float:
    a3 = alphas.a3
    return a3 * (alphas.gamma_sum - a3) / _cov_scale(alphas)


@dataclass(frozen=True)
class CaseBounds:
    """Closed-form feasibility condition for one of the special cases.

    ``lower < value < upper`` is the condition, evaluated at the target;
    ``value`` is ``c1`` for Case II and ``c1 / c3`` for Case III.  Cases I
    and IV carry no bounds and are always feasible.
    """

    case: SpecialCase
    feasible: bool
    value: float | None = None
    lower: float | None = None
    upper: float | None = None

    def describe(self) -> str:
        if self.case in (SpecialCase.CASE_I, SpecialCase.CASE_IV):
            return f"{self.case.value}: feasible for every r in [0, 1)"
        label = "c1" if self.case is SpecialCase.CASE_II else "c1/c3"
        upper = "inf" if self.upper is None else f"{self.upper:.6g}"
        return f"{self.case.value}: {self.lower:.6g} < {label}={self.value:.6g} < {upper}"


def case_bounds(target: CorrelatedBetaTarget) -> CaseBounds | None:
    """Analytic feasibility condition when the target is a special case.

    Returns ``None`` for the general case, which has no tractable closed
    form; use :func:`check_feasibility` or :func:`max_feasible_r` there.
    """
    c1, c2, c3, r = target.c1, target.c2, target.c3, target.r
    case = _classify(c1, c2, c3)
    if case in (SpecialCase.CASE_I, SpecialCase.CASE_IV):
        return CaseBounds(case, True)
    if case is SpecialCase.CASE_II:
        lower = r * c2
        upper = c2 / r if r > 0 else None
        ok = lower < c1 and (upper is None or c1 < upper)
        return CaseBounds(case, ok, c1, lower, upper)
    if case is SpecialCase.CASE_III:
        ratio = c1 / c3
        lower = (1.0 + r * r) / 2.0
        upper = (1.0 + r * r) / (2.0 * r * r) if r > 0 else None
        ok = lower < ratio and (upper is None or ratio < upper)
        return CaseBounds(case, ok, ratio, lower, upper)
    return None


def max_feasible_r(c1: float, c2: float, c3: float) -> float:
    """Supremum of the correlations reachable for the given marginals.

    Feasibility is monotone in ``r``: ``a3`` and ``a0`` grow with ``r``
    while ``a1`` and ``a2`` shrink, and ``r = 0`` is always feasible.  The
    general case is therefore solved by bisection to ``1e-10``.
    """
    _check_shapes(c1, c2, c3)
    if not c1 + c2 > c3:
        raise InvalidTarget(f"c1 + c2 must exceed c3 (got c1={c1}, c2={c2}, c3={c3})")
    case = _classify(c1, c2, c3)
    if case in (SpecialCase.CASE_I, SpecialCase.CASE_IV):
        return 1.0
    if case is SpecialCase.CASE_II:
        return min(c1 / c2, c2 / c1, 1.0)
    lo, hi = 0.0, 1.0
    if _is_feasible(c1, c2, c3, hi):
        return 1.0
    while hi - lo > MAXR_TOL:
        mid = 0.5 * (lo + hi)
        if _is_feasible(c1, c2, c3, mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
