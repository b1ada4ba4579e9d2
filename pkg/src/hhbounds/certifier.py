"""Composite midpoint integration with a certified error radius.

Each uniform subinterval of width h contributes h^3/24 times the mean (or,
under the weaker quasi-convex hypothesis, the max) of its endpoint |f''|
values to the radius; the true integral then lies within the radius of the
estimate whenever |f''| has the claimed class on every subinterval.  Both
classes restrict to subintervals, so checking the full interval suffices.
The certificate is exact in real arithmetic; floating-point rounding is
not tracked.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import ConvergenceError, DomainError, HypothesisError, Interval, TestFunction
from .oracle import check_convex_abs_d2, check_quasiconvex_abs_d2

#: refinement cap for refine_to_tolerance
MAX_SUBINTERVALS = 1 << 20

#: grid used by the built-in class verification
_CLASS_GRID = 33


class CertTheorem(str, Enum):
    CONVEX_Q1 = "convex_q1"
    QUASI_Q1 = "quasi_q1"


@dataclass(frozen=True)
class CertifiedIntegral:
    estimate: float
    error_radius: float
    subintervals: int
    theorem_used: CertTheorem


def _require_class(fn: TestFunction, iv: Interval, theorem: CertTheorem) -> None:
    if theorem is CertTheorem.CONVEX_Q1:
        if not check_convex_abs_d2(fn, iv, _CLASS_GRID):
            raise HypothesisError(f"|f''| of {fn.id!r} is not convex on [{iv.a}, {iv.b}]")
    elif not check_quasiconvex_abs_d2(fn, iv, _CLASS_GRID):
        raise HypothesisError(f"|f''| of {fn.id!r} is not quasi-convex on [{iv.a}, {iv.b}]")


def integrate_certified(fn: TestFunction, iv: Interval, n: int,
                        theorem: CertTheorem = CertTheorem.CONVEX_Q1,
                        *, check_class: bool = True) -> CertifiedIntegral:
    """Composite midpoint rule over n equal subintervals with an error radius.

    Pass check_class=False to skip the sampling-based class verification
    and assert the hypothesis yourself.  Terms are summed left to right
    for determinism.
    """
    if n < 1:
        raise DomainError(f"need at least one subinterval, got {n}")
    if not fn.defined_on(iv):
        raise DomainError(f"[{iv.a}, {iv.b}] is outside the domain of {fn.id!r}")
    if check_class:
        _require_class(fn, iv, theorem)

    h = iv.width / n
    cuts = [iv.a + iv.width * i / n for i in range(n + 1)]
    cuts[-1] = iv.b
    d2s = [abs(fn.d2(x)) for x in cuts]

    total = 0.0
    weight = 0.0
    for i in range(n):
        total += fn.f(0.5 * (cuts[i] + cuts[i + 1]))
        if theorem is CertTheorem.CONVEX_Q1:
            weight += 0.5 * (d2s[i] + d2s[i + 1])
        else:
            weight += max(d2s[i], d2s[i + 1])

    return CertifiedIntegral(
        estimate=h * total,
        error_radius=h ** 3 / 24.0 * weight,
        subintervals=n,
        theorem_used=theorem,
    )


def refine_to_tolerance(fn: TestFunction, iv: Interval, tol: float,
                        theorem: CertTheorem = CertTheorem.CONVEX_Q1,
                        *, check_class: bool = True) -> CertifiedIntegral:
    """Double the subinterval count until the radius fits the tolerance.

    The radius scales as h^2 for bounded |f''|, so the count grows as
    O(tol^(-1/2)).  Raises ConvergenceError past 2^20 subintervals.
    """
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    if check_class:
        _require_class(fn, iv, theorem)
    n = 1
    while True:
        result = integrate_certified(fn, iv, n, theorem, check_class=False)
        if result.error_radius <= tol:
            return result
        if n >= MAX_SUBINTERVALS:
            raise ConvergenceError(
                f"radius {result.error_radius} still above {tol} at n={n}")
        n *= 2
