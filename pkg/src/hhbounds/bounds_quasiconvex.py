"""Midpoint-gap bounds for functions whose |f''|^q is only quasi-convex.

The quasi-convex hypothesis replaces the endpoint mean with the endpoint
supremum.  sup{x^q, y^q}^(1/q) is simplified to max(x, y) analytically
before evaluation (exact by monotonicity of t^q, and immune to overflow
for large q), which also makes the power-mean variant independent of q.
"""

from __future__ import annotations

from enum import Enum

from .core import ConjugatePair, DomainError, HypothesisError, Interval, TestFunction


class Monotonicity(Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


def _check_nonneg(d2a: float, d2b: float) -> None:
    if d2a < 0.0 or d2b < 0.0:
        raise DomainError(f"endpoint |f''| values must be nonnegative, got ({d2a}, {d2b})")


def bound_quasi_q1(iv: Interval, d2a: float, d2b: float) -> float:
    """(b-a)^2/24 times the larger endpoint |f''|; needs quasi-convex |f''|."""
    _check_nonneg(d2a, d2b)
    return iv.width * iv.width / 24.0 * max(d2a, d2b)


def bound_quasi_monotone(iv: Interval, fn: TestFunction,
                         direction: Monotonicity) -> float:
    """Corollary for monotone |f''|: the relevant endpoint alone bounds the gap.

    Increasing |f''| uses |f''(b)|, decreasing uses |f''(a)|.  Raises
    HypothesisError when the endpoint values contradict the stated
    direction; full-interval monotonicity is the caller's (oracle-level)
    responsibility.
    """
    d2a = abs(fn.d2(iv.a))
    d2b = abs(fn.d2(iv.b))
    tol = 1e-12 * max(1.0, d2a, d2b)
    if direction is Monotonicity.INCREASING:
        if d2a > d2b + tol:
            raise HypothesisError(
                f"|f''| not increasing on [{iv.a}, {iv.b}]: {d2a} > {d2b} at the endpoints")
        return iv.width * iv.width / 24.0 * d2b
    if d2b > d2a + tol:
        raise HypothesisError(
            f"|f''| not decreasing on [{iv.a}, {iv.b}]: {d2a} < {d2b} at the endpoints")
    return iv.width * iv.width / 24.0 * d2a


def bound_quasi_holder(iv: Interval, d2a: float, d2b: float, pq: ConjugatePair) -> float:
    """(b-a)^2 / (8 (2p+1)^(1/p)) times the larger endpoint |f''|."""
    _check_nonneg(d2a, d2b)
    prefactor = iv.width * iv.width / (8.0 * (2.0 * pq.p + 1.0) ** (1.0 / pq.p))
    return prefactor * max(d2a, d2b)


def bound_quasi_powermean(iv: Interval, d2a: float, d2b: float, q: float) -> float:
    """(b-a)^2/24 times the larger endpoint |f''|, for any q >= 1.

    Numerically independent of q: the endpoint sup commutes with the
    q-th power.  At q = 1 this is exactly bound_quasi_q1.
    """
    if q < 1.0:
        raise DomainError(f"power-mean bound needs q >= 1, got {q}")
    _check_nonneg(d2a, d2b)
    return iv.width * iv.width / 24.0 * max(d2a, d2b)


def bound_quasi_q1_for(fn: TestFunction, iv: Interval) -> float:
    return bound_quasi_q1(iv, abs(fn.d2(iv.a)), abs(fn.d2(iv.b)))


def bound_quasi_holder_for(fn: TestFunction, iv: Interval, pq: ConjugatePair) -> float:
    return bound_quasi_holder(iv, abs(fn.d2(iv.a)), abs(fn.d2(iv.b)), pq)


def bound_quasi_powermean_for(fn: TestFunction, iv: Interval, q: float) -> float:
    return bound_quasi_powermean(iv, abs(fn.d2(iv.a)), abs(fn.d2(iv.b)), q)
