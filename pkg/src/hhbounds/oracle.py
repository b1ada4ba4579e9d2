"""Ground-truth numerics the closed-form bounds are tested against.

Provides adaptive quadrature, the true midpoint gap, sampling-based
convexity and quasi-convexity verdicts for |f''|, and a supremum finder.
The class checks are falsifiers, not provers: they can refute a declared
class on a grid but cannot certify it.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

from .core import (
    ConvergenceError,
    DomainError,
    EvaluationError,
    Interval,
    TestFunction,
)
from .rng import SplitMix64

#: maximum bisection depth of the adaptive integrator
MAX_DEPTH = 60

#: panels are never accepted shallower than this, whatever the estimate says
_MIN_DEPTH = 2

#: additive slack used by the midpoint-convexity samplers
CLASS_CHECK_TOL = 1e-9


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    est_error: float
    evaluations: int


def integrate(f: Callable[[float], float], iv: Interval, tol: float) -> QuadratureResult:
    """Integrate f over iv to absolute tolerance tol.

    Adaptive Simpson with recursive bisection: each panel is accepted once
    the |S_halves - S_whole|/15 estimate fits its share of the error
    budget, and accepted panels get one Richardson correction.  The
    returned est_error (sum of accepted panel estimates) never exceeds
    tol.  Deterministic for fixed inputs.

    Raises:
        EvaluationError: f returned a non-finite value.
        ConvergenceError: some panel still misses its budget at depth 60.
    """
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")

    count = 0

    def feval(x: float) -> float:
        nonlocal count
        count += 1
        y = f(x)
        if not math.isfinite(y):
            raise EvaluationError(f"integrand returned {y} at x={x}")
        return y

    def recurse(a: float, b: float, fa: float, fm: float, fb: float,
                whole: float, budget: float, depth: int) -> tuple[float, float]:
        m = 0.5 * (a + b)
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm = feval(lm)
        frm = feval(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        err = (left + right - whole) / 15.0
        if depth >= _MIN_DEPTH and abs(err) <= budget:
            return left + right + err, abs(err)
        if depth >= MAX_DEPTH:
            raise ConvergenceError(
                f"no convergence at depth {MAX_DEPTH} on [{a}, {b}] (budget {budget})")
        lv, le = recurse(a, m, fa, flm, fm, left, 0.5 * budget, depth + 1)
        rv, re = recurse(m, b, fm, frm, fb, right, 0.5 * budget, depth + 1)
        return lv + rv, le + re

    fa = feval(iv.a)
    fb = feval(iv.b)
    fm = feval(iv.midpoint)
    whole = iv.width / 6.0 * (fa + 4.0 * fm + fb)
    value, est = recurse(iv.a, iv.b, fa, fm, fb, whole, tol, 0)
    return QuadratureResult(value=value, est_error=est, evaluations=count)


def mean_value(fn: TestFunction, iv: Interval, tol: float = 1e-10) -> float:
    """(1/(b-a)) * integral of f over [a, b], accurate to tol."""
    res = integrate(fn.f, iv, tol * iv.width)
    return res.value / iv.width


def midpoint_gap(fn: TestFunction, iv: Interval, tol: float = 1e-10) -> float:
    """|mean value of f - f(midpoint)| over iv, accurate to tol."""
    return abs(mean_value(fn, iv, tol) - fn.f(iv.midpoint))


def _grid(iv: Interval, n: int) -> list[float]:
    step = iv.width / (n - 1)
    xs = [iv.a + i * step for i in range(n)]
    xs[-1] = iv.b
    return xs


def midpoint_convexity_holds(g: Callable[[float], float], iv: Interval,
                             grid: int = 64, tol: float = CLASS_CHECK_TOL) -> bool:
    """Sampling verdict: g((x+y)/2) <= (g(x)+g(y))/2 + tol over all grid pairs."""
    if grid < 3:
        raise DomainError(f"grid must be at least 3, got {grid}")
    xs = _grid(iv, grid)
    gs = [g(x) for x in xs]
    for i in range(grid):
        for j in range(i + 1, grid):
            if g(0.5 * (xs[i] + xs[j])) > 0.5 * (gs[i] + gs[j]) + tol:
                return False
    return True


def midpoint_quasiconvexity_holds(g: Callable[[float], float], iv: Interval,
                                  grid: int = 64, tol: float = CLASS_CHECK_TOL) -> bool:
    """Sampling verdict: g((x+y)/2) <= max(g(x), g(y)) + tol over all grid pairs."""
    if grid < 3:
        raise DomainError(f"grid must be at least 3, got {grid}")
    xs = _grid(iv, grid)
    gs = [g(x) for x in xs]
    for i in range(grid):
        for j in range(i + 1, grid):
            bigger = gs[i] if gs[i] > gs[j] else gs[j]
            if g(0.5 * (xs[i] + xs[j])) > bigger + tol:
                return False
    return True


def check_convex_abs_d2(fn: TestFunction, iv: Interval, grid: int = 64) -> bool:
    """True iff |f''| passes the midpoint-convexity sampling check on iv."""
    return midpoint_convexity_holds(lambda x: abs(fn.d2(x)), iv, grid)


def check_quasiconvex_abs_d2(fn: TestFunction, iv: Interval, grid: int = 64) -> bool:
    """True iff |f''| passes the midpoint-quasi-convexity sampling check on iv."""
    return midpoint_quasiconvexity_holds(lambda x: abs(fn.d2(x)), iv, grid)


@dataclass(frozen=True)
class SupAbsD2:
    """Supremum estimate for |f''| on an interval.

    ``value`` is what callers should use.  ``interior_exceeds`` flags a
    quasi-convexity hypothesis violation: the interior sup was found above
    the endpoint sup.
    """

    value: float
    endpoint_value: float
    interior_value: float
    interior_exceeds: bool


_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(g: Callable[[float], float], lo: float, hi: float,
                iters: int = 60) -> float:
    """Max of g on [lo, hi] by golden-section search (assumes unimodal there)."""
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    g1, g2 = g(x1), g(x2)
    for _ in range(iters):
        if g1 < g2:
            lo, x1, g1 = x1, x2, g2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            g2 = g(x2)
        else:
            hi, x2, g2 = x2, x1, g1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            g1 = g(x1)
    return max(g1, g2)


def sup_abs_d2(fn: TestFunction, iv: Interval, grid: int = 1025) -> SupAbsD2:
    """Supremum of |f''| over iv.

    For quasi-convex |f''| this equals max(|f''(a)|, |f''(b)|); the result
    is cross-checked against a dense-grid maximum refined once by
    golden-section search around the grid argmax, and the larger value is
    reported with ``interior_exceeds`` set when the interior wins.
    """
    g = lambda x: abs(fn.d2(x))
    endpoint = max(g(iv.a), g(iv.b))
    xs = _grid(iv, grid)
    gs = [g(x) for x in xs]
    k = max(range(grid), key=gs.__getitem__)
    lo = xs[max(0, k - 1)]
    hi = xs[min(grid - 1, k + 1)]
    interior = max(gs[k], _golden_max(g, lo, hi))
    exceeds = interior > endpoint + 1e-12 * (1.0 + endpoint)
    return SupAbsD2(
        value=interior if exceeds else endpoint,
        endpoint_value=endpoint,
        interior_value=interior,
        interior_exceeds=exceeds,
    )


def derivative_consistency(fn: TestFunction, points: int = 100,
                           seed: int = 20260810) -> float:
    """Worst central-difference discrepancy of (d1, d2) against f.

    Samples interior points of the window (keeping the stencil inside the
    declared domain) and compares derivatives against central differences
    at tolerance max(1e-6, 1e-6*|value|).  Returns the largest
    discrepancy/tolerance ratio; values below 1 mean consistent.
    """
    rng = SplitMix64(seed)
    iv = fn.window
    worst = 0.0
    for _ in range(points):
        x = iv.a + (0.02 + 0.96 * rng.random()) * iv.width
        scale = max(1.0, abs(x))
        h1 = 1e-6 * scale
        h2 = 1e-4 * scale
        fd1 = (fn.f(x + h1) - fn.f(x - h1)) / (2.0 * h1)
        fd2 = (fn.f(x + h2) - 2.0 * fn.f(x) + fn.f(x - h2)) / (h2 * h2)
        for got, ref in ((fn.d1(x), fd1), (fn.d2(x), fd2)):
            tol = max(1e-6, 1e-6 * abs(got))
            worst = max(worst, abs(got - ref) / tol)
    return worst
