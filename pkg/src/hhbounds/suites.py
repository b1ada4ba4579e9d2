"""Named verification sweeps shared by the CLI and the test suite.

Each sweep walks the built-in catalog (window first, then seeded random
subintervals), evaluates one family of checks, and yields schema-stable
lines: suite, function, interval, theorem, bound, gap, slack, pass.  For
bound families pass means slack >= -1e-9; for the identity sweep it means
|slack| stays below the residual tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bounds_convex as bc
from . import bounds_quasiconvex as bq
from .core import (
    BoundReport,
    ConjugatePair,
    DomainError,
    HypothesisError,
    Interval,
    TestFunction,
    TheoremId,
    builtin_catalog,
)
from .bounds_quasiconvex import Monotonicity
from .identity import identity_lhs, identity_rhs
from .means import (
    all_means,
    chain_check,
    check_prop_identric,
    check_prop_monomial_pm,
    check_prop_monomial_q1,
    check_prop_monomial_quasi,
    check_prop_reciprocal_pm,
    check_prop_reciprocal_quasi,
    lp_monotone_nondecreasing,
    lp_values_on_grid,
)
from .oracle import (
    check_convex_abs_d2,
    check_quasiconvex_abs_d2,
    midpoint_convexity_holds,
    midpoint_gap,
)
from .rng import SplitMix64

SUITE_NAMES = ("identity", "convex", "quasiconvex", "means", "all")

RESIDUAL_TOL = 1e-9
SLACK_TOL = 1e-9
GAP_TOL = 1e-10

_SALT = {
    "identity": 0x1D5EED,
    "convex": 0xC07F5EED,
    "quasiconvex": 0x9A5EED,
    "means": 0x3EA5EED,
}


@dataclass(frozen=True)
class CheckLine:
    suite: str
    function: str
    interval: Interval
    theorem: str
    bound: float
    gap: float
    slack: float
    passed: bool

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "function": self.function,
            "interval": [self.interval.a, self.interval.b],
            "theorem": self.theorem,
            "bound": self.bound,
            "gap": self.gap,
            "slack": self.slack,
            "pass": self.passed,
        }


def _line_from_report(suite: str, report: BoundReport) -> CheckLine:
    return CheckLine(
        suite=suite,
        function=report.function_id,
        interval=report.interval,
        theorem=report.theorem_id.value,
        bound=report.bound,
        gap=report.true_gap,
        slack=report.slack,
        passed=report.valid,
    )


def _case_intervals(fn: TestFunction, cases: int, rng: SplitMix64) -> list[Interval]:
    return [fn.window] + [rng.subinterval(fn.window) for _ in range(cases)]


def identity_suite(cases: int, seed: int, catalog: list[TestFunction] | None = None,
                   tol: float = GAP_TOL) -> list[CheckLine]:
    """Residual of the kernel identity over the catalog and random subintervals."""
    catalog = catalog if catalog is not None else builtin_catalog()
    rng = SplitMix64(seed ^ _SALT["identity"])
    lines = []
    for fn in catalog:
        for iv in _case_intervals(fn, cases, rng):
            lhs = identity_lhs(fn, iv, tol)
            rhs = identity_rhs(fn, iv, tol)
            slack = rhs - lhs
            lines.append(CheckLine(
                suite="identity", function=fn.id, interval=iv, theorem="identity",
                bound=rhs, gap=lhs, slack=slack, passed=abs(slack) <= RESIDUAL_TOL))
    return lines


def convex_suite(cases: int, seed: int,
                 catalog: list[TestFunction] | None = None) -> list[CheckLine]:
    """Validity sweep of the convex-|f''| bounds and the |f'| baselines.

    Only functions whose |f''| passes the convexity sampler on their window
    take part (convexity restricts to subintervals, so the window check
    covers every case).  Convex nonnegative |f'| stays convex under any
    power q >= 1, so one |f'| check gates both baselines.
    """
    catalog = catalog if catalog is not None else builtin_catalog()
    rng = SplitMix64(seed ^ _SALT["convex"])
    eligible = [fn for fn in catalog if check_convex_abs_d2(fn, fn.window)]
    baseline_ok = {
        fn.id: midpoint_convexity_holds(lambda x: abs(fn.d1(x)), fn.window)
        for fn in eligible
    }
    lines = []
    for fn in eligible:
        for iv in _case_intervals(fn, cases, rng):
            q_holder = rng.uniform(1.25, 4.0)
            q_pm = rng.uniform(1.0, 4.0)
            q_base = rng.uniform(1.0, 4.0)
            gap = midpoint_gap(fn, iv, GAP_TOL)
            d2a, d2b = abs(fn.d2(iv.a)), abs(fn.d2(iv.b))
            pair = ConjugatePair.from_q(q_holder)
            checks = [
                (TheoremId.CONVEX_Q1, bc.bound_convex_q1(iv, d2a, d2b)),
                (TheoremId.CONVEX_HOLDER, bc.bound_convex_holder(iv, d2a, d2b, pair)),
                (TheoremId.CONVEX_PM, bc.bound_convex_powermean(iv, d2a, d2b, q_pm)),
            ]
            if baseline_ok[fn.id]:
                d1a, d1b = abs(fn.d1(iv.a)), abs(fn.d1(iv.b))
                checks.append((TheoremId.BASELINE_Q1,
                               bc.baseline_first_derivative(iv, d1a, d1b, 1.0)))
                checks.append((TheoremId.BASELINE_PM,
                               bc.baseline_first_derivative(iv, d1a, d1b, q_base)))
            for theorem, bound in checks:
                slack = bound - gap
                lines.append(CheckLine(
                    suite="convex", function=fn.id, interval=iv, theorem=theorem.value,
                    bound=bound, gap=gap, slack=slack, passed=slack >= -SLACK_TOL))
    return lines


def monotone_direction(fn: TestFunction, iv: Interval,
                       samples: int = 65) -> Monotonicity | None:
    """Sampled monotonicity direction of |f''| on iv, or None if mixed."""
    step = iv.width / (samples - 1)
    gs = [abs(fn.d2(iv.a + i * step)) for i in range(samples)]
    tol = 1e-12 * max(1.0, max(gs))
    if all(hi >= lo - tol for lo, hi in zip(gs, gs[1:])):
        return Monotonicity.INCREASING
    if all(hi <= lo + tol for lo, hi in zip(gs, gs[1:])):
        return Monotonicity.DECREASING
    return None


def quasiconvex_suite(cases: int, seed: int,
                      catalog: list[TestFunction] | None = None) -> list[CheckLine]:
    """Validity sweep of the quasi-convex-|f''| bounds and the monotone corollary."""
    catalog = catalog if catalog is not None else builtin_catalog()
    rng = SplitMix64(seed ^ _SALT["quasiconvex"])
    eligible = [fn for fn in catalog if check_quasiconvex_abs_d2(fn, fn.window)]
    lines = []
    for fn in eligible:
        for iv in _case_intervals(fn, cases, rng):
            q_holder = rng.uniform(1.25, 4.0)
            q_pm = rng.uniform(1.0, 4.0)
            gap = midpoint_gap(fn, iv, GAP_TOL)
            d2a, d2b = abs(fn.d2(iv.a)), abs(fn.d2(iv.b))
            pair = ConjugatePair.from_q(q_holder)
            checks = [
                (TheoremId.QUASI_Q1, bq.bound_quasi_q1(iv, d2a, d2b)),
                (TheoremId.QUASI_HOLDER, bq.bound_quasi_holder(iv, d2a, d2b, pair)),
                (TheoremId.QUASI_PM, bq.bound_quasi_powermean(iv, d2a, d2b, q_pm)),
            ]
            direction = monotone_direction(fn, iv)
            if direction is not None:
                checks.append((TheoremId.QUASI_MONOTONE,
                               bq.bound_quasi_monotone(iv, fn, direction)))
            for theorem, bound in checks:
                slack = bound - gap
                lines.append(CheckLine(
                    suite="quasiconvex", function=fn.id, interval=iv,
                    theorem=theorem.value, bound=bound, gap=gap, slack=slack,
                    passed=slack >= -SLACK_TOL))
    return lines


def means_suite(cases: int, seed: int) -> list[CheckLine]:
    """Mean-chain, p-logarithmic monotonicity, and the six gap inequalities."""
    rng = SplitMix64(seed ^ _SALT["means"])
    lines = []
    for _ in range(cases):
        while True:
            x, y = rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0)
            a, b = (x, y) if x < y else (y, x)
            if b - a >= 0.05:
                break
        iv = Interval(a, b)
        n = rng.choice((-4, -3, -2, 3, 4, 5, 6))
        q = rng.uniform(1.05, 4.0)
        q_quasi = rng.uniform(1.0, 4.0)
        pair = ConjugatePair.from_q(q)

        m = all_means(a, b)
        lines.append(CheckLine(
            suite="means", function="pair", interval=iv, theorem="means_chain",
            bound=m["A"], gap=m["H"], slack=m["A"] - m["H"],
            passed=chain_check(a, b)))
        lp = lp_values_on_grid(a, b)
        lines.append(CheckLine(
            suite="means", function="pair", interval=iv, theorem="lp_monotone",
            bound=lp[-1], gap=lp[0], slack=lp[-1] - lp[0],
            passed=lp_monotone_nondecreasing(a, b)))
        for report in (
            check_prop_monomial_q1(a, b, n),
            check_prop_identric(a, b, pair),
            check_prop_monomial_pm(a, b, n, q),
            check_prop_reciprocal_pm(a, b, q),
            check_prop_reciprocal_quasi(a, b, q_quasi),
            check_prop_monomial_quasi(a, b, n, pair),
        ):
            lines.append(_line_from_report("means", report))
    return lines


def run_suite(name: str, cases: int, seed: int) -> list[CheckLine]:
    if name not in SUITE_NAMES:
        raise DomainError(f"unknown suite {name!r}")
    if cases < 1:
        raise DomainError(f"need at least one case, got {cases}")
    if name == "identity":
        return identity_suite(cases, seed)
    if name == "convex":
        return convex_suite(cases, seed)
    if name == "quasiconvex":
        return quasiconvex_suite(cases, seed)
    if name == "means":
        return means_suite(cases, seed)
    lines = []
    for sub in ("identity", "convex", "quasiconvex", "means"):
        lines.extend(run_suite(sub, cases, seed))
    return lines


# --- single bound reports (CLI `bound` command) ---------------------------

_CONVEX_THEOREMS = {TheoremId.CONVEX_Q1, TheoremId.CONVEX_HOLDER, TheoremId.CONVEX_PM}
_QUASI_THEOREMS = {TheoremId.QUASI_Q1, TheoremId.QUASI_MONOTONE,
                   TheoremId.QUASI_HOLDER, TheoremId.QUASI_PM}
_BASELINE_THEOREMS = {TheoremId.BASELINE_Q1, TheoremId.BASELINE_PM}

BOUND_THEOREMS = tuple(sorted(
    t.value for t in (_CONVEX_THEOREMS | _QUASI_THEOREMS | _BASELINE_THEOREMS)))


def _resolve_pair(q: float | None, p: float | None) -> ConjugatePair:
    if q is None and p is None:
        return ConjugatePair(2.0, 2.0)
    if q is not None and p is not None:
        return ConjugatePair(p, q)
    if q is not None:
        return ConjugatePair.from_q(q)
    return ConjugatePair.from_p(p)


def build_bound_report(fn: TestFunction, iv: Interval, theorem: str,
                       q: float | None = None, p: float | None = None,
                       gap_tol: float = GAP_TOL) -> BoundReport:
    """Evaluate one named bound on one catalog function and interval.

    Verifies the theorem's class hypothesis with the sampling checks and
    raises HypothesisError when it fails; raises DomainError for unknown
    theorems, bad exponents, or intervals outside the function's domain.
    """
    try:
        tid = TheoremId(theorem)
    except ValueError:
        raise DomainError(f"unknown theorem {theorem!r}") from None
    if tid not in _CONVEX_THEOREMS | _QUASI_THEOREMS | _BASELINE_THEOREMS:
        raise DomainError(f"{theorem!r} is not a bound theorem")
    if not fn.defined_on(iv):
        raise DomainError(f"[{iv.a}, {iv.b}] is outside the domain of {fn.id!r}")

    if tid in _CONVEX_THEOREMS and not check_convex_abs_d2(fn, iv):
        raise HypothesisError(f"class check failed: |f''| of {fn.id!r} is not convex on the interval")
    if tid in _QUASI_THEOREMS and not check_quasiconvex_abs_d2(fn, iv):
        raise HypothesisError(f"class check failed: |f''| of {fn.id!r} is not quasi-convex on the interval")
    if tid in _BASELINE_THEOREMS and not midpoint_convexity_holds(
            lambda x: abs(fn.d1(x)), iv):
        raise HypothesisError(f"class check failed: |f'| of {fn.id!r} is not convex on the interval")

    d2a, d2b = abs(fn.d2(iv.a)), abs(fn.d2(iv.b))
    exponent: ConjugatePair | float | None = None
    if tid is TheoremId.CONVEX_Q1:
        bound = bc.bound_convex_q1(iv, d2a, d2b)
    elif tid is TheoremId.CONVEX_HOLDER:
        pair = _resolve_pair(q, p)
        bound = bc.bound_convex_holder(iv, d2a, d2b, pair)
        exponent = pair
    elif tid is TheoremId.CONVEX_PM:
        exponent = 2.0 if q is None else q
        bound = bc.bound_convex_powermean(iv, d2a, d2b, exponent)
    elif tid is TheoremId.QUASI_Q1:
        bound = bq.bound_quasi_q1(iv, d2a, d2b)
    elif tid is TheoremId.QUASI_MONOTONE:
        direction = monotone_direction(fn, iv)
        if direction is None:
            raise HypothesisError(f"class check failed: |f''| of {fn.id!r} is not monotone on the interval")
        bound = bq.bound_quasi_monotone(iv, fn, direction)
    elif tid is TheoremId.QUASI_HOLDER:
        pair = _resolve_pair(q, p)
        bound = bq.bound_quasi_holder(iv, d2a, d2b, pair)
        exponent = pair
    elif tid is TheoremId.QUASI_PM:
        exponent = 2.0 if q is None else q
        bound = bq.bound_quasi_powermean(iv, d2a, d2b, exponent)
    else:
        d1a, d1b = abs(fn.d1(iv.a)), abs(fn.d1(iv.b))
        if tid is TheoremId.BASELINE_Q1:
            bound = bc.baseline_first_derivative(iv, d1a, d1b, 1.0)
        else:
            exponent = 2.0 if q is None else q
            bound = bc.baseline_first_derivative(iv, d1a, d1b, exponent)

    gap = midpoint_gap(fn, iv, gap_tol)
    return BoundReport.from_values(tid, fn.id, iv, bound, gap, exponent=exponent)
