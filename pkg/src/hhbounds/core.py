"""Shared domain types: intervals, function models, exponent pairs, reports.

Everything here is immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum

Evaluator = Callable[[float], float]

#: tolerance on 1/p + 1/q = 1 for conjugate exponent pairs
CONJUGATE_TOL = 1e-12

#: default slack tolerance when declaring a bound report valid
VALIDITY_TOL = 1e-9


class DomainError(ValueError):
    """An argument lies outside an operation's mathematical domain."""


class HypothesisError(RuntimeError):
    """A result was requested for inputs that violate its hypothesis."""


class EvaluationError(RuntimeError):
    """A function evaluation produced a non-finite value."""


class ConvergenceError(RuntimeError):
    """Adaptive refinement hit its depth or size cap before the tolerance."""


@dataclass(frozen=True)
class Interval:
    """Closed interval [a, b] with a strictly less than b."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"interval endpoints must be finite, got [{self.a}, {self.b}]")
        if not self.a < self.b:
            raise DomainError(f"interval requires a < b, got [{self.a}, {self.b}]")
        mid = 0.5 * (self.a + self.b)
        if not (self.a < mid < self.b):
            # adjacent floats: no representable interior point
            raise DomainError(f"interval [{self.a}, {self.b}] has no interior midpoint")

    @property
    def width(self) -> float:
        return self.b - self.a

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)

    def contains(self, other: Interval) -> bool:
        return self.a <= other.a and other.b <= self.b


def conjugate_of(p: float) -> float:
    """Conjugate exponent q = p/(p-1), so that 1/p + 1/q = 1.

    Requires p > 1; the map is an involution (q's conjugate is p again).
    """
    if not p > 1.0:
        raise DomainError(f"conjugate exponent needs p > 1, got {p}")
    return p / (p - 1.0)


@dataclass(frozen=True)
class ConjugatePair:
    """Exponent pair (p, q) with p, q > 1 and 1/p + 1/q = 1."""

    p: float
    q: float

    def __post_init__(self) -> None:
        if not (self.p > 1.0 and self.q > 1.0):
            raise DomainError(f"conjugate pair needs p, q > 1, got ({self.p}, {self.q})")
        if abs(1.0 / self.p + 1.0 / self.q - 1.0) > CONJUGATE_TOL:
            raise DomainError(f"({self.p}, {self.q}) is not a conjugate pair")

    @classmethod
    def from_p(cls, p: float) -> ConjugatePair:
        return cls(p, conjugate_of(p))

    @classmethod
    def from_q(cls, q: float) -> ConjugatePair:
        return cls(conjugate_of(q), q)


class FunctionClass(Enum):
    """Declared regularity class of |f''| on the function's window."""

    CONVEX_ABS_D2 = "convex_abs_d2"
    QUASICONVEX_ABS_D2 = "quasiconvex_abs_d2"
    NEITHER = "neither"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TestFunction:
    """An evaluable (f, f', f'') triple over a declared domain.

    ``domain`` is None when the function is defined on all reals; bounded
    domains keep singular functions (1/x, ln x) away from their poles.
    ``window`` is the canonical interval that sweeps sample subintervals
    from; for bounded domains it coincides with the domain.  The declared
    class is author-asserted metadata and is re-verified by the sampling
    checks rather than trusted.
    """

    id: str
    f: Evaluator
    d1: Evaluator
    d2: Evaluator
    window: Interval
    domain: Interval | None = None
    declared_class: FunctionClass = FunctionClass.UNKNOWN

    def __post_init__(self) -> None:
        if self.domain is not None and not self.domain.contains(self.window):
            raise DomainError(f"window of {self.id!r} exceeds its domain")

    def defined_on(self, iv: Interval) -> bool:
        return self.domain is None or self.domain.contains(iv)


class TheoremId(str, Enum):
    """Identifiers for the bound families a report can come from."""

    CONVEX_Q1 = "convex_q1"
    CONVEX_HOLDER = "convex_holder"
    CONVEX_PM = "convex_pm"
    BASELINE_Q1 = "baseline_q1"
    BASELINE_PM = "baseline_pm"
    QUASI_Q1 = "quasi_q1"
    QUASI_MONOTONE = "quasi_monotone"
    QUASI_HOLDER = "quasi_holder"
    QUASI_PM = "quasi_pm"
    PROP_MONOMIAL_Q1 = "prop_monomial_q1"
    PROP_IDENTRIC = "prop_identric"
    PROP_MONOMIAL_PM = "prop_monomial_pm"
    PROP_RECIPROCAL_PM = "prop_reciprocal_pm"
    PROP_RECIPROCAL_QUASI = "prop_reciprocal_quasi"
    PROP_MONOMIAL_QUASI = "prop_monomial_quasi"


@dataclass(frozen=True)
class BoundReport:
    """One bound applied to one function and interval.

    ``slack`` is bound minus true gap; ``valid`` means the slack is not
    materially negative.  ``extras`` carries family-specific diagnostics
    (e.g. an uncorrected literal constant for comparison).
    """

    theorem_id: TheoremId
    function_id: str
    interval: Interval
    bound: float
    true_gap: float
    slack: float
    valid: bool
    exponent: ConjugatePair | float | None = None
    extras: dict = field(default_factory=dict)

    @classmethod
    def from_values(
        cls,
        theorem_id: TheoremId,
        function_id: str,
        interval: Interval,
        bound: float,
        true_gap: float,
        *,
        exponent: ConjugatePair | float | None = None,
        tol: float = VALIDITY_TOL,
        extras: dict | None = None,
    ) -> BoundReport:
        slack = bound - true_gap
        return cls(
            theorem_id=theorem_id,
            function_id=function_id,
            interval=interval,
            bound=bound,
            true_gap=true_gap,
            slack=slack,
            valid=slack >= -tol,
            exponent=exponent,
            extras=extras or {},
        )


def polynomial(coeffs: Sequence[float], *, id: str | None = None,
               window: Interval | None = None) -> TestFunction:
    """Build a TestFunction from polynomial coefficients (constant first).

    Derivatives are exact.  Up to degree three |f''| is |constant| or
    |linear|, hence convex on any interval; higher degrees are left
    unclassified.
    """
    cs = [float(c) for c in coeffs]
    if not cs:
        raise DomainError("need at least one coefficient")
    d1cs = [i * c for i, c in enumerate(cs)][1:]
    d2cs = [i * c for i, c in enumerate(d1cs)][1:]

    def horner(coefs: list[float]) -> Evaluator:
        def ev(x: float) -> float:
            acc = 0.0
            for c in reversed(coefs):
                acc = acc * x + c
            return acc
        return ev

    degree = len(cs) - 1
    cls = FunctionClass.CONVEX_ABS_D2 if degree <= 3 else FunctionClass.UNKNOWN
    return TestFunction(
        id=id or f"poly{degree}",
        f=horner(cs),
        d1=horner(d1cs) if d1cs else (lambda x: 0.0),
        d2=horner(d2cs) if d2cs else (lambda x: 0.0),
        window=window or Interval(-1.0, 1.0),
        domain=None,
        declared_class=cls,
    )


def builtin_catalog() -> list[TestFunction]:
    """Reference functions with exact closed-form first and second derivatives.

    The positive-domain entries (1/x, -ln x, x^(5/2)) are restricted to
    [1/4, 4] so every evaluator is total on its declared domain.
    """
    pos = Interval(0.25, 4.0)
    convex = FunctionClass.CONVEX_ABS_D2
    return [
        TestFunction("x2", lambda x: x * x, lambda x: 2.0 * x, lambda x: 2.0,
                     window=Interval(-1.5, 1.5), declared_class=convex),
        TestFunction("x3", lambda x: x ** 3, lambda x: 3.0 * x * x, lambda x: 6.0 * x,
                     window=Interval(0.0, 2.0), declared_class=convex),
        TestFunction("x4", lambda x: x ** 4, lambda x: 4.0 * x ** 3, lambda x: 12.0 * x * x,
                     window=Interval(-1.5, 1.5), declared_class=convex),
        TestFunction("x5", lambda x: x ** 5, lambda x: 5.0 * x ** 4, lambda x: 20.0 * x ** 3,
                     window=Interval(-1.5, 1.5), declared_class=convex),
        TestFunction("inv_x", lambda x: 1.0 / x, lambda x: -1.0 / (x * x), lambda x: 2.0 / x ** 3,
                     window=pos, domain=pos, declared_class=convex),
        TestFunction("neg_ln", lambda x: -math.log(x), lambda x: -1.0 / x, lambda x: 1.0 / (x * x),
                     window=pos, domain=pos, declared_class=convex),
        TestFunction("exp", math.exp, math.exp, math.exp,
                     window=Interval(-1.0, 1.0), declared_class=convex),
        TestFunction("affine", lambda x: 3.0 * x + 1.0, lambda x: 3.0, lambda x: 0.0,
                     window=Interval(0.0, 2.0), declared_class=convex),
        # |f''| = 3.75*sqrt(x): increasing (quasi-convex) but strictly concave
        TestFunction("x_5_2", lambda x: x ** 2.5, lambda x: 2.5 * x ** 1.5,
                     lambda x: 3.75 * math.sqrt(x),
                     window=pos, domain=pos,
                     declared_class=FunctionClass.QUASICONVEX_ABS_D2),
        # |f''| = sin on [0, pi] is concave with interior peak: neither class
        TestFunction("sin", math.sin, math.cos, lambda x: -math.sin(x),
                     window=Interval(0.0, math.pi),
                     declared_class=FunctionClass.NEITHER),
    ]


def catalog_by_id() -> dict[str, TestFunction]:
    return {fn.id: fn for fn in builtin_catalog()}
