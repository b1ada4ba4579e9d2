"""The integral identity behind every bound, verified numerically.

For twice-differentiable f on [a, b]:

    (1/(b-a)) * int_a^b f - f((a+b)/2)
        = ((b-a)^2 / 4) * int_0^1 k(t) [f''(ta+(1-t)b) + f''(tb+(1-t)a)] dt

with k the peak kernel.  The leading coefficient is (b-a)^2/4, not /2: for
f = x^2 on [0, 1] the left side is 1/12 and the kernel integral is 1/3, so
a /2 coefficient would produce 1/6 and break the identity.  The /2
variant is kept around in tests as a documented regression.
"""

from __future__ import annotations

from .core import Interval, TestFunction
from .oracle import integrate

_LEFT = Interval(0.0, 0.5)
_RIGHT = Interval(0.5, 1.0)


def kernel_weighted_d2_integral(fn: TestFunction, iv: Interval,
                                tol: float = 1e-10) -> float:
    """int_0^1 k(t)*[f''(ta+(1-t)b) + f''(tb+(1-t)a)] dt to tolerance tol.

    Integrated separately on each side of the kernel knot at t = 1/2 so
    the adaptive rule only ever sees a smooth integrand.
    """
    a, b = iv.a, iv.b
    d2 = fn.d2

    def left(t: float) -> float:
        return t * t * (d2(t * a + (1.0 - t) * b) + d2(t * b + (1.0 - t) * a))

    def right(t: float) -> float:
        u = 1.0 - t
        return u * u * (d2(t * a + u * b) + d2(t * b + u * a))

    half = 0.5 * tol
    return integrate(left, _LEFT, half).value + integrate(right, _RIGHT, half).value


def identity_rhs(fn: TestFunction, iv: Interval, tol: float = 1e-10) -> float:
    """Right side of the identity: ((b-a)^2/4) * kernel-weighted f'' integral."""
    coeff = iv.width * iv.width / 4.0
    inner_tol = tol / coeff if coeff > 0.0 else tol
    return coeff * kernel_weighted_d2_integral(fn, iv, inner_tol)


def identity_lhs(fn: TestFunction, iv: Interval, tol: float = 1e-10) -> float:
    """Left side: signed mean value of f minus f at the midpoint."""
    res = integrate(fn.f, iv, tol * iv.width)
    return res.value / iv.width - fn.f(iv.midpoint)


def identity_residual(fn: TestFunction, iv: Interval, tol: float = 1e-10) -> float:
    """|LHS - RHS| of the identity; stays below 10*tol for smooth functions."""
    return abs(identity_lhs(fn, iv, tol) - identity_rhs(fn, iv, tol))
