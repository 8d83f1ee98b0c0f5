"""(p,q)-antiderivatives and the lattice-series (p,q)-integrals.

Every definite integral here is a geometric-lattice sum: the integrand is
sampled on points a*(q/p)^k (scaled by 1/p or 1/q) and the weighted terms
are added until a :class:`TruncationPolicy` says stop.  Convergence means
the last term fell below ``tail_tol`` in magnitude; divergence is declared
after ``divergence_window`` consecutive non-decreasing term magnitudes and
is reported as a status, never raised, so failure cases (1/x being the
canonical one) can be demonstrated rather than crashed on.

The |q/p| = 1 regime has no defined lattice and is rejected outright.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, NamedTuple, Optional

from .errors import DegenerateRegimeError, InvalidIntervalError, WrongRegimeError
from .polynomials import NumericFn, Polynomial, pq_derive_fn
from .scalars import PqParams, Regime, bracket, rat


@dataclass(frozen=True)
class TruncationPolicy:
    """Stopping rules for all series evaluations.

    ``tail_tol`` is absolute on the term magnitude; the tail estimate of a
    converged sum is the last included term, which bounds the true tail up
    to the geometric factor that made the series converge in the first
    place.
    """

    max_terms: int = 10_000
    tail_tol: float = 1e-12
    divergence_window: int = 8

    def __post_init__(self) -> None:
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not self.tail_tol > 0:
            raise ValueError("tail_tol must be > 0")
        if self.divergence_window < 2:
            raise ValueError("divergence_window must be >= 2")


DEFAULT_POLICY = TruncationPolicy()


class IntegralStatus(enum.Enum):
    CONVERGED = "converged"
    MAX_TERMS_REACHED = "max_terms"
    DIVERGENCE_DETECTED = "divergent"


_SEVERITY = {
    IntegralStatus.CONVERGED: 0,
    IntegralStatus.MAX_TERMS_REACHED: 1,
    IntegralStatus.DIVERGENCE_DETECTED: 2,
}


@dataclass(frozen=True)
class IntegralResult:
    value: float
    terms_used: int
    tail_estimate: float
    regime: Regime
    status: IntegralStatus

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "terms": self.terms_used,
            "tail": self.tail_estimate,
            "status": self.status.value,
            "regime": self.regime.value,
        }


class GapReport(NamedTuple):
    """Both sides of a two-sided identity and their absolute gap."""

    lhs: float
    rhs: float
    gap: float
    status: IntegralStatus


def _require_lattice(params: PqParams) -> Regime:
    regime = params.regime
    if regime is Regime.DEGENERATE:
        raise DegenerateRegimeError("|q/p| = 1 has no integral lattice")
    return regime


# consecutive sub-tolerance terms required before declaring convergence;
# guards against an integrand that merely has a zero on the lattice
_SMALL_RUN = 3


def _sum_series(terms: Iterator[float], policy: TruncationPolicy) -> tuple[float, int, float, IntegralStatus]:
    total = 0.0
    count = 0
    run = 1
    small_run = 0
    last_mag = 0.0
    for term in islice(terms, policy.max_terms):
        count += 1
        total += term
        mag = abs(term)
        if mag <= policy.tail_tol:
            small_run += 1
            if small_run >= _SMALL_RUN:
                return total, count, mag, IntegralStatus.CONVERGED
        else:
            small_run = 0
            if count > 1 and mag >= last_mag:
                run += 1
                if run >= policy.divergence_window:
                    return total, count, mag, IntegralStatus.DIVERGENCE_DETECTED
            else:
                run = 1
            last_mag = mag
    return total, count, last_mag, IntegralStatus.MAX_TERMS_REACHED


def _combine(a: IntegralResult, b: IntegralResult, value: float) -> IntegralResult:
    status = a.status if _SEVERITY[a.status] >= _SEVERITY[b.status] else b.status
    return IntegralResult(
        value=value,
        terms_used=a.terms_used + b.terms_used,
        tail_estimate=a.tail_estimate + b.tail_estimate,
        regime=a.regime,
        status=status,
    )


def zero_to_terms(f: NumericFn, a: float, params: PqParams) -> Iterator[float]:
    """Terms of the series for the integral of f over [0, a].

    Regime |q/p| < 1:  (p-q) a sum_k (q^k / p^{k+1}) f(a q^k / p^{k+1})
    Regime |q/p| > 1:  the same with p and q exchanged

    so the lattice always marches geometrically towards 0.  At p = 1 the
    first form is termwise the classical Jackson sum (1-q) a q^k f(a q^k).
    """
    p, q = params.as_floats()
    if _require_lattice(params) is Regime.RATIO_LT_ONE:
        pre, num, den = (p - q) * a, q, p
    else:
        pre, num, den = (q - p) * a, p, q
    ratio = num / den
    w = 1.0 / den
    while True:
        yield pre * w * f(a * w)
        w *= ratio


def to_infinity_terms(f: NumericFn, a: float, params: PqParams) -> Iterator[float]:
    """Terms of the series for the integral of f over [a, infinity).

    Same prefactor as :func:`zero_to_terms` with the reciprocal lattice:
    the sample points a (p/q)^k / q (respectively a (q/p)^k / p) grow away
    from zero, and together with the [0, a] lattice they tile exactly the
    bilateral lattice of the improper integral.
    """
    p, q = params.as_floats()
    if _require_lattice(params) is Regime.RATIO_LT_ONE:
        pre, num, den = (p - q) * a, p, q
    else:
        pre, num, den = (q - p) * a, q, p
    ratio = num / den
    w = 1.0 / den
    while True:
        yield pre * w * f(a * w)
        w *= ratio


def integral_zero_to(
    f: NumericFn, a: float, params: PqParams, policy: Optional[TruncationPolicy] = None
) -> IntegralResult:
    """Truncated series for the integral of f over [0, a], a >= 0."""
    regime = _require_lattice(params)
    if a < 0:
        raise InvalidIntervalError(f"need a >= 0, got {a}")
    policy = policy or DEFAULT_POLICY
    if a == 0:
        return IntegralResult(0.0, 0, 0.0, regime, IntegralStatus.CONVERGED)
    value, count, tail, status = _sum_series(zero_to_terms(f, a, params), policy)
    return IntegralResult(value, count, tail, regime, status)


def integral(
    f: NumericFn, a: float, b: float, params: PqParams, policy: Optional[TruncationPolicy] = None
) -> IntegralResult:
    """Integral over [a, b] as the difference of the two zero-based series."""
    if a < 0 or a >= b:
        raise InvalidIntervalError(f"need 0 <= a < b, got a={a}, b={b}")
    upper = integral_zero_to(f, b, params, policy)
    lower = integral_zero_to(f, a, params, policy)
    return _combine(upper, lower, upper.value - lower.value)


def integral_to_infinity(
    f: NumericFn, a: float, params: PqParams, policy: Optional[TruncationPolicy] = None
) -> IntegralResult:
    """Truncated series for the integral of f over [a, infinity), a > 0."""
    regime = _require_lattice(params)
    if a <= 0:
        raise InvalidIntervalError(f"need a > 0, got {a}")
    policy = policy or DEFAULT_POLICY
    value, count, tail, status = _sum_series(to_infinity_terms(f, a, params), policy)
    return IntegralResult(value, count, tail, regime, status)


def integral_improper(
    f: NumericFn, params: PqParams, policy: Optional[TruncationPolicy] = None
) -> IntegralResult:
    """Bilateral series for the integral of f over [0, infinity).

    The lattice is anchored at 1; each direction is truncated independently
    under the policy and a divergent direction shows up in the combined
    status.
    """
    _require_lattice(params)
    policy = policy or DEFAULT_POLICY
    down = integral_zero_to(f, 1.0, params, policy)
    up = integral_to_infinity(f, 1.0, params, policy)
    return _combine(down, up, down.value + up.value)


def integral_riemann_stieltjes(
    f: NumericFn,
    g: NumericFn,
    x: float,
    params: PqParams,
    policy: Optional[TruncationPolicy] = None,
) -> IntegralResult:
    """The sum for the integral of f against d_{p,q} g, |q/p| < 1 lattice.

    term_k = f(q^k x / p^{k+1}) * (g(q^k x / p^k) - g(q^{k+1} x / p^{k+1})),
    which telescopes to g(x) - g(0+) when f is identically 1.
    """
    regime = _require_lattice(params)
    if regime is not Regime.RATIO_LT_ONE:
        raise WrongRegimeError("the Riemann-Stieltjes form is derived for |q/p| < 1")
    if x <= 0:
        raise InvalidIntervalError(f"need x > 0, got {x}")
    policy = policy or DEFAULT_POLICY
    p, q = params.as_floats()
    ratio = q / p

    def terms() -> Iterator[float]:
        rk = 1.0
        while True:
            yield f(x * rk / p) * (g(x * rk) - g(x * rk * ratio))
            rk *= ratio

    value, count, tail, status = _sum_series(terms(), policy)
    return IntegralResult(value, count, tail, regime, status)


def antiderive_poly(f: Polynomial, params: PqParams, constant: object = 0) -> Polynomial:
    """The unique polynomial antiderivative with the given constant term.

    The x^n coefficient moves to x^{n+1} divided by [n+1]; differentiating
    the result reproduces f exactly.
    """
    out = [rat(constant)]
    for n, c in enumerate(f.coeffs):
        br = bracket(n + 1, params)
        if br == 0:
            raise DegenerateRegimeError(f"[{n + 1}] = 0 at p = -q; coefficient has no preimage")
        out.append(c / br)
    return Polynomial(out)


@dataclass(frozen=True)
class BoundednessReport:
    """Heuristic verdict on whether |f(x) x^alpha| stays bounded near 0."""

    bounded: bool
    observed_bound: float


def check_convergence_hypothesis(
    f: NumericFn, A: float, alpha: float, samples: int = 24, grid_ratio: float = 0.5
) -> BoundednessReport:
    """Sample |f(x) x^alpha| on the geometric grid x = A * grid_ratio^i.

    Declares "unbounded" when the values keep growing strictly towards
    x = 0 without stalling.  This is a sampling heuristic, not a proof:
    it looks at ``samples`` points and nothing else.
    """
    if not 0 <= alpha < 1:
        raise ValueError(f"need 0 <= alpha < 1, got {alpha}")
    if A <= 0:
        raise ValueError(f"need A > 0, got {A}")
    if samples < 8:
        raise ValueError(f"need samples >= 8, got {samples}")
    if not 0 < grid_ratio < 1:
        raise ValueError(f"need 0 < grid_ratio < 1, got {grid_ratio}")
    grid = [abs(f(A * grid_ratio**i)) * (A * grid_ratio**i) ** alpha for i in range(samples)]
    window = min(8, samples - 1)
    tail = grid[-(window + 1):]
    strictly_growing = all(later > earlier for earlier, later in zip(tail, tail[1:]))
    grew_enough = tail[0] == 0.0 or tail[-1] >= 1.5 * tail[0]
    return BoundednessReport(
        bounded=not (strictly_growing and grew_enough),
        observed_bound=max(grid),
    )


def _integral_any(
    f: NumericFn, a: float, b: float, params: PqParams, policy: Optional[TruncationPolicy]
) -> IntegralResult:
    """Dispatch over finite/infinite upper bounds, 0 <= a < b <= inf."""
    if math.isinf(b):
        if a == 0:
            return integral_improper(f, params, policy)
        return integral_to_infinity(f, a, params, policy)
    return integral(f, a, b, params, policy)


def newton_leibniz_check(
    F: NumericFn, a: float, b: float, params: PqParams, policy: Optional[TruncationPolicy] = None
) -> GapReport:
    """Integrate the (p,q)-derivative of F over [a, b] and compare to F(b) - F(a).

    The claim behind it needs F continuous at 0 (the caller asserts this);
    b may be math.inf, in which case F must accept infinity.
    """
    integrand = NumericFn(lambda t: pq_derive_fn(F, t, params))
    result = _integral_any(integrand, a, b, params, policy)
    rhs = F(b) - F(a)
    return GapReport(lhs=result.value, rhs=rhs, gap=abs(result.value - rhs), status=result.status)


def integrate_by_parts(
    f: NumericFn,
    g: NumericFn,
    a: float,
    b: float,
    params: PqParams,
    policy: Optional[TruncationPolicy] = None,
) -> GapReport:
    """Check the (p,q)-integration-by-parts identity on [a, b].

    lhs = integral of f(px) Dg(x); rhs = f(b)g(b) - f(a)g(a) minus the
    integral of g(qx) Df(x).  Both integrands sample the derivative
    numerically, so f and g should be ordinarily differentiable near 0.
    """
    p, q = params.as_floats()
    left_int = NumericFn(lambda t: f(p * t) * pq_derive_fn(g, t, params))
    right_int = NumericFn(lambda t: g(q * t) * pq_derive_fn(f, t, params))
    left = _integral_any(left_int, a, b, params, policy)
    right = _integral_any(right_int, a, b, params, policy)
    lhs = left.value
    rhs = f(b) * g(b) - f(a) * g(a) - right.value
    status = left.status if _SEVERITY[left.status] >= _SEVERITY[right.status] else right.status
    return GapReport(lhs=lhs, rhs=rhs, gap=abs(lhs - rhs), status=status)
