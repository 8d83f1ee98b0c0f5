"""Exact rational scalars, the (p,q) parameter pair and twin-basic quantities.

Every algebraic identity in this package is checked in exact rational
arithmetic.  The scalar type is ``gmpy2.mpq`` when gmpy2 is installed
(much faster on big numerators) and ``fractions.Fraction`` otherwise;
both keep values in lowest terms with a positive denominator, parse the
same ``"num/den"`` literals and print them back identically, so the
choice is invisible to callers.

Floating point appears only where the theory itself is non-algebraic:
the real-exponent bracket and truncated series, carried by
:class:`FloatScalar` with explicit tolerances.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import (
    DegenerateRegimeError,
    NegativeArgumentError,
    NonPositiveBaseError,
    OutOfRangeError,
)

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rat


def rat(value: object) -> Rat:
    """Coerce ``value`` to the exact rational type.

    Accepts the backend type itself, ints, and strings in the literal
    form used by the CLI and JSON output: ``"7"``, ``"-1"``, ``"3/2"``.
    Floats are rejected on purpose: silently binarising 0.1 would poison
    exact identity checks.
    """
    if isinstance(value, float):
        raise TypeError("refusing to coerce float to exact rational; pass a string like '1/10'")
    return Rat(value)


def rat_str(value: object) -> str:
    """Literal form of an exact rational: ``"7"`` or ``"3/2"``."""
    return str(rat(value))


class Regime(enum.Enum):
    """Classification of |q/p| against 1, selecting the integral lattice."""

    RATIO_LT_ONE = "lt1"
    RATIO_GT_ONE = "gt1"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class PqParams:
    """The pair (p, q) with p != q and p, q != 0.

    Both restrictions are load bearing: p - q divides every bracket, and
    negative powers as well as the integral lattices divide by p and q.
    The regime is always derived from the stored values, never cached.
    """

    p: Rat
    q: Rat

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", rat(self.p))
        object.__setattr__(self, "q", rat(self.q))
        if self.p == self.q:
            raise ValueError("p and q must differ (p - q appears in every denominator)")
        if self.p == 0 or self.q == 0:
            raise ValueError("p and q must be nonzero")

    @property
    def regime(self) -> Regime:
        r = abs(self.q / self.p)
        if r < 1:
            return Regime.RATIO_LT_ONE
        if r > 1:
            return Regime.RATIO_GT_ONE
        return Regime.DEGENERATE

    def swapped(self) -> "PqParams":
        return PqParams(self.q, self.p)

    def as_floats(self) -> tuple[float, float]:
        return float(self.p), float(self.q)

    def __str__(self) -> str:
        return f"(p={self.p}, q={self.q})"


@dataclass(frozen=True)
class FloatScalar:
    """A double with the tolerances its comparisons should use."""

    value: float
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise ValueError(f"FloatScalar must be finite, got {self.value!r}")

    def close_to(self, other: float | "FloatScalar") -> bool:
        other_value = other.value if isinstance(other, FloatScalar) else other
        return math.isclose(self.value, other_value, rel_tol=self.rel_tol, abs_tol=self.abs_tol)

    def __float__(self) -> float:
        return self.value


def bracket(n: int, params: PqParams) -> Rat:
    """Twin-basic number [n] = (p^n - q^n)/(p - q), exact, any integer n.

    For n >= 1 this equals the sum p^{n-1} + p^{n-2} q + ... + q^{n-1};
    negative n is allowed because p and q are nonzero.
    """
    p, q = params.p, params.q
    return (p**n - q**n) / (p - q)


def bracket_alpha(alpha: float, params: PqParams) -> FloatScalar:
    """Real-exponent bracket (p^alpha - q^alpha)/(p - q) in floating point."""
    p, q = params.as_floats()
    if p <= 0 or q <= 0:
        raise NonPositiveBaseError(f"real exponents need p, q > 0, got p={p}, q={q}")
    return FloatScalar((p**alpha - q**alpha) / (p - q))


def pq_factorial(n: int, params: PqParams) -> Rat:
    """[n]! = [1][2]...[n], with [0]! = 1."""
    if n < 0:
        raise NegativeArgumentError(f"factorial needs n >= 0, got {n}")
    out = rat(1)
    for k in range(1, n + 1):
        out *= bracket(k, params)
    return out


def bracket_falling(n: int, k: int, params: PqParams) -> Rat:
    """The product [n][n-1]...[n-k+1], i.e. [n]!/[n-k]! without the division.

    Computed as a plain product so it stays defined even when some bracket
    vanishes (p = -q), where the factorial ratio would be 0/0.
    """
    if k < 0:
        raise NegativeArgumentError(f"need k >= 0, got {k}")
    out = rat(1)
    for j in range(n - k + 1, n + 1):
        out *= bracket(j, params)
    return out


def pq_binomial(n: int, k: int, params: PqParams) -> Rat:
    """(p,q)-binomial coefficient [n]!/([k]![n-k]!), 0 <= k <= n."""
    if k < 0 or k > n:
        raise OutOfRangeError(f"need 0 <= k <= n, got n={n}, k={k}")
    if params.regime is Regime.DEGENERATE and n >= 2:
        # [2] = p + q = 0 there, so the defining ratio is 0/0.
        raise DegenerateRegimeError("binomial coefficients are undefined at p = -q for n >= 2")
    return bracket_falling(n, k, params) / pq_factorial(k, params)
