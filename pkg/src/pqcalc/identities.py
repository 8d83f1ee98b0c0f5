"""Seeded identity suite: every proposition the engine implements, as a check.

Each check draws random instances from a :class:`random.Random`, verifies
one labelled identity and reports a :class:`CheckResult`.  Algebraic laws
are checked in exact rational arithmetic (a failure means the identity is
false, not that a tolerance was tight); lattice-series checks are numeric
with the tolerances stated next to them.

Left-hand sides of derivative laws are genuine difference quotients of the
evaluated functions, so the checks do not reuse the code paths they judge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import islice
from random import Random
from typing import Callable

from .errors import PoleError
from .integration import (
    IntegralStatus,
    TruncationPolicy,
    antiderive_poly,
    check_convergence_hypothesis,
    integral_improper,
    integral_to_infinity,
    integral_zero_to,
    integrate_by_parts,
    integral_riemann_stieltjes,
    newton_leibniz_check,
    zero_to_terms,
)
from .polynomials import (
    NumericFn,
    Polynomial,
    eval_poly,
    pq_derive_poly,
    pq_derive_poly_k,
    pq_difference_quotient,
)
from .pqpower import (
    Orientation,
    PqPowerExpr,
    additive_law_check,
    derive_pq_power,
    derive_pq_power_k,
    derive_reversed_k,
    eval_pq_power,
    expand_expr,
    expand_pq_power,
    reciprocal_rules_check,
)
from .scalars import (
    PqParams,
    Rat,
    bracket,
    bracket_alpha,
    pq_binomial,
    rat,
)
from .taylor import (
    connect_monomial,
    connect_monomial_reversed,
    connect_power_to_power,
    heine_coefficients_match,
    heine_series_eval,
    q_binomial_reduction_check,
    taylor_expand,
    taylor_expand_reversed,
)


@dataclass
class CheckResult:
    label: str
    trials: int
    failures: int
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.failures == 0


# ---------------------------------------------------------------- sampling

_PARAM_POOL = [
    rat("1/3"), rat("1/2"), rat("2/3"), rat("3/2"), rat(2), rat(3), rat("5/2"),
    rat("-1/2"), rat("-1/3"), rat(-2),
]
# positive, ratio bounded away from 1: what the convergence theory covers
_POSITIVE_POOL = [rat("1/3"), rat("1/2"), rat(1), rat("3/2"), rat(2), rat(3)]
# the parameter set used by the Taylor round-trip checks
_TAYLOR_POOL = [rat("1/3"), rat("-1/3"), rat("1/2"), rat("-1/2"), rat(2), rat(3), rat("5/2")]


def _rand_rat(rng: Random, max_num: int = 8, max_den: int = 5, nonzero: bool = False) -> Rat:
    while True:
        value = rat(rng.randint(-max_num, max_num)) / rng.randint(1, max_den)
        if value != 0 or not nonzero:
            return value


def _rand_params(rng: Random, pool: list | None = None) -> PqParams:
    pool = pool if pool is not None else _PARAM_POOL
    while True:
        p, q = rng.choice(pool), rng.choice(pool)
        if p != q and p != -q:
            return PqParams(p, q)


def _rand_positive_params(rng: Random) -> PqParams:
    while True:
        p, q = rng.choice(_POSITIVE_POOL), rng.choice(_POSITIVE_POOL)
        if p == q:
            continue
        ratio = abs(q / p)
        # keep the lattice decay away from 1 so series settle quickly
        if ratio <= rat("3/4") or ratio >= rat("4/3"):
            return PqParams(p, q)


def _rand_poly(rng: Random, max_deg: int, max_num: int = 9, max_den: int = 5) -> Polynomial:
    degree = rng.randint(0, max_deg)
    return Polynomial(_rand_rat(rng, max_num, max_den) for _ in range(degree + 1))


def _rand_x(rng: Random, avoid: Callable[[Rat], bool] | None = None) -> Rat:
    """A nonzero rational sample point, resampled away from poles."""
    for _ in range(200):
        x = _rand_rat(rng, max_num=9, max_den=5, nonzero=True)
        if avoid is None or not avoid(x):
            return x
    raise RuntimeError("could not find a safe sample point")


def _run(rng: Random, trials: int, one_trial: Callable[[Random], bool]) -> tuple[int, int]:
    failures = 0
    for _ in range(trials):
        if not one_trial(rng):
            failures += 1
    return trials, failures


# ------------------------------------------------------ derivative algebra

def check_linearity(rng: Random, trials: int) -> CheckResult:
    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        f, g = _rand_poly(rng, 5), _rand_poly(rng, 5)
        a, b = _rand_rat(rng), _rand_rat(rng)
        lhs = pq_derive_poly(a * f + b * g, params)
        rhs = a * pq_derive_poly(f, params) + b * pq_derive_poly(g, params)
        return lhs == rhs

    return CheckResult("linearity", *_run(rng, trials, trial))


def _product_rule_trial(rng: Random, first_form: bool) -> bool:
    params = _rand_params(rng)
    p, q = params.p, params.q
    f, g = _rand_poly(rng, 4), _rand_poly(rng, 4)
    df, dg = pq_derive_poly(f, params), pq_derive_poly(g, params)
    x = _rand_x(rng)
    lhs = eval_poly(pq_derive_poly(f * g, params), x)
    if first_form:
        rhs = eval_poly(f, p * x) * eval_poly(dg, x) + eval_poly(g, q * x) * eval_poly(df, x)
    else:
        rhs = eval_poly(g, p * x) * eval_poly(df, x) + eval_poly(f, q * x) * eval_poly(dg, x)
    return lhs == rhs


def check_product_rule_1(rng: Random, trials: int) -> CheckResult:
    return CheckResult("product-rule-1", *_run(rng, trials, lambda r: _product_rule_trial(r, True)))


def check_product_rule_2(rng: Random, trials: int) -> CheckResult:
    return CheckResult("product-rule-2", *_run(rng, trials, lambda r: _product_rule_trial(r, False)))


def _quotient_rule_trial(rng: Random, first_form: bool) -> bool:
    params = _rand_params(rng)
    p, q = params.p, params.q
    f = _rand_poly(rng, 3)
    while True:
        g = _rand_poly(rng, 3)
        if not g.is_zero():
            break
    x = _rand_x(rng, avoid=lambda t: eval_poly(g, p * t) == 0 or eval_poly(g, q * t) == 0)
    lhs = pq_difference_quotient(lambda t: eval_poly(f, t) / eval_poly(g, t), x, params)
    df_x = eval_poly(pq_derive_poly(f, params), x)
    dg_x = eval_poly(pq_derive_poly(g, params), x)
    denom = eval_poly(g, p * x) * eval_poly(g, q * x)
    if first_form:
        rhs = (eval_poly(g, q * x) * df_x - eval_poly(f, q * x) * dg_x) / denom
    else:
        rhs = (eval_poly(g, p * x) * df_x - eval_poly(f, p * x) * dg_x) / denom
    return lhs == rhs


def check_quotient_rule_1(rng: Random, trials: int) -> CheckResult:
    return CheckResult("quotient-rule-1", *_run(rng, trials, lambda r: _quotient_rule_trial(r, True)))


def check_quotient_rule_2(rng: Random, trials: int) -> CheckResult:
    return CheckResult("quotient-rule-2", *_run(rng, trials, lambda r: _quotient_rule_trial(r, False)))


# -------------------------------------------------------- power basis laws

def check_derule1(rng: Random, trials: int) -> CheckResult:
    """D (x (-) a)^n = [n] (px (-) a)^{n-1} as polynomials, n >= 0."""

    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        a = _rand_rat(rng)
        n = rng.randint(0, 6)
        lhs = pq_derive_poly(expand_pq_power(a, n, params), params)
        if n == 0:
            return lhs.is_zero()
        residual = PqPowerExpr(a, n - 1, params, gamma=params.p)
        return lhs == bracket(n, params) * expand_expr(residual)

    return CheckResult("derule1", *_run(rng, trials, trial))


def check_derule2(rng: Random, trials: int) -> CheckResult:
    """Scaled law D (g x (-) a)^n = g [n] (g p x (-) a)^{n-1} as polynomials."""

    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        a = _rand_rat(rng)
        gamma = _rand_rat(rng, nonzero=True)
        n = rng.randint(1, 5)
        e = PqPowerExpr(a, n, params, gamma=gamma)
        coeff, residual = derive_pq_power(e)
        if coeff != gamma * bracket(n, params) or residual.gamma != gamma * params.p:
            return False
        return pq_derive_poly(expand_expr(e), params) == coeff * expand_expr(residual)

    return CheckResult("derule2", *_run(rng, trials, trial))


def check_derule3(rng: Random, trials: int) -> CheckResult:
    """k-fold closed form on the forward basis, plus its coefficient recursion."""

    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        a = _rand_rat(rng)
        n = rng.randint(0, 6)
        f = expand_pq_power(a, n, params)
        previous = None
        for k in range(n + 1):
            coeff, residual = derive_pq_power_k(a, n, k, params)
            if pq_derive_poly_k(f, k, params) != coeff * expand_expr(residual):
                return False
            if previous is not None:
                # coeff(k)/coeff(k-1) = p^{k-1} [n-k+1]
                if coeff != previous * params.p ** (k - 1) * bracket(n - k + 1, params):
                    return False
            previous = coeff
        return True

    return CheckResult("derule3", *_run(rng, trials, trial))


def check_der3(rng: Random, trials: int) -> CheckResult:
    """Single-derivative law for every integer n in [-4, 6], pointwise exact."""

    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        a = _rand_rat(rng, nonzero=True)
        for n in range(-4, 7):
            e = PqPowerExpr(a, n, params)
            coeff, residual = derive_pq_power(e)

            def poles(t: Rat) -> bool:
                try:
                    eval_pq_power(e, params.p * t)
                    eval_pq_power(e, params.q * t)
                    eval_pq_power(residual, t)
                except PoleError:
                    return True
                return False

            x = _rand_x(rng, avoid=poles)
            lhs = pq_difference_quotient(lambda t: eval_pq_power(e, t), x, params)
            rhs = rat(0) if coeff == 0 else coeff * eval_pq_power(residual, x)
            if lhs != rhs:
                return False
        return True

    return CheckResult("der3", *_run(rng, trials, trial))


def check_derule4(rng: Random, trials: int) -> CheckResult:
    """k-fold closed form on the reversed basis, as polynomials."""

    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        a = _rand_rat(rng)
        n = rng.randint(0, 5)
        f = expand_expr(PqPowerExpr(a, n, params, orientation=Orientation.A_MINUS_X))
        for k in range(n + 1):
            coeff, residual = derive_reversed_k(a, n, k, params)
            if pq_derive_poly_k(f, k, params) != coeff * expand_expr(residual):
                return False
        return True

    return CheckResult("derule4", *_run(rng, trials, trial))


def _reciprocal_trial(rng: Random, which: int) -> bool:
    params = _rand_params(rng)
    a = _rand_rat(rng, nonzero=True)
    n = rng.randint(0, 4)

    def poles(t: Rat) -> bool:
        p, q = params.p, params.q
        for orientation in (Orientation.X_MINUS_A, Orientation.A_MINUS_X):
            base = PqPowerExpr(a, n, params, orientation=orientation)
            if eval_pq_power(base, p * t) == 0 or eval_pq_power(base, q * t) == 0:
                return True
        up_q = PqPowerExpr(a, n + 1, params, gamma=params.q)
        up_p = PqPowerExpr(a, n + 1, params, gamma=params.p, orientation=Orientation.A_MINUS_X)
        return eval_pq_power(up_q, t) == 0 or eval_pq_power(up_p, t) == 0

    x = _rand_x(rng, avoid=poles)
    return reciprocal_rules_check(a, n, params, x)[which]


def check_r1(rng: Random, trials: int) -> CheckResult:
    return CheckResult("r1", *_run(rng, trials, lambda r: _reciprocal_trial(r, 0)))


def check_r2(rng: Random, trials: int) -> CheckResult:
    return CheckResult("r2", *_run(rng, trials, lambda r: _reciprocal_trial(r, 1)))


def check_r3(rng: Random, trials: int) -> CheckResult:
    return CheckResult("r3", *_run(rng, trials, lambda r: _reciprocal_trial(r, 2)))


def check_expand1(rng: Random, trials: int) -> CheckResult:
    """Additive law over the full sign grid m, n in [-3, 3]^2."""

    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        a = _rand_rat(rng, nonzero=True)
        for m in range(-3, 4):
            for n in range(-3, 4):
                for _ in range(50):
                    x = _rand_rat(rng, nonzero=True)
                    try:
                        if not additive_law_check(a, m, n, params, x):
                            return False
                        break
                    except PoleError:
                        continue
                else:
                    return False
        return True

    return CheckResult("expand1", *_run(rng, trials, trial))


def check_negdef(rng: Random, trials: int) -> CheckResult:
    """(x (-) a)^{-n} (p^{-n} x (-) q^{-n} a)^n = 1 at non-pole points."""

    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        p, q = params.p, params.q
        a = _rand_rat(rng, nonzero=True)
        n = rng.randint(0, 4)
        negative = PqPowerExpr(a, -n, params)
        partner = PqPowerExpr(q**-n * a, n, params, gamma=p**-n)

        def poles(t: Rat) -> bool:
            try:
                eval_pq_power(negative, t)
            except PoleError:
                return True
            return False

        x = _rand_x(rng, avoid=poles)
        return eval_pq_power(negative, x) * eval_pq_power(partner, x) == 1

    return CheckResult("negdef", *_run(rng, trials, trial))


def check_expand_eval_coherence(rng: Random, trials: int) -> CheckResult:
    """eval of the product form equals eval of the expanded polynomial."""

    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        e = PqPowerExpr(
            _rand_rat(rng),
            rng.randint(0, 6),
            params,
            gamma=_rand_rat(rng, nonzero=True),
            orientation=rng.choice((Orientation.X_MINUS_A, Orientation.A_MINUS_X)),
        )
        x = _rand_rat(rng)
        return eval_pq_power(e, x) == eval_poly(expand_expr(e), x)

    return CheckResult("expand-eval-coherence", *_run(rng, trials, trial))


def check_reversed_basis_distinct(rng: Random, trials: int) -> CheckResult:
    """Witness that (a (-) x)^n is not (-1)^n (x (-) a)^n when p != q."""
    params = PqParams(2, 1)
    forward = eval_pq_power(PqPowerExpr(0, 2, params), 1)
    reverse = eval_pq_power(PqPowerExpr(0, 2, params, orientation=Orientation.A_MINUS_X), 1)
    distinct = forward == 2 and reverse == 1 and forward != (-1) ** 2 * reverse
    return CheckResult("reversed-basis-distinct", 1, 0 if distinct else 1)


# ------------------------------------------------------------- scalar laws

def check_bracket_invariants(rng: Random, trials: int) -> CheckResult:
    """Symmetry, the sum form, the q-reduction, binomial symmetry and scaling."""

    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        p, q = params.p, params.q
        n = rng.randint(-5, 8)
        if bracket(n, params) != bracket(n, params.swapped()):
            return False
        m = rng.randint(1, 8)
        if bracket(m, params) != sum(p ** (m - 1 - k) * q**k for k in range(m)):
            return False
        if q != 1:
            jackson = PqParams(1, q)
            if bracket(m, jackson) != (1 - q**m) / (1 - q):
                return False
        k = rng.randint(0, m)
        if pq_binomial(m, k, params) != pq_binomial(m, m - k, params):
            return False
        scaled = PqParams(1, q / p)
        if pq_binomial(m, k, params) != p ** (k * (m - k)) * pq_binomial(m, k, scaled):
            return False
        if p > 0 and q > 0:
            if not bracket_alpha(float(m), params).close_to(float(bracket(m, params))):
                return False
        return True

    return CheckResult("bracket-invariants", *_run(rng, trials, trial))


# ------------------------------------------------------------ Taylor layer

def _taylor_trial(rng: Random, reverse: bool) -> bool:
    params = _rand_params(rng, pool=_TAYLOR_POOL)
    f = Polynomial(
        rat(rng.randint(-50, 50)) / rng.randint(1, 50) for _ in range(rng.randint(1, 9))
    )
    a = _rand_rat(rng)
    expand = taylor_expand_reversed if reverse else taylor_expand
    expansion = expand(f, a, params)
    if expansion.to_polynomial(params) != f:
        return False
    if not f.is_zero() and len(expansion.coeffs) != len(f.coeffs):
        return False
    return True


def check_taylor_roundtrip(rng: Random, trials: int) -> CheckResult:
    return CheckResult("taylor-roundtrip", *_run(rng, trials, lambda r: _taylor_trial(r, False)))


def check_taylor_roundtrip_reversed(rng: Random, trials: int) -> CheckResult:
    return CheckResult(
        "taylor-roundtrip-reversed", *_run(rng, trials, lambda r: _taylor_trial(r, True))
    )


def _connect_monomial_trial(rng: Random, reverse: bool) -> bool:
    params = _rand_params(rng, pool=_TAYLOR_POOL)
    n = rng.randint(0, 8)
    a = _rand_rat(rng)
    if reverse:
        coeffs = connect_monomial_reversed(n, a, params)
        expansion = taylor_expand_reversed(Polynomial.monomial(n), a, params)
    else:
        coeffs = connect_monomial(n, a, params)
        expansion = taylor_expand(Polynomial.monomial(n), a, params)
    padded = expansion.coeffs + (rat(0),) * (len(coeffs) - len(expansion.coeffs))
    return coeffs == padded


def check_conec1(rng: Random, trials: int) -> CheckResult:
    return CheckResult("conec1", *_run(rng, trials, lambda r: _connect_monomial_trial(r, False)))


def check_conec2(rng: Random, trials: int) -> CheckResult:
    return CheckResult("conec2", *_run(rng, trials, lambda r: _connect_monomial_trial(r, True)))


def _connect_power_trial(rng: Random, orientation: Orientation) -> bool:
    params = _rand_params(rng, pool=_TAYLOR_POOL)
    n = rng.randint(0, 6)
    a, b = _rand_rat(rng), _rand_rat(rng)
    coeffs = connect_power_to_power(b, a, n, params, orientation)
    lhs = expand_expr(PqPowerExpr(b, n, params, orientation=orientation))
    rhs = Polynomial.zero()
    for k, c in enumerate(coeffs):
        rhs = rhs + c * expand_expr(PqPowerExpr(a, k, params, orientation=orientation))
    return lhs == rhs


def check_conecc3(rng: Random, trials: int) -> CheckResult:
    return CheckResult(
        "conecc3", *_run(rng, trials, lambda r: _connect_power_trial(r, Orientation.X_MINUS_A))
    )


def check_conecc4(rng: Random, trials: int) -> CheckResult:
    return CheckResult(
        "conecc4", *_run(rng, trials, lambda r: _connect_power_trial(r, Orientation.A_MINUS_X))
    )


def check_qbin(rng: Random, trials: int) -> CheckResult:
    """Classical q-binomial theorem instances at p = 1, exact."""

    def trial(rng: Random) -> bool:
        a = rat(rng.randint(1, 9)) / rng.randint(10, 20)
        b = rat(rng.randint(1, 9)) / rng.randint(10, 20)
        q = rat(rng.randint(1, 9)) / rng.randint(10, 20)
        return q_binomial_reduction_check(a, b, rng.randint(0, 6), q)

    return CheckResult("qbin", *_run(rng, trials, trial))


def check_heine_coefficients(rng: Random, trials: int) -> CheckResult:
    """Claimed reciprocal-power coefficients against the long-division oracle.

    At p = 1 the claim is the classical Heine binomial formula and must
    match; away from p = 1 the suite only reports the verdict, since the
    claim is stated without proof there.
    """
    failures = 0
    notes = []
    cases = 0
    for params in (
        PqParams(1, rat("1/2")),
        PqParams(1, rat("1/3")),
        PqParams(rat("3/2"), rat("1/2")),
        PqParams(2, rat("1/3")),
    ):
        for n in (1, 2, 3):
            cases += 1
            matched = heine_coefficients_match(n, params, num_terms=8)
            verdict = "MATCH" if matched else "MISMATCH"
            notes.append(f"p={params.p}, q={params.q}, n={n}: {verdict}")
            if params.p == 1 and not matched:
                failures += 1
    return CheckResult("heine-coefficients", cases, failures, tuple(notes))


def check_heine_series(rng: Random, trials: int) -> CheckResult:
    """Truncated series against the direct reciprocal product, p = 1, 1e-8."""
    failures = 0
    cases = 0
    for q_exact in (rat("1/2"), rat("1/3")):
        params = PqParams(1, q_exact)
        q = float(q_exact)
        for n in (1, 2, 3):
            for x in (0.2, 0.25):
                cases += 1
                product = 1.0
                for j in range(n):
                    product *= 1 - q**j * x
                value = heine_series_eval(n, x, params)
                if abs(value - 1.0 / product) > 1e-8:
                    failures += 1
    return CheckResult("heine-series", cases, failures)


# --------------------------------------------------------- integration layer

def check_antiderivative_roundtrip(rng: Random, trials: int) -> CheckResult:
    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        f = _rand_poly(rng, 10)
        constant = _rand_rat(rng)
        F = antiderive_poly(f, params, constant)
        if pq_derive_poly(F, params) != f:
            return False
        constant_term = F.coeffs[0] if F.coeffs else rat(0)
        return constant_term == constant

    return CheckResult("antiderivative-roundtrip", *_run(rng, trials, trial))


def check_telescoping_partial_sum(rng: Random, trials: int) -> CheckResult:
    """Exact: N+1 series terms of the integral of DF equal F(a) - F(a r^{N+1})."""

    def trial(rng: Random) -> bool:
        params = _rand_params(rng)
        p, q = params.p, params.q
        F = _rand_poly(rng, 6)
        dF = pq_derive_poly(F, params)
        a = rat(rng.randint(1, 8)) / rng.randint(1, 5)
        count = rng.randint(1, 8)
        if abs(q / p) < 1:
            pre, num, den = (p - q) * a, q, p
        else:
            pre, num, den = (q - p) * a, p, q
        total = rat(0)
        w = 1 / rat(den)
        for _ in range(count):
            total += pre * w * eval_poly(dF, a * w)
            w *= num / rat(den)
        deep = a * (num / rat(den)) ** count
        return total == eval_poly(F, a) - eval_poly(F, deep)

    return CheckResult("telescoping-partial-sum", *_run(rng, trials, trial))


def check_monomial_integral(rng: Random, trials: int) -> CheckResult:
    """Integral of x^n over [0, a] equals a^{n+1}/[n+1] within 1e-9, <= 500 terms."""
    failures = 0
    cases = 0
    for p, q in ((rat(1), rat("1/3")), (rat(1), rat("1/2")), (rat(1), rat(3)), (rat("2/3"), rat(2))):
        params = PqParams(p, q)
        for n in range(7):
            for a in (0.5, 1.0, 2.0):
                cases += 1
                result = integral_zero_to(NumericFn(lambda x, n=n: x**n), a, params)
                target = a ** (n + 1) / float(bracket(n + 1, params))
                ok = (
                    result.status is IntegralStatus.CONVERGED
                    and result.terms_used <= 500
                    and abs(result.value - target) < 1e-9
                )
                if not ok:
                    failures += 1
    return CheckResult("monomial-integral", cases, failures)


def check_jackson_reduction(rng: Random, trials: int) -> CheckResult:
    """At p = 1 the series terms are the classical Jackson terms, 1e-15 relative."""
    params = PqParams(1, rat("1/2"))
    q = 0.5
    failures = 0
    cases = 0
    for f in (
        NumericFn(lambda x: 1.0 / (1.0 + x)),
        NumericFn(lambda x: x * x - 3.0 * x),
        NumericFn(lambda x: math.exp(-x)),
    ):
        for a in (0.5, 1.0, 2.0):
            cases += 1
            ours = list(islice(zero_to_terms(f, a, params), 30))
            jackson = [(1 - q) * a * q**k * f(q**k * a) for k in range(30)]
            if not all(
                abs(x - y) <= 1e-15 * max(abs(x), abs(y)) or x == y == 0.0
                for x, y in zip(ours, jackson)
            ):
                failures += 1
    return CheckResult("jackson-reduction", cases, failures)


def check_regime_symmetry(rng: Random, trials: int) -> CheckResult:
    """Swapping p and q leaves the [0, a] integral unchanged within 1e-10."""

    def trial(rng: Random) -> bool:
        params = _rand_positive_params(rng)
        f = NumericFn.from_polynomial(_rand_poly(rng, 5, max_num=6, max_den=3))
        a = rng.choice((0.5, 1.0, 2.0))
        direct = integral_zero_to(f, a, params)
        swapped = integral_zero_to(f, a, params.swapped())
        return abs(direct.value - swapped.value) < 1e-10

    return CheckResult("regime-symmetry", *_run(rng, trials, trial))


def check_fundamental_theorem(rng: Random, trials: int) -> CheckResult:
    """Integral of DF over [a, b] against F(b) - F(a), gap < 1e-8."""
    failures = 0
    cases = 0
    for _ in range(trials):
        params = _rand_positive_params(rng)
        F = NumericFn.from_polynomial(_rand_poly(rng, 6, max_num=10, max_den=4))
        for a, b in ((0.0, 1.0), (1.0, 2.0), (0.5, 3.0)):
            cases += 1
            report = newton_leibniz_check(F, a, b, params)
            if report.gap >= 1e-8 or report.status is not IntegralStatus.CONVERGED:
                failures += 1
    return CheckResult("fundamental-theorem", cases, failures)


def check_integration_by_parts(rng: Random, trials: int) -> CheckResult:
    """Both sides of the by-parts identity, gap < 1e-8 on (0,1) and (1,2)."""
    failures = 0
    cases = 0
    for _ in range(trials):
        params = _rand_positive_params(rng)
        f = NumericFn.from_polynomial(_rand_poly(rng, 4, max_num=8, max_den=4))
        g = NumericFn.from_polynomial(_rand_poly(rng, 4, max_num=8, max_den=4))
        for a, b in ((0.0, 1.0), (1.0, 2.0)):
            cases += 1
            report = integrate_by_parts(f, g, a, b, params)
            if report.gap >= 1e-8:
                failures += 1
    return CheckResult("integration-by-parts", cases, failures)


def check_divergence_demo(rng: Random, trials: int) -> CheckResult:
    """1/x must be detected divergent fast, and flagged unbounded at every alpha."""
    failures = 0
    notes = []
    recip = NumericFn(lambda x: 1.0 / x)
    result = integral_zero_to(recip, 1.0, PqParams(2, 1))
    if result.status is not IntegralStatus.DIVERGENCE_DETECTED or result.terms_used > 64:
        failures += 1
    notes.append(f"1/x on (0,1], q/p=1/2: {result.status.value} after {result.terms_used} terms")
    for alpha in (0.0, 0.25, 0.5, 0.75):
        report = check_convergence_hypothesis(recip, 1.0, alpha)
        if report.bounded:
            failures += 1
    if not check_convergence_hypothesis(NumericFn(lambda x: 1.0), 1.0, 0.5).bounded:
        failures += 1
    if not check_convergence_hypothesis(NumericFn(lambda x: x**-0.25), 1.0, 0.5).bounded:
        failures += 1
    return CheckResult("divergence-demo", 7, failures, tuple(notes))


def check_improper_split(rng: Random, trials: int) -> CheckResult:
    """[0,1] + [1,inf) must reassemble the bilateral improper sum."""
    policy = TruncationPolicy()
    failures = 0
    cases = 0
    witness = NumericFn(lambda x: x if x <= 1 else x**-3)
    smooth = NumericFn(lambda x: x / (1 + x**4))
    for f in (witness, smooth):
        for params in (PqParams(1, rat("1/2")), PqParams(2, rat("2/3")), PqParams(rat("1/2"), rat("3/2"))):
            cases += 1
            down = integral_zero_to(f, 1.0, params, policy)
            up = integral_to_infinity(f, 1.0, params, policy)
            whole = integral_improper(f, params, policy)
            ok = (
                down.status is IntegralStatus.CONVERGED
                and up.status is IntegralStatus.CONVERGED
                and whole.status is IntegralStatus.CONVERGED
                and abs(whole.value - (down.value + up.value)) <= 2 * policy.tail_tol
            )
            if not ok:
                failures += 1
    return CheckResult("improper-split", cases, failures)


def check_riemann_stieltjes(rng: Random, trials: int) -> CheckResult:
    """g = id reduces to the plain integral; f = 1 telescopes to g(x) - g(0)."""

    def trial(rng: Random) -> bool:
        while True:
            params = _rand_positive_params(rng)
            if params.regime.value == "lt1":
                break
        f = NumericFn.from_polynomial(_rand_poly(rng, 4, max_num=6, max_den=3))
        x = rng.choice((0.5, 1.0, 2.0))
        reduced = integral_riemann_stieltjes(f, NumericFn(lambda t: t), x, params)
        plain = integral_zero_to(f, x, params)
        if abs(reduced.value - plain.value) > 1e-10:
            return False
        g_poly = _rand_poly(rng, 3, max_num=6, max_den=3)
        g = NumericFn.from_polynomial(g_poly)
        telescoped = integral_riemann_stieltjes(NumericFn(lambda t: 1.0), g, x, params)
        target = g(x) - float(eval_poly(g_poly, rat(0)))
        return abs(telescoped.value - target) < 1e-9

    return CheckResult("riemann-stieltjes", *_run(rng, trials, trial))


def check_forced_failure(rng: Random, trials: int) -> CheckResult:
    """Deliberately false identity: validates that failures are reported."""
    return CheckResult("self-test-forced-failure", trials, trials, ("intentional failure",))


# ----------------------------------------------------------------- registry

CHECKS: dict[str, Callable[[Random, int], CheckResult]] = {
    "linearity": check_linearity,
    "product-rule-1": check_product_rule_1,
    "product-rule-2": check_product_rule_2,
    "quotient-rule-1": check_quotient_rule_1,
    "quotient-rule-2": check_quotient_rule_2,
    "derule1": check_derule1,
    "derule2": check_derule2,
    "derule3": check_derule3,
    "der3": check_der3,
    "derule4": check_derule4,
    "r1": check_r1,
    "r2": check_r2,
    "r3": check_r3,
    "expand1": check_expand1,
    "negdef": check_negdef,
    "expand-eval-coherence": check_expand_eval_coherence,
    "reversed-basis-distinct": check_reversed_basis_distinct,
    "bracket-invariants": check_bracket_invariants,
    "taylor-roundtrip": check_taylor_roundtrip,
    "taylor-roundtrip-reversed": check_taylor_roundtrip_reversed,
    "conec1": check_conec1,
    "conec2": check_conec2,
    "conecc3": check_conecc3,
    "conecc4": check_conecc4,
    "qbin": check_qbin,
    "heine-coefficients": check_heine_coefficients,
    "heine-series": check_heine_series,
    "antiderivative-roundtrip": check_antiderivative_roundtrip,
    "telescoping-partial-sum": check_telescoping_partial_sum,
    "monomial-integral": check_monomial_integral,
    "jackson-reduction": check_jackson_reduction,
    "regime-symmetry": check_regime_symmetry,
    "fundamental-theorem": check_fundamental_theorem,
    "integration-by-parts": check_integration_by_parts,
    "divergence-demo": check_divergence_demo,
    "improper-split": check_improper_split,
    "riemann-stieltjes": check_riemann_stieltjes,
}

#: The purely algebraic derivative/power laws, checked in exact arithmetic.
EXACT_LAW_LABELS = (
    "linearity",
    "product-rule-1",
    "product-rule-2",
    "quotient-rule-1",
    "quotient-rule-2",
    "derule1",
    "derule2",
    "derule3",
    "der3",
    "derule4",
    "r1",
    "r2",
    "r3",
    "expand1",
    "negdef",
)


def run_suite(
    seed: int = 0,
    trials: int = 50,
    only: list[str] | None = None,
    include_forced_failure: bool = False,
) -> list[CheckResult]:
    """Run the selected checks, each with its own seeded generator."""
    labels = list(CHECKS) if only is None else list(only)
    unknown = [label for label in labels if label not in CHECKS]
    if unknown:
        raise KeyError(f"unknown identity labels: {', '.join(unknown)}")
    results = []
    for index, label in enumerate(labels):
        rng = Random((seed, index, label).__repr__())
        results.append(CHECKS[label](rng, trials))
    if include_forced_failure:
        results.append(check_forced_failure(Random(seed), trials))
    return results
