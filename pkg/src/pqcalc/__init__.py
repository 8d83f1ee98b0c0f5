"""pqcalc: exact and numeric (p,q)-calculus.

Twin-basic combinatorics, the two-parameter difference derivative, the
(p,q)-power basis with both Taylor expansions, and the lattice-series
(p,q)-integral family, checked by a machine-runnable identity suite.
"""

from .errors import (
    DegenerateRegimeError,
    DivergenceError,
    InvalidIntervalError,
    MissingDerivativeAtZeroError,
    NegativeArgumentError,
    NonPositiveBaseError,
    OutOfRangeError,
    PoleError,
    PqError,
    WrongRegimeError,
)
from .integration import (
    BoundednessReport,
    GapReport,
    IntegralResult,
    IntegralStatus,
    TruncationPolicy,
    antiderive_poly,
    check_convergence_hypothesis,
    integral,
    integral_improper,
    integral_riemann_stieltjes,
    integral_to_infinity,
    integral_zero_to,
    integrate_by_parts,
    newton_leibniz_check,
)
from .polynomials import (
    NumericFn,
    Polynomial,
    eval_poly,
    pq_derive_fn,
    pq_derive_poly,
    pq_derive_poly_k,
    pq_difference_quotient,
)
from .pqpower import (
    Orientation,
    PqPowerExpr,
    additive_law_check,
    derive_pq_power,
    derive_pq_power_iterated,
    derive_pq_power_k,
    derive_reversed_k,
    eval_pq_power,
    expand_expr,
    expand_pq_power,
    format_power_expr,
    parse_power_expr,
    pq_power_value,
    reciprocal_rules_check,
)
from .scalars import (
    FloatScalar,
    PqParams,
    Rat,
    Regime,
    bracket,
    bracket_alpha,
    bracket_falling,
    pq_binomial,
    pq_factorial,
    rat,
    rat_str,
)
from .taylor import (
    PowerBasisExpansion,
    connect_monomial,
    connect_monomial_reversed,
    connect_power_to_power,
    heine_coeff,
    heine_coefficients_match,
    heine_series_eval,
    q_binomial_reduction_check,
    reciprocal_power_series,
    taylor_expand,
    taylor_expand_reversed,
)

__version__ = "0.1.0"
