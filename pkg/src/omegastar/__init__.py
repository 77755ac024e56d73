"""Shifted-prime divisor experiments.

For each n >= 1, omega*(n) counts the divisors d of n such that d + 1 is
prime.  This package computes omega* pointwise and in bulk, its moments
M_k(x), the pair-counting and randomized divisor-set machinery that drives
the known lower bounds on its maximal order, the associated optimized
constants, and smooth-number censuses Psi(x, y) / pi(x, y).  Everything is
exact at desk scale and validated against brute-force oracles; the CLI
emits deterministic CSV/JSON.
"""

from .sieve import (
    Factorization,
    PrimeTable,
    ResourceLimitError,
    factorize,
    is_prime,
    log_integral,
    prime_count,
    primes_in_ap,
    sieve_primes,
)
from .arith import (
    DivisorList,
    big_omega,
    carmichael_lambda,
    count_coprime_up_to,
    divisors,
    euler_phi,
    gcd_sum_over_primes,
    little_omega,
    mobius,
    tau,
)
from .omega import (
    MomentSeries,
    OmegaStarTable,
    moment,
    moment_scan,
    moment_series_csv,
    moment_sum,
    omega_star,
    omega_star_table,
)
from .constants import (
    GOLDEN_RATIO,
    GRH_U,
    UNCONDITIONAL_THETA,
    UNCONDITIONAL_U,
    GrhConstants,
    OptimumReport,
    apr_conjecture_bound,
    f_theta,
    grh_constants,
    maximize_f_theta,
)
from .construction import (
    ChampionRecord,
    ConstructionParams,
    DivisorSample,
    ExactEnumeration,
    PairCountReport,
    SampleStats,
    accept_flags,
    build_params,
    champion_search,
    chebyshev_bounds,
    count_A_d,
    count_representations,
    entropy_lower_bound,
    enumerate_D_exact,
    harman_smoothness_check,
    log_d_moments,
    pair_count_report,
    primorial_k,
    sample_divisor,
    sample_stats,
    total_pairs_A,
)
from .smooth import (
    AprComparisonReport,
    PomeranceRatio,
    SmoothCensus,
    apr_from_pomerance_report,
    greatest_prime_factor,
    log_psi_leading,
    pi_smooth_count,
    pomerance_ratio,
    psi_count,
    smooth_census,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
