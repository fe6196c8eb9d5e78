"""Factorization engine and prime sieve for the quadratic families
E_c = {X^2 + c : X of parity opposite to c}.

Element values are factored in index order by following the one or two
arithmetic progressions of indices attached to every odd prime divisor,
so past a small head range each new prime appears exactly once and
division work is driven entirely by the progression table.  Companion
modules construct the first-occurrence data and dual progressions
directly, build the quadratic sequence pairs (U_n, Z_n) whose products
Z_n * Z_{n+1} = U_n^2 + c generate factorizations, and provide a
trial-division oracle for end-to-end verification.
"""

from .core import (
    INT63_MAX,
    EcElement,
    EcParams,
    element_at,
    index_of,
    is_prime,
    isqrt_floor,
    make_params,
)
from .oracle import OracleReport, brute_sets, compare, trial_factor
from .progressions import (
    DualProgression,
    FirstHit,
    LiftSolutions,
    PowerPlan,
    dual_for_prime,
    dual_for_prime_power,
    first_occurrence,
    lift_solutions,
    power_plan,
    sequence_exists,
)
from .sieve import (
    Checkpoint,
    FactorizationRecord,
    RegisteredPrime,
    SieveError,
    SieveOutput,
    SieveState,
    atkin_primes,
    run_sieve,
)
from .uz import (
    UZPair,
    appendix_pair,
    family_coeffs,
    pair_from_factorization,
    special_pair_one,
    special_pair_two,
    z_values_distinct,
)

__version__ = "0.1.0"

__all__ = [
    "INT63_MAX",
    "EcElement",
    "EcParams",
    "element_at",
    "index_of",
    "is_prime",
    "isqrt_floor",
    "make_params",
    "OracleReport",
    "brute_sets",
    "compare",
    "trial_factor",
    "DualProgression",
    "FirstHit",
    "LiftSolutions",
    "PowerPlan",
    "dual_for_prime",
    "dual_for_prime_power",
    "first_occurrence",
    "lift_solutions",
    "power_plan",
    "sequence_exists",
    "Checkpoint",
    "FactorizationRecord",
    "RegisteredPrime",
    "SieveError",
    "SieveOutput",
    "SieveState",
    "atkin_primes",
    "run_sieve",
    "UZPair",
    "appendix_pair",
    "family_coeffs",
    "pair_from_factorization",
    "special_pair_one",
    "special_pair_two",
    "z_values_distinct",
]
