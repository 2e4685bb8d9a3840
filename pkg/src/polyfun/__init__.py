"""Polyfunctions over finite commutative rings and their Smarandache invariants."""
from .engine import (
    EchelonSpace,
    FunctionTable,
    brute_force_represent,
    compute_invariants,
    count_polyfunctions,
    extend_echelon,
    is_polyfunction,
    lagrange_interpolate,
    membership,
    monomial_table,
    power_map_repetition,
    represent,
    s_invariant,
    s_relative,
)
from .errors import BudgetError, DomainError, NotAFieldError, PolyfunError, SpecSyntaxError
from .numtheory import endl_bound, kombi_sum, lambda_bound, lcm_upto, psi, smarandache_nt
from .parsing import parse_element, parse_function_table, parse_ring_spec
from .poly import Polynomial, is_null_polynomial, parse_polynomial, vanishing_poly
from .rings import (
    GF,
    RHO,
    Classification,
    Product,
    Quotient,
    Ring,
    Zn,
    build_ring,
    classify,
    find_distinct_zero_divisor_pair,
    full_subring,
    is_field,
    prime_subring,
    subring_closure,
)

__version__ = "0.1.0"
