"""ffkit: finite fields GF(p^r) from first principles.

Builds prime fields and their extensions as polynomial quotient rings,
enumerates irreducible polynomials, factors x^q - x over both Z_p and
GF(q), finds multiplicative generators, constructs explicit isomorphisms
between same-order representations, and independently rediscovers small
fields by exhaustive operation-table search.
"""

from .errors import (
    ConstantPolynomialError,
    DegreeMismatchError,
    DegreeNotDividingError,
    FFKitError,
    FieldMismatchError,
    ModulusMismatchError,
    NotMonicError,
    NotPrimeError,
    OrderMismatchError,
    ParseError,
    ReduciblePolynomialError,
    RootNotFoundError,
    ScaleLimitError,
)
from .factorization import (
    BaseFactorization,
    LinearFactorization,
    expand_linear_factors,
    factor_xq_minus_x_base,
    factor_xq_minus_x_extension,
    lift_linear_split,
    remultiply,
    roots_in_field,
    x_pow_q_minus_x,
)
from .field_extension import (
    FieldElement,
    FieldSpec,
    check_field_axioms,
    construct_field,
    enumerate_elements,
    frobenius,
    operation_tables,
)
from .irreducibles import (
    IrreduciblePolynomial,
    count_irreducibles,
    enumerate_irreducibles,
    find_factor,
    is_irreducible,
)
from .isomorphism import (
    FieldIsomorphism,
    build_isomorphism,
    compose,
    enumerate_isomorphisms,
    verify_isomorphism,
)
from .polynomial import Polynomial
from .prime_field import PrimeModulus, Residue, check_prime
from .structure import (
    GeneratorReport,
    count_generators,
    find_generator,
    generator_report,
    multiplicative_order,
    verify_ftff_c,
)
from .table_oracle import (
    TableSolution,
    check_axioms,
    complete_tables,
    match_against_field,
    match_against_tables,
)

__all__ = [
    "BaseFactorization",
    "ConstantPolynomialError",
    "DegreeMismatchError",
    "DegreeNotDividingError",
    "FFKitError",
    "FieldElement",
    "FieldIsomorphism",
    "FieldMismatchError",
    "FieldSpec",
    "GeneratorReport",
    "IrreduciblePolynomial",
    "LinearFactorization",
    "ModulusMismatchError",
    "NotMonicError",
    "NotPrimeError",
    "OrderMismatchError",
    "ParseError",
    "Polynomial",
    "PrimeModulus",
    "ReduciblePolynomialError",
    "Residue",
    "RootNotFoundError",
    "ScaleLimitError",
    "TableSolution",
    "build_isomorphism",
    "check_axioms",
    "check_field_axioms",
    "check_prime",
    "complete_tables",
    "compose",
    "construct_field",
    "count_generators",
    "count_irreducibles",
    "enumerate_elements",
    "enumerate_irreducibles",
    "enumerate_isomorphisms",
    "expand_linear_factors",
    "factor_xq_minus_x_base",
    "factor_xq_minus_x_extension",
    "find_factor",
    "find_generator",
    "frobenius",
    "generator_report",
    "is_irreducible",
    "lift_linear_split",
    "match_against_field",
    "match_against_tables",
    "multiplicative_order",
    "operation_tables",
    "remultiply",
    "roots_in_field",
    "verify_ftff_c",
    "verify_isomorphism",
    "x_pow_q_minus_x",
]

__version__ = "0.1.0"
