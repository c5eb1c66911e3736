"""Exact structure computations for graded algebra presentations.

The package certifies, up to a user-chosen degree bound and with exact
arithmetic, the Lyndon-word PBW structure of connected graded algebra
presentations: orders and factorizations on words, free-algebra and tensor
arithmetic with standard bracketings, truncated noncommutative Groebner
bases, comultiplication certificates, Hilbert data and growth verdicts,
iterated Ore-extension towers and Lie-generator recovery.
"""

from .fields import PrimeField, QQ, Rationals
from .word import (
    Alphabet,
    compare_glex,
    compare_lex,
    enumerate_lyndon,
    is_lyndon,
    lyndon_decomposition,
    shirshov_factorization,
)
from .poly import (
    Polynomial,
    TensorElement,
    bracket_monomial,
    commutator,
    leading_word,
    multiply,
    standard_bracket,
    standard_comultiplication,
)
from .rewrite import (
    IrreducibleData,
    OutOfCertifiedRange,
    TruncatedGB,
    WholeAlgebraIdeal,
    admissible_words,
    bracket_coordinates,
    collect_irreducible_data,
    compute_truncated_gb,
    height,
    irreducible_lyndon_words,
    normal_form,
    tensor_bracket_coordinates,
)
from .coalg import (
    Antipode,
    CheckReport,
    Comultiplication,
    antipode_normal_form,
    check_coassoc_counit,
    check_power_comultiplication,
    check_stability,
    check_triangular,
    extend_comultiplication,
    free_gb,
    is_lie_polynomial,
)
from .structure import (
    OreTower,
    Presentation,
    StructureReport,
    compute_heights,
    extract_ihoe,
    hilbert_and_gk,
    recover_lie_generators,
    verify_quasi_lie,
    verify_structure_theorem,
)
from .expressions import (
    ExpressionError,
    parse_expression,
    parse_polynomial,
    parse_tensor,
    render_polynomial,
    render_tensor,
    render_word,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
