"""Exact analysis of prime-level fractional factorial designs."""

from .cyclotomic import CycInt, CycRational, root
from .design import (
    DefiningEquation,
    Design,
    ParseError,
    check_strength_combinatorial,
    full_factorial,
    parse_design,
    project,
    regular_fraction,
    serialize_design,
    strength_combinatorial,
)
from .indicator import (
    IndicatorTable,
    aberration,
    coefficient_numerator,
    evaluate_indicator,
    gwlp,
    level_counts,
    strength_from_coefficients,
)
from .isomorphism import IsoResult, IsoWitness, apply_witness, gwlp_prefilter, is_isomorphic
from .permutation import (
    LevelPerm,
    PermPolynomial,
    apply_level_perm,
    check_perm_constraints,
    coset_representatives,
    is_monomial,
    monomial_decompose,
    monomial_perm,
    poly_coefficients,
    same_monomial_coset,
)
from .regularity import (
    LatinSquare,
    RegularityReport,
    StrengthError,
    find_equation_multilayer,
    find_triple_equation,
    first_failing_minor,
    latin_square,
    rank_one_check,
    reduce_and_read,
    regularity_check,
    table_rank_one,
    verify_equations,
)

__all__ = [
    "CycInt",
    "CycRational",
    "DefiningEquation",
    "Design",
    "IndicatorTable",
    "IsoResult",
    "IsoWitness",
    "LatinSquare",
    "LevelPerm",
    "ParseError",
    "PermPolynomial",
    "RegularityReport",
    "StrengthError",
    "aberration",
    "apply_level_perm",
    "apply_witness",
    "check_perm_constraints",
    "check_strength_combinatorial",
    "coefficient_numerator",
    "coset_representatives",
    "evaluate_indicator",
    "find_equation_multilayer",
    "find_triple_equation",
    "first_failing_minor",
    "full_factorial",
    "gwlp",
    "gwlp_prefilter",
    "is_isomorphic",
    "is_monomial",
    "latin_square",
    "level_counts",
    "monomial_decompose",
    "monomial_perm",
    "parse_design",
    "poly_coefficients",
    "project",
    "rank_one_check",
    "reduce_and_read",
    "regular_fraction",
    "regularity_check",
    "root",
    "same_monomial_coset",
    "serialize_design",
    "strength_combinatorial",
    "strength_from_coefficients",
    "table_rank_one",
    "verify_equations",
]

__version__ = "0.1.0"
