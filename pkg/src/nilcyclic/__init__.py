"""Cyclic codes over F_p[u,v,w]/(u^2, v^2, w^2) and their Gray images."""

from .gfpoly import (
    MINUS_INFINITY,
    FieldElem,
    FpPoly,
    cyclic_generator,
    frobenius_binomial,
    is_prime,
    poly_divmod,
    poly_gcd,
)
from .ring import RingElem, gray_inverse, gray_map, lee_weight
from .rpoly import RPoly
from .code import (
    CanonicalGenerators,
    CyclicCode,
    ConditionReport,
    CoprimeForm,
    TOWER,
    canonical_generators,
    coprime_form,
    free_generator,
    is_free,
    membership,
    span_closure,
    tower_ideal,
    verify_conditions,
)
from .analysis import (
    GrayParams,
    PadicClass,
    RankReport,
    distance_prime_power,
    gray_params,
    hamming_distance,
    padic_classify,
    rank_and_spanning_set,
)
from .oracle import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    EnumBudget,
    MinimalityReport,
    WeightResult,
    enumerate_codewords,
    min_weight,
    r_span_equals,
    verify_rank_minimality,
)
from .exprs import GeneratorExpr, ParseError, UnboundConstantError, parse_generator, parse_poly

__version__ = "0.1.0"

__all__ = [
    "MINUS_INFINITY",
    "FieldElem",
    "FpPoly",
    "RingElem",
    "RPoly",
    "CyclicCode",
    "CanonicalGenerators",
    "ConditionReport",
    "CoprimeForm",
    "TOWER",
    "GrayParams",
    "PadicClass",
    "RankReport",
    "EnumBudget",
    "WeightResult",
    "MinimalityReport",
    "BudgetExceededError",
    "ParseError",
    "UnboundConstantError",
    "GeneratorExpr",
    "DEFAULT_BUDGET",
    "is_prime",
    "poly_divmod",
    "poly_gcd",
    "cyclic_generator",
    "frobenius_binomial",
    "gray_map",
    "gray_inverse",
    "lee_weight",
    "span_closure",
    "membership",
    "tower_ideal",
    "canonical_generators",
    "verify_conditions",
    "is_free",
    "free_generator",
    "coprime_form",
    "rank_and_spanning_set",
    "padic_classify",
    "distance_prime_power",
    "hamming_distance",
    "gray_params",
    "enumerate_codewords",
    "min_weight",
    "r_span_equals",
    "verify_rank_minimality",
    "parse_generator",
    "parse_poly",
    "__version__",
]
