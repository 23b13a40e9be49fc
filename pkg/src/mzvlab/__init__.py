"""Multiple zeta values, the stuffle algebra and t-adic symmetric MZVs."""

from .index_algebra import (
    EMPTY,
    I,
    IndexCombination,
    format_index,
    index_shuffle,
    m_i_n,
    make_index,
    parse_index,
    repeat_pattern,
    sigma,
    stuffle,
)
from .numeric_eval import (
    BigReal,
    EvalConfig,
    NonAdmissibleIndexError,
    eval_admissible,
    eval_combination,
    zeta_numeric,
    zeta_star_numeric,
)
from .regularization import RegPolynomial, regularize, zeta_star_m_symbolic, zeta_star_symbolic
from .relations import (
    InsufficientPrecisionError,
    RelationCertificate,
    integer_relation,
    pi2_basis,
    verify_congruence_mod_pi2,
)
from .smzv import (
    TSeries,
    main_rhs,
    stadic_coefficient,
    t_adic_smzv,
    t_adic_smzv_symbolic,
    thm11_rhs,
    thm13_rhs,
)
from .suites import run_suite, suite_names

__all__ = [
    "EMPTY", "I", "IndexCombination", "format_index", "index_shuffle", "m_i_n", "make_index",
    "parse_index", "repeat_pattern", "sigma", "stuffle",
    "BigReal", "EvalConfig", "NonAdmissibleIndexError", "eval_admissible", "eval_combination",
    "zeta_numeric", "zeta_star_numeric",
    "RegPolynomial", "regularize", "zeta_star_m_symbolic", "zeta_star_symbolic",
    "InsufficientPrecisionError", "RelationCertificate", "integer_relation", "pi2_basis",
    "verify_congruence_mod_pi2",
    "TSeries", "main_rhs", "stadic_coefficient", "t_adic_smzv", "t_adic_smzv_symbolic",
    "thm11_rhs", "thm13_rhs",
    "run_suite", "suite_names",
]
