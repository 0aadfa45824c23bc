"""piqcheck: exact verification of Pi_q / theta-function identities.

The package computes with truncated Laurent series in t (q = t^4) over exact
rationals, replays degree-3 and degree-5 modular-equation goals in quadratic
extensions of the rational function field Q(m), and ships a catalog of 31
classical identities together with a small text DSL for user-supplied ones.
"""

from .catalog import (
    DEFAULT_ORDER,
    EvalError,
    FirstFailure,
    IdentityRecord,
    UnknownIdentity,
    VerifyReport,
    audit_homogeneity,
    evaluate,
    get_identity,
    known_ids,
    list_identities,
    verify,
    verify_all,
    verify_expressions,
    verify_record,
)
from .dsl import (
    Add,
    ArityError,
    Const,
    Div,
    Expr,
    Mul,
    ParseError,
    Phi,
    Pi,
    PowInt,
    Psi,
    QPow,
    QPowNotQuarterIntegral,
    Sqrt,
    Sub,
    parse,
    to_text,
)
from .field import (
    DivisionByZeroRatFunc,
    FieldError,
    M,
    ModulusMismatch,
    Poly,
    QuadExt,
    RatFunc,
    ZeroNormInverse,
    poly_gcd,
    quadext_equal,
)
from .modular import (
    DEGREE3_EQUATIONS,
    DEGREE5_EQUATIONS,
    ModularError,
    ParamCheck,
    ParamSeriesReport,
    ParamTable3,
    ParamTable5,
    ProofReport,
    build_table3,
    build_table5,
    check_param_series,
    eval_at_series,
    prove_all,
    prove_degree3,
    prove_degree5,
)
from .series import (
    DivisionByZeroSeries,
    InsufficientPrecision,
    LaurentSeries,
    NonSquareLeadingCoefficient,
    OddValuation,
    SeriesError,
)
from .theta import (
    ZeroFactor,
    alpha_series,
    beta_series,
    m_series,
    phi,
    pi_product,
    pochhammer,
    psi,
    psi_product_form,
    rho_series,
    z_series,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ORDER",
    "DEGREE3_EQUATIONS",
    "DEGREE5_EQUATIONS",
    "Add",
    "ArityError",
    "Const",
    "Div",
    "DivisionByZeroRatFunc",
    "DivisionByZeroSeries",
    "EvalError",
    "Expr",
    "FieldError",
    "FirstFailure",
    "IdentityRecord",
    "InsufficientPrecision",
    "LaurentSeries",
    "M",
    "ModularError",
    "ModulusMismatch",
    "Mul",
    "NonSquareLeadingCoefficient",
    "OddValuation",
    "ParamCheck",
    "ParamSeriesReport",
    "ParamTable3",
    "ParamTable5",
    "ParseError",
    "Phi",
    "Pi",
    "Poly",
    "PowInt",
    "ProofReport",
    "Psi",
    "QPow",
    "QPowNotQuarterIntegral",
    "QuadExt",
    "RatFunc",
    "SeriesError",
    "Sqrt",
    "Sub",
    "UnknownIdentity",
    "VerifyReport",
    "ZeroFactor",
    "ZeroNormInverse",
    "alpha_series",
    "audit_homogeneity",
    "beta_series",
    "build_table3",
    "build_table5",
    "check_param_series",
    "eval_at_series",
    "evaluate",
    "get_identity",
    "known_ids",
    "list_identities",
    "m_series",
    "parse",
    "phi",
    "pi_product",
    "pochhammer",
    "poly_gcd",
    "prove_all",
    "prove_degree3",
    "prove_degree5",
    "psi",
    "psi_product_form",
    "quadext_equal",
    "rho_series",
    "to_text",
    "verify",
    "verify_all",
    "verify_expressions",
    "verify_record",
    "z_series",
]
