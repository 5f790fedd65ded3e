"""Exact invariants of braid-closure knots: colored Jones, Alexander, and
Kashaev values, computed by two independent routes (a determinant inverse
series over a q-difference operator algebra, and an R-matrix state sum) that
cross-validate each other, with root-of-unity evaluation and hyperbolic
volume growth-rate estimation."""

from .braid import (
    BraidParseError,
    BraidWord,
    closure_is_knot,
    markov_moves,
    parse_braid,
)
from .exactpoly import (
    CyclotomicInt,
    LaurentPoly,
    QExponent,
    cyclotomic_reduce,
    embed_complex,
    format_univariate,
    laurent_divmod,
    parse_univariate,
)
from .qweyl import (
    AlgebraElement,
    NormalMonomial,
    StrandSigns,
    eval_E,
    eval_EN,
    normal_order_product,
    operator_action_oracle,
)
from .deformed_burau import (
    QuantumMatrix,
    check_right_quantum,
    classical_specialization,
    rho,
    rho_prime,
    s_matrix,
)
from .mcmahon import (
    InverseSeriesConfig,
    alexander,
    c_sum,
    colored_jones,
    inverse_series_EN,
    qdet,
)
from .verma_oracle import (
    BasisState,
    VermaAction,
    braiding_coeff,
    check_braid_relation,
    check_braiding_inverse,
    numeric_state_sum,
    state_sum_jones,
)
from .kashaev import (
    HabiroTruncation,
    KashaevValue,
    bloch_wigner,
    kashaev_series,
    kashaev_value,
    kz_series,
    lobachevsky,
    mahler_measure,
    reference_volumes,
    volume_rate,
    volume_sequence,
)
from .foxburau import (
    FreeWord,
    GroupRingElement,
    abelianize_check,
    artin_action,
    fox_derivative,
    psi_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BraidParseError",
    "BraidWord",
    "closure_is_knot",
    "markov_moves",
    "parse_braid",
    "CyclotomicInt",
    "LaurentPoly",
    "QExponent",
    "cyclotomic_reduce",
    "embed_complex",
    "format_univariate",
    "laurent_divmod",
    "parse_univariate",
    "AlgebraElement",
    "NormalMonomial",
    "StrandSigns",
    "eval_E",
    "eval_EN",
    "normal_order_product",
    "operator_action_oracle",
    "QuantumMatrix",
    "check_right_quantum",
    "classical_specialization",
    "rho",
    "rho_prime",
    "s_matrix",
    "InverseSeriesConfig",
    "alexander",
    "c_sum",
    "colored_jones",
    "inverse_series_EN",
    "qdet",
    "BasisState",
    "VermaAction",
    "braiding_coeff",
    "check_braid_relation",
    "check_braiding_inverse",
    "numeric_state_sum",
    "state_sum_jones",
    "HabiroTruncation",
    "KashaevValue",
    "bloch_wigner",
    "kashaev_series",
    "kashaev_value",
    "kz_series",
    "lobachevsky",
    "mahler_measure",
    "reference_volumes",
    "volume_rate",
    "volume_sequence",
    "FreeWord",
    "GroupRingElement",
    "abelianize_check",
    "artin_action",
    "fox_derivative",
    "psi_matrix",
]
