"""Exact decision engine for identities in max-plus matrix semigroups.

Decides whether a two-sided word identity holds in the n x n upper triangular
tropical (max-plus) matrices, in any finite poset-indexed tropical matrix
semigroup, and therefore in the bicyclic monoid and the free monogenic
inverse monoid. All arithmetic is exact rational; failing identities come
with verifiable falsifying witnesses.
"""

from .scalars import BOTTOM, TropScalar, classical_scale, trop, tropical_add, tropical_mul
from .posets import Poset, chain_poset
from .matrices import (
    IdempotentClass,
    IdempotentKind,
    TropMatrix,
    classify_idempotent_ut2,
    idempotent_leq,
    is_idempotent,
    mat_mul,
    scale_matrix,
    ut_matrix,
)
from .polynomials import (
    TropPoly,
    equivalent,
    equivalent_univariate,
    essential_terms,
    essentialize,
    evaluate,
    poly_add,
    poly_mul,
    render_poly,
    separating_point,
    substitute,
)
from .lp import LinearSystem, strict_feasible
from .words import (
    Identity,
    between_count,
    build_f_t_w,
    build_f_u_rho,
    content,
    parse_identity,
    prefix_count,
)
from .checking import (
    Failure,
    Verdict,
    Witness,
    bicyclic_witness,
    check_identity,
    check_identity_two_letter,
    check_identity_ut2,
    check_poset,
    falsifying_witness,
    monoid_identity_instances,
    verify_witness,
)
from .models import (
    BICYCLIC_ONE,
    BICYCLIC_P,
    BICYCLIC_Q,
    FMIM_GENERATOR,
    FMIM_ONE,
    Bicyclic,
    Divisor,
    Fmim,
    bicyclic_mul,
    divisor_mul,
    divisor_phi,
    divisor_psi,
    embed_bicyclic_ut2,
    embed_fmim_ut3,
    eval_word,
    fmim_idempotent_leq,
    fmim_mul,
    fmim_poset,
)
from .oracle import OracleConfig, random_falsify

__version__ = "0.1.0"

__all__ = [
    "BOTTOM",
    "TropScalar",
    "classical_scale",
    "trop",
    "tropical_add",
    "tropical_mul",
    "Poset",
    "chain_poset",
    "TropMatrix",
    "IdempotentClass",
    "IdempotentKind",
    "classify_idempotent_ut2",
    "idempotent_leq",
    "is_idempotent",
    "mat_mul",
    "scale_matrix",
    "ut_matrix",
    "TropPoly",
    "equivalent",
    "equivalent_univariate",
    "essential_terms",
    "essentialize",
    "evaluate",
    "poly_add",
    "poly_mul",
    "render_poly",
    "separating_point",
    "substitute",
    "LinearSystem",
    "strict_feasible",
    "Identity",
    "between_count",
    "build_f_t_w",
    "build_f_u_rho",
    "content",
    "parse_identity",
    "prefix_count",
    "Failure",
    "Verdict",
    "Witness",
    "bicyclic_witness",
    "check_identity",
    "check_identity_two_letter",
    "check_identity_ut2",
    "check_poset",
    "falsifying_witness",
    "monoid_identity_instances",
    "verify_witness",
    "BICYCLIC_ONE",
    "BICYCLIC_P",
    "BICYCLIC_Q",
    "FMIM_GENERATOR",
    "FMIM_ONE",
    "Bicyclic",
    "Divisor",
    "Fmim",
    "bicyclic_mul",
    "divisor_mul",
    "divisor_phi",
    "divisor_psi",
    "embed_bicyclic_ut2",
    "embed_fmim_ut3",
    "eval_word",
    "fmim_idempotent_leq",
    "fmim_mul",
    "fmim_poset",
    "OracleConfig",
    "random_falsify",
]
