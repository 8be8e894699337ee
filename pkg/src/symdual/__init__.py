"""Exact-arithmetic toolkit for integer-sequence duality, inverse systems
of graded ideal filtrations, fat-point regularity, and symbolic-power
polyhedra of monomial ideals."""

__version__ = "0.1.0"

from .errors import (
    CapExceeded,
    CertificationError,
    CharMismatch,
    DegreeCapExceeded,
    DimensionTooLarge,
    DuplicatePoints,
    HypothesisUnmet,
    InvalidInput,
    NotSquarefree,
    SymdualError,
    UncertifiedSup,
    UnknownTag,
)
from .numseq import (
    NEG_INF,
    POS_INF,
    AdditivityReport,
    GrowthBound,
    IntSeqWindow,
    additivity_class,
    growth_window,
    identity_window,
    left_transform,
    offset_window,
    right_transform,
    shift,
)
from .scalars import FieldScalar, binomial_char, multi_binomial
from .polyalg import (
    DividedPoly,
    GradedSubspace,
    Poly,
    canonical_point,
    contract,
    diff_apply,
    divided_mul,
    dual_power,
    monomial_basis,
    one_point_perp,
    parse_poly,
    poly_to_divided,
)
from .filtrations import (
    DifferentialPowerFiltration,
    FrobeniusIntegralFiltration,
    IntersectionFiltration,
    LevelGensFiltration,
    PowerFiltration,
    SymbolicPointsFiltration,
    alpha_seq,
    duality_report,
    from_descriptor,
    is_differentially_closed,
    is_ideal,
    l_transform,
)
from .points import (
    PointConfig,
    alpha_seq_points,
    asymptotic_report,
    expected_dual_growth,
    expected_waldschmidt,
    fat_scheme_report,
    jet_sep_direct,
    jet_sep_index,
    nagata_check,
    reg_seq,
)
from .monomial import (
    MonomialIdeal,
    RationalPolyhedron,
    beta_nu_report,
    beta_nu_window,
    corona_reg_window,
    corona_subadditivity,
    minimal_primes_squarefree,
    newton_closure_member,
    nu_eval,
    polyhedron_invariants,
    resurgence_windows,
    symbolic_polyhedron,
    symbolic_power,
)
from .verify import CheckResult, run_all, run_check, run_tag

__all__ = [
    "AdditivityReport",
    "CapExceeded",
    "CertificationError",
    "CharMismatch",
    "CheckResult",
    "DegreeCapExceeded",
    "DifferentialPowerFiltration",
    "DimensionTooLarge",
    "DividedPoly",
    "DuplicatePoints",
    "FieldScalar",
    "FrobeniusIntegralFiltration",
    "GradedSubspace",
    "GrowthBound",
    "HypothesisUnmet",
    "IntSeqWindow",
    "IntersectionFiltration",
    "InvalidInput",
    "LevelGensFiltration",
    "MonomialIdeal",
    "NEG_INF",
    "NotSquarefree",
    "POS_INF",
    "PointConfig",
    "Poly",
    "PowerFiltration",
    "RationalPolyhedron",
    "SymbolicPointsFiltration",
    "SymdualError",
    "UncertifiedSup",
    "UnknownTag",
    "additivity_class",
    "alpha_seq",
    "alpha_seq_points",
    "asymptotic_report",
    "beta_nu_report",
    "beta_nu_window",
    "binomial_char",
    "canonical_point",
    "contract",
    "corona_reg_window",
    "corona_subadditivity",
    "diff_apply",
    "divided_mul",
    "dual_power",
    "duality_report",
    "expected_dual_growth",
    "expected_waldschmidt",
    "fat_scheme_report",
    "from_descriptor",
    "growth_window",
    "identity_window",
    "is_differentially_closed",
    "is_ideal",
    "jet_sep_direct",
    "jet_sep_index",
    "l_transform",
    "left_transform",
    "minimal_primes_squarefree",
    "monomial_basis",
    "multi_binomial",
    "nagata_check",
    "newton_closure_member",
    "nu_eval",
    "offset_window",
    "one_point_perp",
    "parse_poly",
    "poly_to_divided",
    "polyhedron_invariants",
    "reg_seq",
    "resurgence_windows",
    "right_transform",
    "run_all",
    "run_check",
    "run_tag",
    "shift",
    "symbolic_polyhedron",
    "symbolic_power",
]
