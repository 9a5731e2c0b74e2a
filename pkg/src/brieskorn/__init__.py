"""Representation classes of Brieskorn homology spheres Sigma(a1, a2, a3).

The package enumerates the conjugacy classes of irreducible two-dimensional
representations of the fundamental group, splits them into the unitary and
real families by exact rational trace arithmetic, ties the counts to the
Casson-type invariants, and certifies each class with an explicit pair of
2x2 matrices checked against the group relations.
"""

from .character import (
    CharacterTriple,
    ClassLabel,
    CountReport,
    TraceValue,
    classify,
    count_report,
    enumerate_su2,
    is_reducible_triple,
    kappa,
    phi_map,
    reversed_trace_check,
    trace_of_generator,
    trace_triple_of,
)
from .errors import (
    BrieskornError,
    CountMismatch,
    DegenerateAngle,
    InconsistentClassification,
    InjectivityViolation,
    InvalidSeifertData,
    NonIntegerOrder,
    NotPairwiseCoprime,
    NotRealizable,
    ValueTooSmall,
)
from .euler import (
    EulerClass,
    X0Triple,
    enumerate_E,
    enumerate_X0,
    enumerate_condition_b,
    reverse_orientation,
    seifert_from_euler,
)
from .realize import (
    Mat2,
    RealizationReport,
    realize_sl2r,
    realize_su2,
    stretch_for_product_trace,
    verify_relations,
)
from .seifert import (
    BrieskornParams,
    GroupPresentation,
    SeifertInvariant,
    canonicalize_params,
    euler_number,
    h1_order,
    presentation,
    solve_seifert,
    sphere_convention_sign,
)

__version__ = "0.1.0"

__all__ = [
    "BrieskornError",
    "BrieskornParams",
    "CharacterTriple",
    "ClassLabel",
    "CountMismatch",
    "CountReport",
    "DegenerateAngle",
    "EulerClass",
    "GroupPresentation",
    "InconsistentClassification",
    "InjectivityViolation",
    "InvalidSeifertData",
    "Mat2",
    "NonIntegerOrder",
    "NotPairwiseCoprime",
    "NotRealizable",
    "RealizationReport",
    "SeifertInvariant",
    "TraceValue",
    "ValueTooSmall",
    "X0Triple",
    "canonicalize_params",
    "classify",
    "count_report",
    "enumerate_E",
    "enumerate_X0",
    "enumerate_condition_b",
    "enumerate_su2",
    "euler_number",
    "h1_order",
    "is_reducible_triple",
    "kappa",
    "phi_map",
    "presentation",
    "realize_sl2r",
    "realize_su2",
    "reverse_orientation",
    "reversed_trace_check",
    "seifert_from_euler",
    "solve_seifert",
    "sphere_convention_sign",
    "stretch_for_product_trace",
    "trace_of_generator",
    "trace_triple_of",
    "verify_relations",
]
