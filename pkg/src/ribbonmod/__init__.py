"""Exact descent-class sizes of finite Coxeter groups, and how those sizes
distribute over residue classes modulo a prime."""

from .arith import BasePDigits, base_p_digits, is_prime, multinomial_exact, multinomial_mod_p, pow2_mod_p
from .compositions import (
    CapacityError,
    Composition,
    DescentSet,
    PseudoComposition,
    enumerate_compositions,
    enumerate_pseudo_compositions,
    from_descent_set,
    parse_parts,
)
from .coxeter import (
    CoxeterDiagram,
    IrreducibleType,
    UnclassifiableError,
    builtin_diagram,
    classify_components,
    descent_class_multiset,
    descent_class_sizes,
    parabolic_order,
    residue_histogram,
    ribbon_general,
)
from .cvec import (
    DimensionPVector,
    NoClosedFormError,
    SupportSet,
    cvec,
    cvec_closed_form,
    cvec_naive,
    cvec_theorem,
    macdonald_mp,
    partitions,
    signed_chain_count,
    standard_tableau_count,
    support_residue,
    support_set,
    weighted_chain_count,
)
from .ribbon import (
    RibbonValue,
    SignedPermutation,
    oracle_descent_class_sizes,
    ribbon_a,
    ribbon_a_det,
    ribbon_b,
    ribbon_d,
    ribbon_exact,
    ribbon_mod_p,
)

__version__ = "0.1.0"

__all__ = [
    "BasePDigits",
    "base_p_digits",
    "is_prime",
    "multinomial_exact",
    "multinomial_mod_p",
    "pow2_mod_p",
    "CapacityError",
    "Composition",
    "PseudoComposition",
    "DescentSet",
    "enumerate_compositions",
    "enumerate_pseudo_compositions",
    "from_descent_set",
    "parse_parts",
    "RibbonValue",
    "SignedPermutation",
    "ribbon_a",
    "ribbon_a_det",
    "ribbon_b",
    "ribbon_d",
    "ribbon_exact",
    "ribbon_mod_p",
    "oracle_descent_class_sizes",
    "DimensionPVector",
    "SupportSet",
    "NoClosedFormError",
    "support_set",
    "support_residue",
    "cvec",
    "cvec_naive",
    "cvec_theorem",
    "cvec_closed_form",
    "signed_chain_count",
    "weighted_chain_count",
    "macdonald_mp",
    "standard_tableau_count",
    "partitions",
    "CoxeterDiagram",
    "IrreducibleType",
    "UnclassifiableError",
    "builtin_diagram",
    "classify_components",
    "parabolic_order",
    "ribbon_general",
    "descent_class_sizes",
    "descent_class_multiset",
    "residue_histogram",
    "__version__",
]
