"""Root systems, Weyl groups and sphericity certificates for Schubert varieties."""

from .bp import BPDecomposition, decompose, find_chain_bp, is_bp, is_chain_bp, is_grassmannian_bp
from .config import LIMITS, Limits
from .inversion import element_from_biclosed, inversions_left, inversions_right, simple_inversions
from .order import bruhat_leq, lower_interval_bruhat, poincare, weak_leq_left, weak_leq_right
from .parastab import LeviSupport, levi_support
from .rootsys import CartanType, RootSubset, RootSystem, root_system
from .smooth import SmoothnessReport, is_rationally_smooth, is_smooth
from .spherical import (
    PairTableQuery,
    SphericalCertificate,
    brundan_spherical_levi,
    decide_spherical,
    mwz_typeA_pair,
    stembridge_typeD_pair,
    toral_cell_test,
)
from .weyl import (
    WeylElement,
    enumerate_group,
    format_element,
    from_word,
    identity,
    left_descents,
    longest_element,
    parse_element,
    right_descents,
    support,
)

__all__ = [
    "BPDecomposition",
    "bruhat_leq",
    "brundan_spherical_levi",
    "CartanType",
    "decide_spherical",
    "decompose",
    "element_from_biclosed",
    "enumerate_group",
    "find_chain_bp",
    "format_element",
    "from_word",
    "identity",
    "inversions_left",
    "inversions_right",
    "is_bp",
    "is_chain_bp",
    "is_grassmannian_bp",
    "is_rationally_smooth",
    "is_smooth",
    "left_descents",
    "levi_support",
    "LeviSupport",
    "LIMITS",
    "Limits",
    "longest_element",
    "lower_interval_bruhat",
    "mwz_typeA_pair",
    "PairTableQuery",
    "parse_element",
    "poincare",
    "right_descents",
    "root_system",
    "RootSubset",
    "RootSystem",
    "simple_inversions",
    "SmoothnessReport",
    "SphericalCertificate",
    "stembridge_typeD_pair",
    "support",
    "toral_cell_test",
    "weak_leq_left",
    "weak_leq_right",
    "WeylElement",
]
