"""Exact combinatorial computations for ladder determinantal rings of 2-minors."""

from .classgroup import (
    BasisLabel,
    DivisorClass,
    FactorRole,
    P,
    Q,
    QPrime,
    RelabelMap,
    basis,
    canonical_class,
    embed_factor_omega,
    ideal_generators,
    qprime_class,
    relabel,
)
from .decompose import Factorization, decompose, factorization_roundtrip_check
from .ladders import (
    Cell,
    CornerProfile,
    Ladder,
    LadderError,
    ValidationReport,
    antitranspose,
    coincidental_corners,
    compose,
    corners,
    parse_ascii,
    parse_auto,
    parse_json,
    render_ascii,
    require_analyzable,
    validate,
)
from .rewrite import (
    MAX_DEGREE_BOUND,
    Monomial,
    RewriteSystem,
    WitnessCase,
    WitnessReport,
    certify_confluence,
    equal_mod_minors,
    ideal_monomials_bounded,
    intersect_bounded,
    is_normal,
    normal_form,
    normal_monomials,
    reachable_normal_forms,
    verify_witnesses,
)
from .sdm import FactorReport, SdmReport, classify, construct_2n, is_gorenstein

__version__ = "0.1.0"

__all__ = [
    "BasisLabel",
    "Cell",
    "CornerProfile",
    "DivisorClass",
    "FactorReport",
    "FactorRole",
    "Factorization",
    "Ladder",
    "LadderError",
    "MAX_DEGREE_BOUND",
    "Monomial",
    "P",
    "Q",
    "QPrime",
    "RelabelMap",
    "RewriteSystem",
    "SdmReport",
    "ValidationReport",
    "WitnessCase",
    "WitnessReport",
    "antitranspose",
    "basis",
    "canonical_class",
    "certify_confluence",
    "classify",
    "coincidental_corners",
    "compose",
    "construct_2n",
    "corners",
    "decompose",
    "embed_factor_omega",
    "equal_mod_minors",
    "factorization_roundtrip_check",
    "ideal_generators",
    "ideal_monomials_bounded",
    "intersect_bounded",
    "is_gorenstein",
    "is_normal",
    "normal_form",
    "normal_monomials",
    "parse_ascii",
    "parse_auto",
    "parse_json",
    "qprime_class",
    "reachable_normal_forms",
    "relabel",
    "render_ascii",
    "require_analyzable",
    "validate",
    "verify_witnesses",
]
