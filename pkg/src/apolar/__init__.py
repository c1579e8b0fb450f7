"""Exact Macaulay duality for weighted graded polynomial rings.

Inverse systems, apolar annihilators, Hilbert functions and socle types,
compressed-algebra numerics, Hilbert-series tests, tangent-space arithmetic
on the Hilbert scheme, and seeded constructions — all over the rationals or
a prime field, all deterministic.
"""

from .rings import (
    GF,
    QQ,
    BoundExceededError,
    Field,
    GradedRing,
    MathDomainError,
    Polynomial,
    Subspace,
    graded_dim,
    monomials_of_degree,
    truncate_algebra,
)
from .duality import (
    FilteredDual,
    FilteredIdeal,
    GradedIdeal,
    InverseElement,
    InverseSystem,
    QuotientRing,
    annihilator_of_submodule,
    apolar_annihilator,
    associated_graded_ideal,
    associated_graded_submodule,
    catalecticant_matrix,
    contract,
    dual_dim,
    dual_element_of,
    dual_minimal_generators,
    filtered_dual,
    generated_submodule,
    hom_into_dual_dims,
)
from .invariants import (
    IntSeq,
    LinkageReport,
    MultilevelProfile,
    SocleReport,
    StabilityReport,
    delta_submodule,
    generator_type,
    hilbert_function,
    integrity,
    is_gorenstein,
    is_level,
    linkage,
    linkage_predicted_hilbert,
    multilevel_profile,
    socle,
    socle_report,
    stability_integrity,
    symmetry_defect,
)
from .series import (
    TruncatedSeries,
    apply_vanishing_product,
    dual_series,
    froeberg_expected,
    koszul_series_verdict,
    ring_series,
    vanishing_polynomial,
    wstar_window,
)
from .compressed import (
    BoundCheck,
    ConverseReport,
    CpdArtinianReport,
    DimensionReport,
    ISetReport,
    PermissibilityReport,
    attendants,
    compressed_bound_check,
    converse_permissibility_check,
    cpd_artinian_checks,
    dimension_formulas,
    i_set,
    is_I_compressed,
    is_permissible,
)
from .tangents import (
    CrosscheckReport,
    ElementaryReport,
    TangentProfile,
    elementary_report,
    gorenstein_tangent_crosscheck,
    hom_dims,
    minimal_generators,
    squared_ideal_dim,
    syzygies_at_degree,
    tangent_dim,
    tnt_verdict,
)
from .constructions import (
    AmbientQuotientReport,
    GeneralPairReport,
    MonomialCIReport,
    PowerSumReport,
    PrNonemptyReport,
    ShiftedDualReport,
    derived_seed,
    general_gorenstein_pair,
    gorenstein_ambient_quotient,
    monomial_ci_ambient,
    power_sum,
    power_sum_system,
    prnonempty_construct,
    random_dual_element,
    random_dual_generators,
    shifted_dual_presentation,
    splitmix64,
)
from .parsing import (
    ParseError,
    RingSpec,
    parse_expression,
    parse_expressions,
    parse_int_list,
    parse_point_list,
    parse_ring_spec,
    parse_socle_type,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # rings
    "GF",
    "QQ",
    "BoundExceededError",
    "Field",
    "GradedRing",
    "MathDomainError",
    "Polynomial",
    "Subspace",
    "graded_dim",
    "monomials_of_degree",
    "truncate_algebra",
    # duality
    "FilteredDual",
    "FilteredIdeal",
    "GradedIdeal",
    "InverseElement",
    "InverseSystem",
    "QuotientRing",
    "annihilator_of_submodule",
    "apolar_annihilator",
    "associated_graded_ideal",
    "associated_graded_submodule",
    "catalecticant_matrix",
    "contract",
    "dual_dim",
    "dual_element_of",
    "dual_minimal_generators",
    "filtered_dual",
    "generated_submodule",
    "hom_into_dual_dims",
    # invariants
    "IntSeq",
    "LinkageReport",
    "MultilevelProfile",
    "SocleReport",
    "StabilityReport",
    "delta_submodule",
    "generator_type",
    "hilbert_function",
    "integrity",
    "is_gorenstein",
    "is_level",
    "linkage",
    "linkage_predicted_hilbert",
    "multilevel_profile",
    "socle",
    "socle_report",
    "stability_integrity",
    "symmetry_defect",
    # series
    "TruncatedSeries",
    "apply_vanishing_product",
    "dual_series",
    "froeberg_expected",
    "koszul_series_verdict",
    "ring_series",
    "vanishing_polynomial",
    "wstar_window",
    # compressed
    "BoundCheck",
    "ConverseReport",
    "CpdArtinianReport",
    "DimensionReport",
    "ISetReport",
    "PermissibilityReport",
    "attendants",
    "compressed_bound_check",
    "converse_permissibility_check",
    "cpd_artinian_checks",
    "dimension_formulas",
    "i_set",
    "is_I_compressed",
    "is_permissible",
    # tangents
    "CrosscheckReport",
    "ElementaryReport",
    "TangentProfile",
    "elementary_report",
    "gorenstein_tangent_crosscheck",
    "hom_dims",
    "minimal_generators",
    "squared_ideal_dim",
    "syzygies_at_degree",
    "tangent_dim",
    "tnt_verdict",
    # constructions
    "AmbientQuotientReport",
    "GeneralPairReport",
    "MonomialCIReport",
    "PowerSumReport",
    "PrNonemptyReport",
    "ShiftedDualReport",
    "derived_seed",
    "general_gorenstein_pair",
    "gorenstein_ambient_quotient",
    "monomial_ci_ambient",
    "power_sum",
    "power_sum_system",
    "prnonempty_construct",
    "random_dual_element",
    "random_dual_generators",
    "shifted_dual_presentation",
    "splitmix64",
    # parsing
    "ParseError",
    "RingSpec",
    "parse_expression",
    "parse_expressions",
    "parse_int_list",
    "parse_point_list",
    "parse_ring_spec",
    "parse_socle_type",
]
