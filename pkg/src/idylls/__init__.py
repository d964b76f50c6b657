"""Exact root multiplicities over idylls, hyperfields, and tropical extensions.

The catalog of idylls lives in `idylls.algebra`; tropical extensions in
`idylls.extension`; polynomials and the factorization test in `idylls.poly`;
Newton polygons and initial forms in `idylls.newton`; the multiplicity
engines and the lifting algorithm in `idylls.mult`; brute-force reference
oracles in `idylls.oracle`; the command line tool in `idylls.cli`.
"""

from .algebra import (
    FiniteFieldIdyll,
    ForeignElementError,
    FormalSum,
    Idyll,
    KrasnerIdyll,
    OagIdyll,
    ParseError,
    PhaseIdyll,
    QuotientIdyll,
    RationalFieldIdyll,
    SignIdyll,
    StructuralError,
    SumSet,
    UnsupportedOperationError,
    check_idyll_axioms,
    f1pm,
    finite_field,
    is_null,
    is_null_phase,
    krasner,
    oag_idyll,
    padic_valuation,
    phase_idyll,
    quotient_hyperfield,
    rational_field,
    sign_idyll,
    sign_of_rational,
    sum_set,
)
from .extension import (
    EXT_ZERO,
    ExtElement,
    ExtensionDescriptor,
    check_extension_axioms,
    ev0,
    ext_is_null,
    ext_mul,
    layering_hypersum,
    lc,
    signed_tropical,
    trop_extension,
    tropical,
    valuation,
)
from .mult import (
    FactorizationChain,
    SearchCapExceeded,
    degree_bound_check,
    divide_once,
    is_root,
    lift_factorization,
    mult_closed_form,
    multiplicity,
    quotient_level_grid,
    root_candidates,
)
from .newton import (
    Edge,
    NewtonPolygon,
    initial_form_at,
    initial_form_recursive,
    initial_form_rounds,
    initial_form_split,
    newton_polygon,
    render_polygon,
)
from .oag import (
    INFINITY,
    OagValue,
    format_oag_value,
    format_rational,
    oag,
    oag_add,
    oag_cmp,
    oag_min,
    oag_project_head,
    oag_zero,
    parse_oag_value,
)
from .oracle import (
    OracleReport,
    bounded_extension_oracle,
    exhaustive_multiplicity,
    exhaustive_root_set,
    run_pinned_corpus,
    sign_division_witness,
    tropical_division_witness,
)
from .poly import Polynomial, eval_sum, factor_check, monomial_substitute

__version__ = "0.1.0"

__all__ = [
    "EXT_ZERO",
    "Edge",
    "ExtElement",
    "ExtensionDescriptor",
    "FactorizationChain",
    "FiniteFieldIdyll",
    "ForeignElementError",
    "FormalSum",
    "INFINITY",
    "Idyll",
    "KrasnerIdyll",
    "NewtonPolygon",
    "OagIdyll",
    "OagValue",
    "OracleReport",
    "ParseError",
    "PhaseIdyll",
    "Polynomial",
    "QuotientIdyll",
    "RationalFieldIdyll",
    "SearchCapExceeded",
    "SignIdyll",
    "StructuralError",
    "SumSet",
    "UnsupportedOperationError",
    "bounded_extension_oracle",
    "check_extension_axioms",
    "check_idyll_axioms",
    "degree_bound_check",
    "divide_once",
    "ev0",
    "eval_sum",
    "exhaustive_multiplicity",
    "exhaustive_root_set",
    "ext_is_null",
    "ext_mul",
    "f1pm",
    "factor_check",
    "finite_field",
    "format_oag_value",
    "format_rational",
    "initial_form_at",
    "initial_form_recursive",
    "initial_form_rounds",
    "initial_form_split",
    "is_null",
    "is_null_phase",
    "is_root",
    "krasner",
    "layering_hypersum",
    "lc",
    "lift_factorization",
    "monomial_substitute",
    "mult_closed_form",
    "multiplicity",
    "newton_polygon",
    "oag",
    "oag_add",
    "oag_cmp",
    "oag_idyll",
    "oag_min",
    "oag_project_head",
    "oag_zero",
    "padic_valuation",
    "parse_oag_value",
    "phase_idyll",
    "quotient_hyperfield",
    "quotient_level_grid",
    "rational_field",
    "render_polygon",
    "root_candidates",
    "run_pinned_corpus",
    "sign_division_witness",
    "sign_idyll",
    "sign_of_rational",
    "signed_tropical",
    "sum_set",
    "trop_extension",
    "tropical",
    "tropical_division_witness",
    "valuation",
]
