"""Exact inverse-system toolkit: sparse forms with rational or prime-field
coefficients, catalecticant ranks and Hilbert functions, hyperplane
restriction checks, and certified h-vector bound tables for socle degree
at most 5."""

from __future__ import annotations

__version__ = "0.1.0"

from .apolarity import (
    CatalecticantMatrix,
    HilbertFunction,
    apply_operator,
    catalecticant,
    codimension,
    hilbert_function,
)
from .errors import (
    CorruptCacheError,
    ExactDivisionError,
    HypothesisError,
    IncompleteTableError,
    MixedFieldsError,
    MixedRingsError,
    NotHomogeneousError,
    ParseError,
    PreconditionError,
    RealizationGapError,
    UnknownVariableError,
    ZeroFormError,
)
from .fields import DEFAULT_FIELD, DEFAULT_PRIME, GF, QQ, parse_field_spec
from .poly import Form, exact_div, form_gcd, monomials_of_degree, parse_form, random_form
from .restriction import (
    LinearForm,
    TrialReport,
    Witness,
    check_partials_gcd,
    codim_drop_check,
    quadratic_is_split,
    random_linear_form,
    restrict_mod,
    restricted_rank,
    run_codim_drop_suite,
    run_partials_gcd_suite,
    run_restricted_rank_suite,
    trial_rng,
)
from .search import (
    FBoundEntry,
    GicReport,
    asymptotic_reference,
    bipartite_monomial_form,
    classify_gorenstein_hf,
    classify_h_vector,
    f_upper_bound,
    gic_verify,
    known_min_h2,
    max_h2,
    padded_form,
    power_sum_form,
    realize_interval,
    search_min_h2,
    verify_certificate,
)
from .cache import load_table, merge_store
from .cli import main, run

__all__ = [
    "CatalecticantMatrix",
    "CorruptCacheError",
    "DEFAULT_FIELD",
    "DEFAULT_PRIME",
    "ExactDivisionError",
    "FBoundEntry",
    "Form",
    "GF",
    "GicReport",
    "HilbertFunction",
    "HypothesisError",
    "IncompleteTableError",
    "LinearForm",
    "MixedFieldsError",
    "MixedRingsError",
    "NotHomogeneousError",
    "ParseError",
    "PreconditionError",
    "QQ",
    "RealizationGapError",
    "TrialReport",
    "UnknownVariableError",
    "Witness",
    "ZeroFormError",
    "apply_operator",
    "asymptotic_reference",
    "bipartite_monomial_form",
    "catalecticant",
    "check_partials_gcd",
    "classify_gorenstein_hf",
    "classify_h_vector",
    "codim_drop_check",
    "codimension",
    "exact_div",
    "f_upper_bound",
    "form_gcd",
    "gic_verify",
    "hilbert_function",
    "known_min_h2",
    "load_table",
    "main",
    "max_h2",
    "merge_store",
    "monomials_of_degree",
    "padded_form",
    "parse_field_spec",
    "parse_form",
    "power_sum_form",
    "quadratic_is_split",
    "random_form",
    "random_linear_form",
    "realize_interval",
    "restrict_mod",
    "restricted_rank",
    "run",
    "run_codim_drop_suite",
    "run_partials_gcd_suite",
    "run_restricted_rank_suite",
    "search_min_h2",
    "trial_rng",
    "verify_certificate",
]
