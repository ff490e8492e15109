"""The Orlik-Terao ideal I(A), its relative quotients, and theorem checks."""
from .betti import BettiData, betti_series, extracted_q, generic_betti, q_poly
from .checks import (
    FittingMatrix,
    coatom_composition,
    coatom_presentation_check,
    fitting_check,
    groebner_degree_check,
    modular_factorization_check,
    relative_hilbert_check,
    relative_initial_check,
    relative_view,
    terao_check,
)
from .common import fragment, ot_view, terao_series
from .formality import is_2formal, is_quadratic, koszul_necessary, linear_relations, qci_check
from .graded import GradedIdealView, graded_view, monomial_budget_degree
from .relations import CircuitRelation, circuit_relation, eliminate, ot_generators, relative_relation

__all__ = [
    "BettiData",
    "CircuitRelation",
    "FittingMatrix",
    "GradedIdealView",
    "betti_series",
    "circuit_relation",
    "coatom_composition",
    "coatom_presentation_check",
    "eliminate",
    "extracted_q",
    "fitting_check",
    "fragment",
    "generic_betti",
    "graded_view",
    "groebner_degree_check",
    "is_2formal",
    "is_quadratic",
    "koszul_necessary",
    "linear_relations",
    "modular_factorization_check",
    "monomial_budget_degree",
    "ot_generators",
    "ot_view",
    "q_poly",
    "qci_check",
    "relative_hilbert_check",
    "relative_initial_check",
    "relative_relation",
    "relative_view",
    "terao_check",
    "terao_series",
]
