"""Application Services - Kummer criterion, graph checks, construction and search."""

from .kummer_criterion import (
    coefficient_from_phases,
    extension_violation,
    is_kummer_set,
    multiset_condition_holds,
    symmetric_coefficient,
)
from .construction import decompose_chain_with_partner, decompose_even_chain, standard_basis
from .symmetry import symmetry_representatives
from .brute_force import brute_force_oracle, enumerate_maximal_sets
from .search_service import max_kummer_dimension
from .lemma_service import run_lemma_suite

__all__ = [
    "coefficient_from_phases",
    "extension_violation",
    "is_kummer_set",
    "multiset_condition_holds",
    "symmetric_coefficient",
    "decompose_chain_with_partner",
    "decompose_even_chain",
    "standard_basis",
    "symmetry_representatives",
    "brute_force_oracle",
    "enumerate_maximal_sets",
    "max_kummer_dimension",
    "run_lemma_suite",
]
