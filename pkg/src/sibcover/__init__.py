"""Sibling-group cover solvers under Mendelian inheritance constraints."""

from .genotypes import (
    CoverSolution,
    FindMinParentInstance,
    Genotype,
    Individual,
    ParseError,
    Population,
    genotype,
    individual,
    parse_population,
    population,
    serialize_population,
)
from .mendel import (
    OracleCounter,
    brute_sibling_check,
    can_be_child_of,
    is_sibling_set,
    locus_feasible,
    materialize_parents,
    verify_cover,
)
from .greedy import GreedyConfig, greedy_cover, next_group
from .exact import (
    BudgetExceededError,
    ExactResult,
    FamilyAssignment,
    InfeasibleError,
    ParentSelection,
    exact_find_min_parent,
    exact_min_parent,
    feasible_pairs_for_group,
    greedy_find_min_parent,
    locus_slot_assignment_exists,
    validate_instance,
)
from .simgen import Family, SimConfig, mendelian_child, random_population

__all__ = [
    "BudgetExceededError",
    "CoverSolution",
    "ExactResult",
    "Family",
    "FamilyAssignment",
    "FindMinParentInstance",
    "Genotype",
    "GreedyConfig",
    "Individual",
    "InfeasibleError",
    "OracleCounter",
    "ParentSelection",
    "ParseError",
    "Population",
    "SimConfig",
    "brute_sibling_check",
    "can_be_child_of",
    "exact_find_min_parent",
    "exact_min_parent",
    "feasible_pairs_for_group",
    "genotype",
    "greedy_cover",
    "greedy_find_min_parent",
    "individual",
    "is_sibling_set",
    "locus_feasible",
    "locus_slot_assignment_exists",
    "materialize_parents",
    "mendelian_child",
    "next_group",
    "parse_population",
    "population",
    "random_population",
    "serialize_population",
    "validate_instance",
    "verify_cover",
]
