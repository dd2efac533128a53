"""Partial difference sets in finite abelian groups."""

from .feasibility import (
    OrderFactorization,
    SubgroupRestriction,
    Verdict,
    atlas,
    congruence_rule,
    paley_existence,
    rule_beta_minus_one,
    rule_delta_square,
    rule_main_theorem,
    sieve,
    subgroup_restriction,
)
from .gf import FiniteField, field_mul, find_irreducible, paley_pds
from .groups import (
    AbelianGroup,
    HallSubgroup,
    character_sums,
    character_value,
    element_order,
    hall_subgroup,
    parse_group,
    power_class,
    power_class_partition,
)
from .pds import (
    CandidateSet,
    PdsParams,
    VerificationReport,
    cayley_srg_params,
    difference_counts,
    paley_params,
    verify_pds,
)
from .search import (
    SearchProblem,
    SearchResult,
    mixed_orbit,
    mixed_orbit_closure_check,
    multiplier_closure_check,
    search,
)

__version__ = "0.1.0"
