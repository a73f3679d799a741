"""Symmetric sums of monomials over distinct elements of finite unit subgroups."""

from unitsums.errors import NotNiceError, PreconditionError
from unitsums.group import (
    UnitSubgroup,
    full_unit_group,
    generated_subgroup,
    nth_residue_subgroup,
    parse_subgroup,
)
from unitsums.nicety import NicenessReport, example1_condition, example2_condition, is_a_nice
from unitsums.ring import ModRing, RingElement, make_ring
from unitsums.symsum import (
    brute_force_p,
    brute_force_p_sharp,
    chi,
    closed_form_p,
    evaluate,
    reduce,
    valid_partitions,
)

__all__ = [
    "ModRing",
    "NicenessReport",
    "NotNiceError",
    "PreconditionError",
    "RingElement",
    "UnitSubgroup",
    "brute_force_p",
    "brute_force_p_sharp",
    "chi",
    "closed_form_p",
    "evaluate",
    "example1_condition",
    "example2_condition",
    "full_unit_group",
    "generated_subgroup",
    "is_a_nice",
    "make_ring",
    "nth_residue_subgroup",
    "parse_subgroup",
    "reduce",
    "valid_partitions",
]
