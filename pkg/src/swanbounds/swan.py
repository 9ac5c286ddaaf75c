"""Bounds on the Swan subgroup T, the kernel group D and the realizable
intersection R /\\ D for the group ring O_K[C_p].

Everything is a quotient or power subgroup of the unit group of O_K/pO_K:

    V_p      = O^* / Im(units)
    lower_T  = V_p^(p-1)
    upper_T  = O^* / (Im(units) * (Z/pZ)^*)
    lower_RD = V_p^((p-1)^2/2)

When p is unramified D = T, and R /\\ D sits between T^((p-1)/2) and T.
When p is ramified the two bounds on T meet at C_p but nothing bounds
R /\\ D from above.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

from .abgroup import AbGroup, iso_eq, power_subgroup, quotient
from .finring import (
    CONSTRUCTIVE_CAP,
    build_residue_ring,
    image_of_units,
    rational_image,
    unit_group_structure,
)
from .quadfield import FieldSpec, SplittingType

__all__ = [
    "RDEquality",
    "SwanReport",
    "compute_vp",
    "lower_bound_T",
    "upper_bound_T",
    "realizable_bounds",
    "kernel_group_report",
]


class RDEquality(enum.Enum):
    """Whether R /\\ D = T is *guaranteed*; there is no "definitely not"."""

    GUARANTEED = "guaranteed"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SwanReport:
    field: FieldSpec
    p: int
    splitting: SplittingType
    unit_group: AbGroup
    v_p: AbGroup
    lower_t: AbGroup
    upper_t: AbGroup
    exact_t: Optional[AbGroup]
    d_equals_t: bool
    lower_rd: AbGroup
    upper_rd: Optional[AbGroup]
    rd_equality: RDEquality
    nontrivial: bool


Gens = Iterable[Sequence[int]]


def compute_vp(unit_group: Sequence[int] | AbGroup, unit_image: Gens) -> AbGroup:
    return quotient(unit_group, unit_image)


def lower_bound_T(v_p: AbGroup, p: int) -> AbGroup:
    return power_subgroup(v_p, p - 1)


def upper_bound_T(unit_group: Sequence[int] | AbGroup, unit_image: Gens, rational: Gens) -> AbGroup:
    return quotient(unit_group, list(unit_image) + list(rational))


def realizable_bounds(
    v_p: AbGroup,
    lower_t: AbGroup,
    upper_t: AbGroup,
    exact_t: Optional[AbGroup],
    splitting: SplittingType,
    p: int,
) -> tuple[AbGroup, Optional[AbGroup], RDEquality]:
    """(lower_rd, upper_rd, rd_equality).

    T is a quotient of upper_t, so an upper bound whose exponent is coprime
    to (p-1)/2 forces the same for T, and then T^((p-1)/2) = T.
    """
    if splitting is SplittingType.RAMIFIED:
        return (exact_t if exact_t is not None else lower_t), None, RDEquality.UNKNOWN
    half = (p - 1) // 2
    lower = power_subgroup(v_p, (p - 1) * half)
    ref = exact_t if exact_t is not None else upper_t
    eq = RDEquality.GUARANTEED if gcd(ref.exponent, half) == 1 else RDEquality.UNKNOWN
    return lower, upper_t, eq


def kernel_group_report(field: FieldSpec, p: int, cap: int = CONSTRUCTIVE_CAP) -> SwanReport:
    ring = build_residue_ring(field, p)
    pres = unit_group_structure(ring, cap=cap)
    units = image_of_units(ring, pres)
    rational = rational_image(ring, pres)

    v_p = compute_vp(pres.orders, units)
    lower = lower_bound_T(v_p, p)
    upper = upper_bound_T(pres.orders, units, rational)
    # a group squeezed between two isomorphic finite groups equals both
    exact = lower if iso_eq(lower, upper) else None

    lower_rd, upper_rd, eq = realizable_bounds(v_p, lower, upper, exact, ring.kind, p)
    return SwanReport(
        field=field,
        p=p,
        splitting=ring.kind,
        unit_group=AbGroup.from_orders(pres.orders),
        v_p=v_p,
        lower_t=lower,
        upper_t=upper,
        exact_t=exact,
        d_equals_t=ring.kind is not SplittingType.RAMIFIED,
        lower_rd=lower_rd,
        upper_rd=upper_rd,
        rd_equality=eq,
        nontrivial=not lower_rd.is_trivial(),
    )
