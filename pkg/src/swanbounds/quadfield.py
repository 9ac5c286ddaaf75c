"""Imaginary quadratic fields Q(sqrt(-d)) and splitting of odd primes."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import check_odd_prime, is_square_free
from .errors import ExcludedD, NotPositive, NotSquareFree

__all__ = [
    "FieldSpec",
    "SplittingType",
    "make_field",
    "legendre",
    "splitting_type",
    "is_unramified",
]


class SplittingType(enum.Enum):
    INERT = "inert"
    SPLIT = "split"
    RAMIFIED = "ramified"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FieldSpec:
    """The field Q(sqrt(-d)) with its integral generator omega.

    ``minpoly = (c1, c0)`` encodes ``x^2 + c1*x + c0``, the minimal
    polynomial of omega, so that O_K = Z[omega].
    """

    d: int
    disc: int
    minpoly: tuple[int, int]

    def __str__(self) -> str:
        return f"Q(sqrt(-{self.d}))"


def make_field(d: int) -> FieldSpec:
    if d <= 0:
        raise NotPositive(f"d must be positive, got {d}")
    if not is_square_free(d):
        raise NotSquareFree(f"d = {d} is not square-free")
    if d in (1, 3):
        raise ExcludedD(f"d = {d} has extra units and is excluded")
    if d % 4 == 3:
        # omega = (1 + sqrt(-d)) / 2
        return FieldSpec(d=d, disc=-d, minpoly=(-1, (1 + d) // 4))
    return FieldSpec(d=d, disc=-4 * d, minpoly=(0, d))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def splitting_type(field: FieldSpec, p: int) -> SplittingType:
    check_odd_prime(p)
    s = legendre(field.disc, p)
    if s == 0:
        return SplittingType.RAMIFIED
    return SplittingType.SPLIT if s == 1 else SplittingType.INERT


def is_unramified(field: FieldSpec, p: int) -> bool:
    return splitting_type(field, p) is not SplittingType.RAMIFIED
