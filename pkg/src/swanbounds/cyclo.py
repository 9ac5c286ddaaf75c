"""Arithmetic in Z[zeta_p] on the power basis 1, zeta, ..., zeta^(p-2), and
the congruence (1 - zeta^n)/(1 - zeta) = n mod (1 - zeta) for the cyclotomic
units u_n = 1 + zeta + ... + zeta^(n-1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import check_odd_prime
from .errors import NotCoprime, OutOfRange

__all__ = [
    "CycloElem",
    "cyclotomic_unit",
    "residue_mod_pi",
    "verify_congruence",
    "CYCLO_CAP",
]

CYCLO_CAP = 97


@dataclass(frozen=True)
class CycloElem:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.p - 1:
            raise ValueError(f"need {self.p - 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_poly(cls, p: int, poly: list[int]) -> "CycloElem":
        """Reduce an arbitrary integer polynomial in zeta to the power basis."""
        c = [0] * p
        for k, a in enumerate(poly):
            c[k % p] += a
        top = c.pop()  # zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
        return cls(p, tuple(x - top for x in c))

    @classmethod
    def zeta_power(cls, p: int, k: int) -> "CycloElem":
        poly = [0] * (k % p + 1)
        poly[-1] = 1
        return cls.from_poly(p, poly)

    def __add__(self, other: "CycloElem") -> "CycloElem":
        return CycloElem(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycloElem") -> "CycloElem":
        return CycloElem(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "CycloElem") -> "CycloElem":
        prod = [0] * (2 * self.p - 3)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CycloElem.from_poly(self.p, prod)


def cyclotomic_unit(p: int, n: int) -> CycloElem:
    """u_n = (1 - zeta^n) / (1 - zeta) = 1 + zeta + ... + zeta^(n-1)."""
    if n % p == 0:
        raise NotCoprime(f"n = {n} is not coprime to p = {p}")
    if not 1 <= n <= p - 1:
        raise OutOfRange(f"n must lie in 1..{p - 1}, got {n}")
    return CycloElem.from_poly(p, [1] * n)


def residue_mod_pi(x: CycloElem, p: int) -> int:
    """Image under Z[zeta] -> Z[zeta]/(1 - zeta) = F_p, i.e. zeta -> 1."""
    return sum(x.coeffs) % p


def verify_congruence(p: int) -> bool:
    """Check u_n = n mod (1 - zeta) and u_n (1 - zeta) = 1 - zeta^n exactly,
    for every n in 1..p-1."""
    check_odd_prime(p)
    one = CycloElem.zeta_power(p, 0)
    pi = one - CycloElem.zeta_power(p, 1)
    for n in range(1, p):
        u = cyclotomic_unit(p, n)
        if residue_mod_pi(u, p) != n:
            return False
        if u * pi != one - CycloElem.zeta_power(p, n):
            return False
    return True
