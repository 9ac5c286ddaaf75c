"""The Stickelberger element and ideal of Z[C], C = (Z/pZ)^*.

Group-ring elements are integer vectors indexed by the residues 1..p-1 in
ascending order: ``coeffs[r - 1]`` is the coefficient of the group element r.

The ideal J = Z[C](theta/p) /\\ Z[C] is computed as theta * L / p, where
L = {beta in Z[C] : beta * theta = 0 mod p}.  L contains pZ[C], so it is
pinned down by the F_p-kernel of multiplication by theta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Sequence

from .abgroup import hermite_normal_form
from .arith import check_odd_prime
from .errors import CapExceeded, OutOfRange, Unsupported

__all__ = [
    "GroupRingElem",
    "StickelbergerIdeal",
    "trace_residue",
    "theta",
    "groupring_mul",
    "augmentation",
    "multiplication_matrix",
    "stickelberger_ideal",
    "swan_power_exponent",
    "LATTICE_CAP",
]

LATTICE_CAP = 101


@dataclass(frozen=True)
class GroupRingElem:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != self.p - 1:
            raise ValueError(f"need {self.p - 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def basis(cls, p: int, r: int) -> "GroupRingElem":
        """The group element r itself."""
        c = [0] * (p - 1)
        c[r % p - 1] = 1
        return cls(p, tuple(c))

    def __getitem__(self, r: int) -> int:
        return self.coeffs[r - 1]

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        return GroupRingElem(self.p, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "GroupRingElem") -> "GroupRingElem":
        return GroupRingElem(self.p, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "GroupRingElem") -> "GroupRingElem":
        return groupring_mul(self, other, self.p)

    def scale(self, k: int) -> "GroupRingElem":
        return GroupRingElem(self.p, tuple(k * x for x in self.coeffs))


def trace_residue(delta: int, p: int, n: int = 1) -> int:
    """Least non-negative residue of the trace F_{p^n} -> F_p of delta.

    Only n = 1 is supported, where the trace is the identity.
    """
    if n != 1:
        raise Unsupported("only the prime field (n = 1) is supported")
    if not 1 <= delta <= p - 1:
        raise OutOfRange(f"delta must lie in 1..{p - 1}, got {delta}")
    return delta


def theta(p: int) -> GroupRingElem:
    """sum over delta of t(delta) * delta^{-1}."""
    check_odd_prime(p)
    c = [0] * (p - 1)
    for delta in range(1, p):
        c[pow(delta, -1, p) - 1] += trace_residue(delta, p)
    return GroupRingElem(p, tuple(c))


def groupring_mul(x: GroupRingElem, y: GroupRingElem, p: int) -> GroupRingElem:
    if x.p != p or y.p != p:
        raise ValueError("group-ring elements over different primes")
    out = [0] * (p - 1)
    for s, xs in enumerate(x.coeffs, start=1):
        if xs:
            for t, yt in enumerate(y.coeffs, start=1):
                if yt:
                    out[s * t % p - 1] += xs * yt
    return GroupRingElem(p, tuple(out))


def augmentation(x: GroupRingElem) -> int:
    return sum(x.coeffs)


def multiplication_matrix(x: GroupRingElem) -> list[list[int]]:
    """Rows are x * [r] for r = 1..p-1, so ``beta @ M == beta * x``."""
    p = x.p
    return [list(groupring_mul(GroupRingElem.basis(p, r), x, p).coeffs) for r in range(1, p)]


def _kernel_mod_p(M: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Basis (reduced echelon, entries in [0, p)) of {v : v @ M = 0 mod p}."""
    n = len(M)
    m = len(M[0])
    # solve M^T v = 0: row-reduce the transpose
    A = [[M[i][j] % p for i in range(n)] for j in range(m)]
    pivcols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [a * inv % p for a in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
        pivcols.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivcols]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(A, pivcols):
            v[pc] = -row[f] % p
        basis.append(v)
    return basis


@dataclass(frozen=True)
class StickelbergerIdeal:
    """J as a Hermite-reduced lattice basis inside Z^(p-1).

    ``preimages[i]`` is a beta with ``basis[i] == theta * beta / p`` exactly.
    ``preimage_lattice`` is a basis of L = {beta : beta * theta = 0 mod p}.
    """

    p: int
    basis: tuple[GroupRingElem, ...]
    epsilon_gen: int
    preimages: tuple[GroupRingElem, ...] = field(repr=False)
    preimage_lattice: tuple[GroupRingElem, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, x: GroupRingElem | Sequence[int]) -> bool:
        v = list(x.coeffs if isinstance(x, GroupRingElem) else x)
        for b in self.basis:
            c = next(i for i, e in enumerate(b.coeffs) if e)
            if any(v[:c]):
                return False
            q, rem = divmod(v[c], b.coeffs[c])
            if rem:
                return False
            if q:
                v = [a - q * e for a, e in zip(v, b.coeffs)]
        return not any(v)


@lru_cache(maxsize=None)
def stickelberger_ideal(p: int, cap: int = LATTICE_CAP) -> StickelbergerIdeal:
    check_odd_prime(p)
    if p > cap:
        raise CapExceeded(f"p = {p} exceeds the lattice cap {cap}")
    th = theta(p)
    M = multiplication_matrix(th)
    n = p - 1

    kernel = _kernel_mod_p(M, p)
    L = hermite_normal_form(kernel + [[p * (i == j) for i in range(n)] for j in range(n)])

    gens = []
    for beta in L:
        prod = [sum(b * row[j] for b, row in zip(beta, M)) for j in range(n)]
        assert all(x % p == 0 for x in prod)
        gens.append([x // p for x in prod])

    H, T = hermite_normal_form(gens, with_transform=True)
    basis = tuple(GroupRingElem(p, tuple(h)) for h in H)
    pre = tuple(
        GroupRingElem(p, tuple(sum(t * beta[j] for t, beta in zip(trow, L)) for j in range(n)))
        for trow in T
    )
    eps = 0
    for b in basis:
        eps = gcd(eps, augmentation(b))
    return StickelbergerIdeal(
        p=p,
        basis=basis,
        epsilon_gen=eps,
        preimages=pre,
        preimage_lattice=tuple(GroupRingElem(p, tuple(v)) for v in L),
    )


def swan_power_exponent(p: int, cap: int = LATTICE_CAP) -> int:
    """Positive generator of the augmentation ideal eps(J)."""
    return stickelberger_ideal(p, cap).epsilon_gen
