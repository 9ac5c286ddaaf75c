"""The residue ring O_K / pO_K and its unit group.

Every residue ring is handled as F_p[x]/(fbar) with fbar the minimal
polynomial of omega reduced mod p; an element ``(a, b)`` stands for
``a + b*omega``.  Only the unit-group *structure* depends on how p splits:

* inert:    F_{p^2}, cyclic of order p^2 - 1;
* split:    F_p x F_p via the two roots of fbar, units C_{p-1} x C_{p-1};
* ramified: F_p[mu] with mu^2 = 0, units C_{p-1} x C_p.

``oracle_unit_structure`` recomputes the invariant factors by brute force
and shares nothing with the constructive path beyond the multiplication rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Callable, Iterator, NamedTuple, Sequence, TypeVar

import numpy as np

from .arith import factorize, primitive_root
from .errors import CapExceeded, NotAUnit
from .quadfield import FieldSpec, SplittingType, splitting_type

__all__ = [
    "RingElem",
    "ResidueRing",
    "UnitPresentation",
    "build_residue_ring",
    "unit_group_structure",
    "discrete_log",
    "evaluate",
    "image_of_units",
    "rational_image",
    "oracle_unit_structure",
    "CONSTRUCTIVE_CAP",
    "ORACLE_CAP",
]

CONSTRUCTIVE_CAP = 4096
ORACLE_CAP = 997

T = TypeVar("T")


class RingElem(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"{self.a}+{self.b}w"


@dataclass(frozen=True)
class ResidueRing:
    p: int
    fbar: tuple[int, int]
    kind: SplittingType
    field: FieldSpec

    @property
    def one(self) -> RingElem:
        return RingElem(1, 0)

    @property
    def zero(self) -> RingElem:
        return RingElem(0, 0)

    @property
    def omega(self) -> RingElem:
        return RingElem(0, 1)

    def elem(self, a: int, b: int = 0) -> RingElem:
        return RingElem(a % self.p, b % self.p)

    def add(self, x: RingElem, y: RingElem) -> RingElem:
        return RingElem((x.a + y.a) % self.p, (x.b + y.b) % self.p)

    def mul(self, x: RingElem, y: RingElem) -> RingElem:
        c1, c0 = self.fbar
        p = self.p
        bb = x.b * y.b
        # omega^2 = -c1*omega - c0
        return RingElem((x.a * y.a - c0 * bb) % p, (x.a * y.b + x.b * y.a - c1 * bb) % p)

    def pow(self, x: RingElem, k: int) -> RingElem:
        if k < 0:
            return self.pow(self.inverse(x), -k)
        acc = self.one
        while k:
            if k & 1:
                acc = self.mul(acc, x)
            x = self.mul(x, x)
            k >>= 1
        return acc

    def norm(self, x: RingElem) -> int:
        """Determinant of multiplication by x, i.e. the norm down to F_p."""
        c1, c0 = self.fbar
        return (x.a * x.a - c1 * x.a * x.b + c0 * x.b * x.b) % self.p

    def is_unit(self, x: RingElem) -> bool:
        return self.norm(x) != 0

    def inverse(self, x: RingElem) -> RingElem:
        n = self.norm(x)
        if n == 0:
            raise NotAUnit(f"{x} is a zero-divisor in O/{self.p}O")
        c1 = self.fbar[0]
        # conjugate of a + b*omega is (a - c1*b) - b*omega
        s = pow(n, -1, self.p)
        return RingElem((x.a - c1 * x.b) * s % self.p, -x.b * s % self.p)

    def elements(self) -> Iterator[RingElem]:
        """All p^2 elements in lexicographic (a, b) order."""
        for a in range(self.p):
            for b in range(self.p):
                yield RingElem(a, b)

    def unit_count(self) -> int:
        p = self.p
        if self.kind is SplittingType.INERT:
            return p * p - 1
        if self.kind is SplittingType.SPLIT:
            return (p - 1) ** 2
        return p * (p - 1)

    def roots(self) -> list[int]:
        """Roots of fbar in F_p, ascending (with multiplicity one)."""
        c1, c0 = self.fbar
        p = self.p
        return [r for r in range(p) if (r * r + c1 * r + c0) % p == 0]


@dataclass(frozen=True)
class UnitPresentation:
    """O^* written as a direct product of cyclic groups <g_i> of order n_i.

    ``prim_root`` is the primitive root mod p used to build the generators;
    ``roots`` holds the roots of fbar the decomposition was made along
    (empty when inert, two when split, the double root when ramified).
    """

    ring: ResidueRing
    generators: tuple[RingElem, ...]
    orders: tuple[int, ...]
    prim_root: int
    roots: tuple[int, ...]

    @property
    def order(self) -> int:
        out = 1
        for n in self.orders:
            out *= n
        return out


def build_residue_ring(field: FieldSpec, p: int) -> ResidueRing:
    kind = splitting_type(field, p)
    c1, c0 = field.minpoly
    return ResidueRing(p=p, fbar=(c1 % p, c0 % p), kind=kind, field=field)


def _has_order(ring: ResidueRing, g: RingElem, n: int, primes: Sequence[int]) -> bool:
    if ring.pow(g, n) != ring.one:
        return False
    return all(ring.pow(g, n // q) != ring.one for q in primes)


def unit_group_structure(ring: ResidueRing, cap: int = CONSTRUCTIVE_CAP) -> UnitPresentation:
    p = ring.p
    if p > cap:
        raise CapExceeded(f"p = {p} exceeds constructive cap {cap}")
    g = primitive_root(p)

    if ring.kind is SplittingType.INERT:
        n = p * p - 1
        qs = list(factorize(n))
        for x in ring.elements():
            if ring.is_unit(x) and _has_order(ring, x, n, qs):
                return UnitPresentation(ring, (x,), (n,), g, ())
        raise AssertionError("F_{p^2}^* is cyclic; search cannot fail")

    if ring.kind is SplittingType.SPLIT:
        r1, r2 = ring.roots()
        # idempotents: e1 evaluates to 1 at r1 and 0 at r2, e2 the reverse
        s = pow(r1 - r2, -1, p)
        e1 = ring.elem(-r2 * s, s)
        e2 = ring.add(ring.one, ring.elem(r2 * s, -s))
        gen1 = ring.add(ring.mul(ring.elem(g), e1), e2)
        gen2 = ring.add(e1, ring.mul(ring.elem(g), e2))
        return UnitPresentation(ring, (gen1, gen2), (p - 1, p - 1), g, (r1, r2))

    (r,) = ring.roots()
    one_plus_mu = ring.elem(1 - r, 1)  # 1 + (omega - r)
    return UnitPresentation(ring, (ring.elem(g), one_plus_mu), (p - 1, p), g, (r,))


def bsgs(
    base: T,
    target: T,
    order: int,
    mul: Callable[[T, T], T],
    power: Callable[[T, int], T],
    one: T,
) -> int:
    """log_base(target) in the cyclic group <base> of the given order.

    Brute force for tiny orders, baby-step/giant-step otherwise.  Raises
    ``ValueError`` if target is not in <base>.
    """
    if order <= 64:
        acc = one
        for k in range(order):
            if acc == target:
                return k
            acc = mul(acc, base)
        raise ValueError("target not in the cyclic subgroup")
    m = isqrt(order - 1) + 1
    table: dict[T, int] = {}
    acc = one
    for j in range(m):
        table.setdefault(acc, j)
        acc = mul(acc, base)
    giant = power(base, order - m)  # base^(-m)
    gamma = target
    for i in range(m + 1):
        j = table.get(gamma)
        if j is not None:
            return (i * m + j) % order
        gamma = mul(gamma, giant)
    raise ValueError("target not in the cyclic subgroup")


def _log_mod_p(g: int, x: int, p: int) -> int:
    return bsgs(g, x % p, p - 1, lambda u, v: u * v % p, lambda u, k: pow(u, k, p), 1)


def discrete_log(ring: ResidueRing, pres: UnitPresentation, x: RingElem) -> tuple[int, ...]:
    """Exponent vector e with prod(g_i^e_i) = x, each e_i reduced mod n_i."""
    if not ring.is_unit(x):
        raise NotAUnit(f"{x} is not a unit")
    p = ring.p
    if ring.kind is SplittingType.INERT:
        (gen,) = pres.generators
        return (bsgs(gen, x, pres.orders[0], ring.mul, ring.pow, ring.one),)
    if ring.kind is SplittingType.SPLIT:
        return tuple(_log_mod_p(pres.prim_root, x.a + x.b * r, p) for r in pres.roots)
    (r,) = pres.roots
    # x = u + v*mu with mu = omega - r;  x = u * (1 + mu)^(v/u)
    u = (x.a + x.b * r) % p
    return (_log_mod_p(pres.prim_root, u, p), x.b * pow(u, -1, p) % p)


def evaluate(pres: UnitPresentation, exps: Sequence[int]) -> RingElem:
    ring = pres.ring
    acc = ring.one
    for g, e in zip(pres.generators, exps, strict=True):
        acc = ring.mul(acc, ring.pow(g, e))
    return acc


def image_of_units(ring: ResidueRing, pres: UnitPresentation) -> list[tuple[int, ...]]:
    """Coordinates of the images of the global units {1, -1}."""
    return [discrete_log(ring, pres, ring.one), discrete_log(ring, pres, ring.elem(-1))]


def rational_image(ring: ResidueRing, pres: UnitPresentation) -> list[tuple[int, ...]]:
    """Coordinates of a generator of the diagonal copy of (Z/pZ)^*."""
    return [discrete_log(ring, pres, ring.elem(pres.prim_root))]


def _vec_mul(a, b, c, e, fbar, p):
    c1, c0 = fbar
    be = b * e
    return (a * c - c0 * be) % p, (a * e + b * c - c1 * be) % p


def _vec_pow(a, b, k, fbar, p):
    ra = np.ones_like(a)
    rb = np.zeros_like(b)
    while k:
        if k & 1:
            ra, rb = _vec_mul(ra, rb, a, b, fbar, p)
        a, b = _vec_mul(a, b, a, b, fbar, p)
        k >>= 1
    return ra, rb


def oracle_unit_structure(ring: ResidueRing, cap: int = ORACLE_CAP) -> list[int]:
    """Invariant factors of O^* from exhaustive enumeration.

    Units are the elements with x^L = 1 for L = p(p-1)(p^2-1), a common
    multiple of every possible unit order.  The q-primary part is then read
    off the counts #{x : x^(q^j) = 1}.
    """
    p = ring.p
    if p > cap:
        raise CapExceeded(f"p = {p} exceeds oracle cap {cap}")
    grid = np.arange(p, dtype=np.int64)
    a = np.repeat(grid, p)
    b = np.tile(grid, p)
    ua, ub = _vec_pow(a, b, p * (p - 1) * (p * p - 1), ring.fbar, p)
    is_unit = (ua == 1) & (ub == 0)
    a, b = a[is_unit], b[is_unit]
    n_units = int(is_unit.sum())

    primary: dict[int, list[int]] = {}
    for q, e in factorize(n_units).items():
        ranks = []
        prev = 1
        ya, yb = a, b
        for _ in range(e):
            ya, yb = _vec_pow(ya, yb, q, ring.fbar, p)
            count = int(((ya == 1) & (yb == 0)).sum())
            ratio, r = count // prev, 0
            while ratio > 1:
                ratio //= q
                r += 1
            ranks.append(r)
            prev = count
        # ranks[j-1] = number of cyclic q-factors of order >= q^j
        ranks.append(0)
        exps: list[int] = []
        for j in range(e, 0, -1):
            exps.extend([j] * (ranks[j - 1] - ranks[j]))
        primary[q] = exps  # descending

    width = max((len(v) for v in primary.values()), default=0)
    chain = []
    for k in range(width):
        f = 1
        for q, exps in primary.items():
            if k < len(exps):
                f *= q ** exps[k]
        chain.append(f)
    return sorted(chain)
