"""Finite abelian groups as invariant-factor chains, and the integer matrix
normal forms (Smith, Hermite) the group calculus is built on.

All matrix code uses Python ints, so there is no overflow at any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch

__all__ = [
    "AbGroup",
    "GroupElem",
    "canonical_chain",
    "smith_normal_form",
    "hermite_normal_form",
    "quotient",
    "subgroup_order",
    "power_subgroup",
    "torsion_subgroup",
    "exponent",
    "order",
    "is_trivial",
    "iso_eq",
]

Matrix = list[list[int]]
GroupElem = tuple[int, ...]


def canonical_chain(orders: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of the product of cyclic groups C_n.

    Zero (infinite cyclic) orders are not allowed; factors equal to 1 drop out.
    """
    fs = [abs(n) for n in orders]
    if any(n == 0 for n in fs):
        raise ValueError("infinite cyclic factor in a finite group")
    # repeated (gcd, lcm) replacement converges to the divisibility chain
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            g = gcd(fs[i], fs[j])
            fs[i], fs[j] = g, fs[i] * fs[j] // g
    return tuple(n for n in fs if n > 1)


@dataclass(frozen=True)
class AbGroup:
    """A finite abelian group C_{d1} x ... x C_{dr} with d1 | ... | dr."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        fs = tuple(self.invariant_factors)
        if canonical_chain(fs) != fs:
            raise ValueError(f"{fs} is not a canonical invariant-factor chain")
        object.__setattr__(self, "invariant_factors", fs)

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "AbGroup":
        return cls(canonical_chain(orders))

    @classmethod
    def cyclic(cls, n: int) -> "AbGroup":
        return cls.from_orders([n])

    @property
    def order(self) -> int:
        out = 1
        for n in self.invariant_factors:
            out *= n
        return out

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "1"
        return " x ".join(f"C{n}" for n in self.invariant_factors)


Ambient = Union[AbGroup, Sequence[int]]


def _orders_of(ambient: Ambient) -> tuple[int, ...]:
    if isinstance(ambient, AbGroup):
        return ambient.invariant_factors
    return tuple(ambient)


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(D, U, V)`` with ``U @ M @ V == D``, U and V unimodular.

    D is diagonal with non-negative entries d1 | d2 | ... (zeros last).
    Pivoting picks the entry of smallest absolute value in the remaining block.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return A, U, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // piv))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // piv))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue  # a smaller remainder now exists; re-pivot
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return A, U, V


def hermite_normal_form(
    rows: Sequence[Sequence[int]], with_transform: bool = False
) -> Union[Matrix, tuple[Matrix, Matrix]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    The result is the unique echelon basis with positive pivots and entries
    above each pivot reduced into ``[0, pivot)``; zero rows are dropped.
    With ``with_transform`` also return T with ``T @ rows == H``.
    """
    A = [list(map(int, r)) for r in rows]
    k = len(A)
    n = len(A[0]) if k else 0
    T = _identity(k)
    r = 0
    pivots = []
    for c in range(n):
        if r == k:
            break
        # gcd-combine every later row into row r at column c
        for i in range(r + 1, k):
            if A[i][c] == 0:
                continue
            if A[r][c] == 0:
                A[r], A[i] = A[i], A[r]
                T[r], T[i] = T[i], T[r]
                continue
            x, y = A[r][c], A[i][c]
            g, s, t = _xgcd(x, y)
            u, v = -y // g, x // g
            # [[s, t], [u, v]] has determinant 1
            A[r], A[i] = (
                [s * a + t * b for a, b in zip(A[r], A[i])],
                [u * a + v * b for a, b in zip(A[r], A[i])],
            )
            T[r], T[i] = (
                [s * a + t * b for a, b in zip(T[r], T[i])],
                [u * a + v * b for a, b in zip(T[r], T[i])],
            )
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-a for a in A[r]]
            T[r] = [-a for a in T[r]]
        piv = A[r][c]
        for i in range(r):
            q = A[i][c] // piv
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                T[i] = [a - q * b for a, b in zip(T[i], T[r])]
        pivots.append(c)
        r += 1
    H = A[:r]
    if with_transform:
        return H, T[:r]
    return H


def _xgcd(x: int, y: int) -> tuple[int, int, int]:
    """(g, s, t) with s*x + t*y = g = gcd(x, y) > 0."""
    old_r, rr = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while rr:
        q = old_r // rr
        old_r, rr = rr, old_r - q * rr
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def quotient(ambient: Ambient, subgroup_gens: Iterable[Sequence[int]]) -> AbGroup:
    """The quotient of ``prod C_{n_i}`` by the subgroup generated by the
    given exponent vectors.

    ``ambient`` is either an AbGroup (coordinates relative to its invariant
    factors) or an explicit list of cyclic orders n_i.
    """
    orders = _orders_of(ambient)
    r = len(orders)
    rel: Matrix = [[n if i == j else 0 for j in range(r)] for i, n in enumerate(orders)]
    for g in subgroup_gens:
        g = tuple(g)
        if len(g) != r:
            raise DimensionMismatch(f"generator {g} has length {len(g)}, ambient rank is {r}")
        rel.append([int(x) for x in g])
    if r == 0:
        return AbGroup()
    D, _, _ = smith_normal_form(rel)
    return AbGroup.from_orders(D[i][i] for i in range(r))


def subgroup_order(ambient: Ambient, subgroup_gens: Iterable[Sequence[int]]) -> int:
    orders = _orders_of(ambient)
    total = 1
    for n in orders:
        total *= n
    return total // quotient(orders, subgroup_gens).order


def power_subgroup(G: AbGroup, k: int) -> AbGroup:
    """G^k = {x^k : x in G}."""
    if k < 1:
        raise ValueError("k must be positive")
    return AbGroup.from_orders(n // gcd(n, k) for n in G.invariant_factors)


def torsion_subgroup(G: AbGroup, k: int) -> AbGroup:
    """G_k = {x in G : x^k = 1}."""
    if k < 1:
        raise ValueError("k must be positive")
    return AbGroup.from_orders(gcd(n, k) for n in G.invariant_factors)


def exponent(G: AbGroup) -> int:
    return G.exponent


def order(G: AbGroup) -> int:
    return G.order


def is_trivial(G: AbGroup) -> bool:
    return G.is_trivial()


def iso_eq(G: AbGroup, H: AbGroup) -> bool:
    return G.invariant_factors == H.invariant_factors
