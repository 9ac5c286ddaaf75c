"""Small integer helpers: primality, factorization, primitive roots."""

from __future__ import annotations

from math import isqrt

from .errors import NotPrime, PrimeTwo


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_odd_prime(p: int) -> None:
    """Raise unless ``p`` is an odd prime.  ``p = 2`` gets its own error."""
    if p == 2:
        raise PrimeTwo("p = 2 is not supported; p must be an odd prime")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_square_free(n: int) -> bool:
    for f in range(2, isqrt(n) + 1):
        if n % (f * f) == 0:
            return False
    return True


def primitive_root(p: int) -> int:
    """Smallest primitive root modulo the odd prime ``p``."""
    qs = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    return 1  # p = 2 only; unreachable for odd p


def primes_between(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]
