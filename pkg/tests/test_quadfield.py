from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from swanbounds.arith import is_prime, primes_between
from swanbounds.errors import ExcludedD, NotPositive, NotPrime, NotSquareFree, PrimeTwo
from swanbounds.quadfield import SplittingType, is_unramified, legendre, make_field, splitting_type

from conftest import GRID_D


def _omega(d):
    """omega as (x, y) meaning x + y*sqrt(-d)."""
    if d % 4 == 3:
        return Fraction(1, 2), Fraction(1, 2)
    return Fraction(0), Fraction(1)


def _minpoly_at_omega(field):
    d = field.d
    x, y = _omega(d)
    sq = (x * x - d * y * y, 2 * x * y)
    c1, c0 = field.minpoly
    return (sq[0] + c1 * x + c0, sq[1] + c1 * y)


def test_make_field_examples():
    f5 = make_field(5)
    assert (f5.d, f5.disc, f5.minpoly) == (5, -20, (0, 5))
    f7 = make_field(7)
    assert (f7.d, f7.disc, f7.minpoly) == (7, -7, (-1, 2))
    assert _minpoly_at_omega(f5) == (0, 0)
    assert _minpoly_at_omega(f7) == (0, 0)


@pytest.mark.parametrize("d", GRID_D)
def test_field_invariants(d):
    f = make_field(d)
    assert _minpoly_at_omega(f) == (0, 0)
    assert f.disc % 4 in (0, 1)
    # disc of x^2 + c1 x + c0 is c1^2 - 4 c0
    c1, c0 = f.minpoly
    assert c1 * c1 - 4 * c0 == f.disc


@pytest.mark.parametrize(
    "d, exc", [(12, NotSquareFree), (4, NotSquareFree), (1, ExcludedD), (3, ExcludedD), (0, NotPositive), (-5, NotPositive)]
)
def test_make_field_rejects(d, exc):
    with pytest.raises(exc):
        make_field(d)


def test_legendre_examples():
    assert legendre(1, 7) == 1
    assert legendre(14, 7) == 0
    assert legendre(2, 11) == -1


@pytest.mark.parametrize("p", primes_between(3, 61))
def test_legendre_matches_enumeration(p):
    squares = {x * x % p for x in range(1, p)}
    for a in range(-p, 2 * p):
        want = 0 if a % p == 0 else (1 if a % p in squares else -1)
        assert legendre(a, p) == want


@given(st.sampled_from(primes_between(3, 199)), st.integers(1, 10**6), st.integers(1, 10**6))
def test_legendre_multiplicative(p, a, b):
    if a % p and b % p:
        assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


def test_splitting_examples():
    assert splitting_type(make_field(5), 3) is SplittingType.SPLIT
    assert splitting_type(make_field(5), 5) is SplittingType.RAMIFIED
    assert splitting_type(make_field(2), 5) is SplittingType.INERT
    assert is_unramified(make_field(5), 3)
    assert not is_unramified(make_field(5), 5)
    assert is_unramified(make_field(2), 5)


def test_splitting_rejects_bad_primes():
    with pytest.raises(PrimeTwo):
        splitting_type(make_field(5), 2)
    with pytest.raises(NotPrime):
        splitting_type(make_field(5), 9)


@pytest.mark.parametrize("d", GRID_D)
def test_splitting_matches_root_count(d):
    f = make_field(d)
    c1, c0 = f.minpoly
    for p in primes_between(3, 97):
        roots = [r for r in range(p) if (r * r + c1 * r + c0) % p == 0]
        want = {0: SplittingType.INERT, 1: SplittingType.RAMIFIED, 2: SplittingType.SPLIT}[len(roots)]
        assert splitting_type(f, p) is want
        assert (want is SplittingType.RAMIFIED) == (d % p == 0)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
