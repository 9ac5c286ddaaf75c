import itertools

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.matrices.normalforms import hermite_normal_form as sympy_hnf

from swanbounds.arith import primes_between
from swanbounds.errors import CapExceeded, NotPrime, OutOfRange, Unsupported
from swanbounds.stickel import (
    GroupRingElem,
    augmentation,
    groupring_mul,
    multiplication_matrix,
    stickelberger_ideal,
    swan_power_exponent,
    theta,
    trace_residue,
)


def test_trace_residue():
    assert trace_residue(1, 5) == 1
    assert trace_residue(4, 5) == 4
    assert trace_residue(6, 7) == 6
    with pytest.raises(OutOfRange):
        trace_residue(0, 5)
    with pytest.raises(OutOfRange):
        trace_residue(5, 5)
    with pytest.raises(Unsupported):
        trace_residue(1, 5, n=2)


def test_theta_examples():
    assert theta(3).coeffs == (1, 2)
    t5 = theta(5)
    assert (t5[1], t5[2], t5[3], t5[4]) == (1, 3, 2, 4)


@pytest.mark.parametrize("p", primes_between(3, 101))
def test_theta_augmentation(p):
    assert augmentation(theta(p)) == sum(range(1, p)) == p * (p - 1) // 2


def test_groupring_mul_examples():
    p = 7
    one = GroupRingElem.basis(p, 1)
    t = theta(p)
    assert groupring_mul(one, t, p) == t
    assert groupring_mul(GroupRingElem.basis(p, 2), GroupRingElem.basis(p, 3), p) == GroupRingElem.basis(p, 6)
    assert augmentation(groupring_mul(theta(3), theta(3), 3)) == 9


elems7 = st.lists(st.integers(-30, 30), min_size=6, max_size=6).map(lambda c: GroupRingElem(7, tuple(c)))


@given(elems7, elems7)
def test_augmentation_is_ring_map(x, y):
    assert augmentation(x * y) == augmentation(x) * augmentation(y)
    assert augmentation(x + y) == augmentation(x) + augmentation(y)
    assert x * y == y * x


def test_epsilon_examples():
    assert stickelberger_ideal(3).epsilon_gen == 1
    assert stickelberger_ideal(5).epsilon_gen == 2
    assert stickelberger_ideal(7).epsilon_gen == 3
    assert swan_power_exponent(3) == 1
    assert swan_power_exponent(5) == 2
    assert swan_power_exponent(13) == 6


def test_caps_and_validation():
    with pytest.raises(CapExceeded):
        stickelberger_ideal(103)
    with pytest.raises(NotPrime):
        stickelberger_ideal(9)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_ideal_structure(p):
    J = stickelberger_ideal(p)
    th = theta(p)
    # every basis element is theta * beta / p with beta an exact preimage
    for b, beta in zip(J.basis, J.preimages):
        assert (th * beta).coeffs == b.scale(p).coeffs
    # theta * Z[C] is inside J
    for r in range(1, p):
        assert J.contains(th * GroupRingElem.basis(p, r))
    # L = {beta : beta*theta = 0 mod p} contains p Z[C] and maps into J
    for beta in J.preimage_lattice:
        assert all(c % p == 0 for c in (th * beta).coeffs)
    det = 1
    for i, row in enumerate(J.preimage_lattice):
        det *= next(c for c in row.coeffs if c)
    assert len(J.preimage_lattice) == p - 1
    assert p ** (p - 1) % det == 0
    # theta kills the even non-trivial characters, so J has rank (p+1)/2
    assert J.rank == (p + 1) // 2
    assert augmentation(J.basis[0]) % J.epsilon_gen == 0


@pytest.mark.parametrize("p", [5, 7, 11])
def test_p_times_group_ring_not_in_J(p):
    J = stickelberger_ideal(p)
    assert not J.contains(GroupRingElem.basis(p, 1).scale(p))


def _theta_lattice_oracle(p):
    """Membership  alpha in J  <=>  p*alpha in theta*Z[C], decided with
    sympy's Hermite form of the theta-multiples."""
    M = sympy.Matrix(multiplication_matrix(theta(p)))
    W = sympy_hnf(M.T)  # columns span theta * Z[C]
    _, piv_rows = W.T.rref()
    WP = W.extract(list(piv_rows), list(range(W.cols)))
    det = int(WP.det())
    adj = np.array(WP.adjugate().tolist(), dtype=np.int64)
    Wn = np.array(W.tolist(), dtype=np.int64)
    rows = list(piv_rows)

    def contains(alphas):
        V = p * np.asarray(alphas, dtype=np.int64).T
        X = adj @ V[rows]
        ok = np.all(X % det == 0, axis=0)
        X = X // det
        return ok & np.all(Wn @ X == V, axis=0)

    return contains


@pytest.mark.parametrize("p", [3, 5])
def test_membership_oracle_enumeration(p):
    J = stickelberger_ideal(p)
    alphas = list(itertools.product(range(-p, p + 1), repeat=p - 1))
    oracle = _theta_lattice_oracle(p)(alphas)
    mine = np.array([J.contains(a) for a in alphas])
    assert (oracle == mine).all()
    # J = Z[C] at p = 3; a proper sublattice from p = 5 on
    assert mine.all() == (p == 3)


@pytest.mark.parametrize("p", primes_between(3, 47))
def test_epsilon_formula(p):
    assert stickelberger_ideal(p).epsilon_gen == (p - 1) // 2
