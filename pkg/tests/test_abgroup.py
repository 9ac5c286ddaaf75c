import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from swanbounds.abgroup import (
    AbGroup,
    canonical_chain,
    exponent,
    hermite_normal_form,
    is_trivial,
    iso_eq,
    order,
    power_subgroup,
    quotient,
    smith_normal_form,
    subgroup_order,
    torsion_subgroup,
)
from swanbounds.errors import DimensionMismatch

import groupcheck as gc


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def check_snf(M):
    D, U, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(sympy.Matrix(U).det()) == 1
    assert abs(sympy.Matrix(V).det()) == 1
    m, n = len(M), len(M[0])
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert diag[: len(nz)] == nz  # zeros last
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    return diag


def test_snf_examples():
    assert check_snf([[1, 0], [0, 1]]) == [1, 1]
    assert check_snf([[4, 0], [0, 6]]) == [2, 12]
    assert check_snf([[2, 4], [4, 8]]) == [2, 0]


def test_snf_matches_sympy():
    rng = random.Random(7)
    from sympy.matrices.normalforms import invariant_factors

    for _ in range(60):
        M = gc.random_matrix(rng)
        diag = [x for x in check_snf(M) if x]
        ref = [abs(int(x)) for x in invariant_factors(sympy.Matrix(M)) if x]
        assert diag == ref


def test_snf_big_entries():
    big = 2**127 - 1
    M = [[big, 2 * big + 3, 5], [7 * big, -big, big * big], [1, 2**200, -3]]
    check_snf(M)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-50, 50), min_size=3, max_size=3), min_size=1, max_size=5))
def test_snf_property(M):
    check_snf(M)


def test_hnf_unique_and_spans():
    rng = random.Random(3)
    for _ in range(40):
        M = gc.random_matrix(rng)
        H, T = hermite_normal_form(M, with_transform=True)
        if H:
            assert matmul(T, M) == H
        # same lattice: HNF of a shuffled, recombined generating set is identical
        N = [row[:] for row in M] + [[a + b for a, b in zip(M[0], M[-1])]]
        rng.shuffle(N)
        assert hermite_normal_form(N) == H
        for r, row in enumerate(H):
            c = next(i for i, x in enumerate(row) if x)
            assert row[c] > 0
            assert all(0 <= H[i][c] < row[c] for i in range(r))
            assert all(H[i][c] == 0 for i in range(r + 1, len(H)))
        ref = sympy.Matrix(M).rank()
        assert len(H) == ref


def test_canonical_chain():
    assert canonical_chain([4, 5]) == (20,)
    assert canonical_chain([4, 6]) == (2, 12)
    assert canonical_chain([1, 1]) == ()
    assert canonical_chain([2, 2, 3]) == (2, 6)
    assert iso_eq(AbGroup.from_orders([4, 5]), AbGroup((20,)))
    with pytest.raises(ValueError):
        AbGroup((4, 5))


def test_quotient_examples():
    assert quotient([4, 4], [(1, 1)]) == AbGroup((4,))
    G = AbGroup((2, 6))
    assert quotient(G, []) == G
    assert quotient([24], [(12,)]) == AbGroup((12,))
    with pytest.raises(DimensionMismatch):
        quotient([4, 4], [(1,)])


def test_power_torsion_examples():
    assert power_subgroup(AbGroup((12,)), 4) == AbGroup((3,))
    assert power_subgroup(AbGroup((12,)), 8) == AbGroup((3,))
    G = AbGroup((2, 6))
    assert power_subgroup(G, 1) == G
    assert torsion_subgroup(AbGroup((12,)), 4) == AbGroup((4,))
    assert is_trivial(torsion_subgroup(G, 1))
    assert torsion_subgroup(AbGroup((2, 2)), 2) == AbGroup((2, 2))
    assert exponent(AbGroup((2, 6))) == 6
    assert order(AbGroup()) == 1 and exponent(AbGroup()) == 1
    # x -> x^8 on Z/12 hits {0, 4, 8}
    assert len({8 * x % 12 for x in range(12)}) == 3


def test_quotient_by_everything_is_trivial():
    rng = random.Random(11)
    for _ in range(50):
        orders = gc.random_orders(rng)
        gens = [tuple(int(i == j) for j in range(len(orders))) for i in range(len(orders))]
        assert quotient(orders, gens).is_trivial()


@pytest.mark.parametrize("seed", range(5))
def test_quotient_against_brute_force(seed):
    rng = random.Random(seed)
    for _ in range(20):
        orders = gc.random_orders(rng)
        gens = gc.random_gens(rng, orders)
        Q = quotient(orders, gens)
        assert Q.order == gc.coset_count(orders, gens)
        assert Q.invariant_factors == gc.brute_quotient_chain(orders, gens)
        assert subgroup_order(orders, gens) * Q.order == len(gc.elements(orders))


@pytest.mark.parametrize("seed", range(5))
def test_power_is_quotient_by_torsion(seed):
    rng = random.Random(100 + seed)
    for _ in range(20):
        G = AbGroup.from_orders(gc.random_orders(rng))
        k = rng.randint(1, 40)
        orders = G.invariant_factors
        elems = gc.elements(orders)
        tors = [x for x in elems if not any(gc.scale(x, k, orders))]
        powers = {gc.scale(x, k, orders) for x in elems}
        H = power_subgroup(G, k)
        assert H == quotient(G, tors)
        assert H.invariant_factors == gc.brute_subset_chain(powers, orders)
        assert torsion_subgroup(G, k).invariant_factors == gc.brute_subset_chain(tors, orders)
        assert H.order * torsion_subgroup(G, k).order == G.order
