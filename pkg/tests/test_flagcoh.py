from itertools import combinations
from math import comb

import pytest

from flaghodge.errors import NonExactDivision, NonIntegerEuler, RankMismatch
from flaghodge.flagcoh import (
    compute_flag_cohomology,
    euler_number,
    euler_weyl,
    poincare_borel,
    poincare_coset,
)
from flaghodge.polyring import IntPolynomial as P
from flaghodge.rootsys import LeviSpec, build_root_system, exponents, levi_decompose, levi_exponents

import oracles

E7 = build_root_system("E", 7)
E6_NODES = LeviSpec((1, 2, 3, 4, 5, 6))
GR24 = P((1, 0, 1, 0, 2, 0, 1, 0, 1))


def grassmannian(n, p):
    rs = build_root_system("A", n - 1)
    return rs, LeviSpec(tuple(k for k in rs.nodes() if k != p))


def test_borel_examples():
    assert poincare_borel([3], [1]) == P((1, 0, 1))
    assert poincare_borel([3, 5, 7], [3, 5, 7]) == P((1,))
    assert poincare_borel([3, 5, 7], [1, 3, 3]) == GR24


@pytest.mark.parametrize("n", range(2, 9))
def test_borel_grassmannian_matches_q_binomial(n):
    for p in range(1, n):
        rs, levi = grassmannian(n, p)
        got = poincare_borel(exponents(rs), levi_exponents(levi_decompose(rs, levi)))
        assert got == oracles.grassmannian_poincare(n, p)


def test_borel_errors():
    with pytest.raises(RankMismatch):
        poincare_borel([3, 5], [1])
    with pytest.raises(NonExactDivision):
        poincare_borel([3], [3 + 2])
    with pytest.raises(RankMismatch):
        euler_number([3], [1, 1])
    with pytest.raises(NonIntegerEuler):
        euler_number([3], [5])


def test_coset_examples():
    assert poincare_coset(build_root_system("A", 1), LeviSpec()) == P((1, 0, 1))
    assert poincare_coset(build_root_system("A", 3), LeviSpec((1, 3))) == GR24
    assert sum(poincare_coset(E7, E6_NODES).coefficients) == 56


def test_euler_examples():
    for n in range(2, 9):
        for p in range(1, n):
            rs, levi = grassmannian(n, p)
            assert euler_number(exponents(rs), levi_exponents(levi_decompose(rs, levi))) == comb(n, p)
    assert euler_number(exponents(E7), levi_exponents(levi_decompose(E7, E6_NODES))) == 56
    assert euler_number([3, 7], [3, 7]) == 1
    assert euler_weyl(build_root_system("A", 3), LeviSpec((1, 3))) == 6
    assert euler_weyl(E7, E6_NODES) == 2903040 // 51840 == 56
    f4 = build_root_system("F", 4)
    assert euler_weyl(f4, LeviSpec.full(f4)) == 1


def test_compute_examples():
    cp1 = compute_flag_cohomology(build_root_system("A", 1), LeviSpec())
    assert (cp1.poincare, cp1.betti, cp1.euler, cp1.complex_dimension) == (P((1, 0, 1)), (1, 0, 1), 2, 1)
    gr = compute_flag_cohomology(build_root_system("A", 3), LeviSpec((1, 3)))
    assert gr.betti == (1, 0, 1, 0, 2, 0, 1, 0, 1) and gr.euler == 6 and gr.complex_dimension == 4
    e7 = compute_flag_cohomology(E7, E6_NODES)
    assert e7.euler == 56 and e7.complex_dimension == 27 == 63 - 36


@pytest.mark.parametrize("t,r", [("B", 4), ("C", 4), ("D", 5), ("F", 4), ("G", 2)])
def test_polynomial_shape(t, r):
    rs = build_root_system(t, r)
    for k in range(r + 1):
        for nodes in combinations(rs.nodes(), k):
            flag = compute_flag_cohomology(rs, LeviSpec(nodes))
            poly = flag.poincare
            assert poly[0] == 1
            assert all(c >= 0 for c in poly)
            assert poly.is_palindromic() and poly.even_part_only()
            assert poly.degree == 2 * flag.complex_dimension


def test_full_levi_gives_a_point():
    rs = build_root_system("E", 6)
    flag = compute_flag_cohomology(rs, LeviSpec.full(rs))
    assert flag.poincare == P((1,)) and flag.euler == 1 and flag.complex_dimension == 0


def test_borel_accepts_unsorted_degree_lists():
    g = [35, 3, 27, 11, 23, 19, 15]
    l = [23, 1, 17, 3, 15, 9, 11]
    assert poincare_borel(g, l) == poincare_borel(sorted(g), sorted(l))
