"""Cohomology of generalized flag manifolds ``G/H`` with ``rk G = rk H``.

The Poincare polynomial is computed two independent ways:

* from the exponents of ``G`` and ``H`` as the exact quotient
  ``prod(1 - t^(g_i + 1)) / prod(1 - t^(l_i + 1))`` (Borel);
* from the Bruhat cells, ``sum over W^P of t^(2 l(w))``.

The Euler number is computed three ways: the integer quotient of
``prod(g_i + 1)`` by ``prod(l_i + 1)``, the Weyl group index, and the value
of the Poincare polynomial at ``t = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from flaghodge.errors import NonExactDivision, NonIntegerEuler, OracleMismatch, RankMismatch
from flaghodge.polyring import IntPolynomial, eval_at_one, one_minus_t_power, poly_exact_div, poly_mul
from flaghodge.rootsys import (
    ExponentSet,
    LeviSpec,
    RootSystem,
    coset_length_counts,
    exponents,
    levi_decompose,
    levi_exponents,
    weyl_order,
)

__all__ = [
    "FlagCohomology",
    "compute_flag_cohomology",
    "euler_number",
    "euler_weyl",
    "poincare_borel",
    "poincare_coset",
]


@dataclass(frozen=True)
class FlagCohomology:
    poincare: IntPolynomial
    betti: tuple[int, ...]
    euler: int
    complex_dimension: int
    group: str = ""
    levi: str = ""

    def check_invariants(self) -> None:
        b = self.betti
        if len(b) != 2 * self.complex_dimension + 1:
            raise OracleMismatch("betti vector length does not match complex dimension")
        if b[0] != 1:
            raise OracleMismatch("b^0 != 1")
        if any(x < 0 for x in b):
            raise OracleMismatch("negative Betti number")
        if any(b[1::2]):
            raise OracleMismatch("nonzero odd Betti number")
        if b != b[::-1]:
            raise OracleMismatch("Betti vector is not palindromic")
        if sum(b) != self.euler or eval_at_one(self.poincare) != self.euler:
            raise OracleMismatch("Euler number disagrees with total Betti number")


def _as_degrees(e) -> list[int]:
    if isinstance(e, ExponentSet):
        return sorted(e.degrees)
    return sorted(int(g) for g in e)


def poincare_borel(g_exponents, l_exponents) -> IntPolynomial:
    """``P_t(G/H)`` from the topological degrees of ``G`` and ``H``.

    Accepts :class:`ExponentSet` objects or plain lists of odd degrees.
    Factors are paired after sorting both lists; a denominator that does not
    divide the running product is deferred and divided out at the end.
    """
    gs, ls = _as_degrees(g_exponents), _as_degrees(l_exponents)
    if len(gs) != len(ls):
        raise RankMismatch(f"rank of G is {len(gs)} but rank of H is {len(ls)}")
    acc = IntPolynomial.one()
    deferred = IntPolynomial.one()
    for g, l in zip(gs, ls):
        acc = poly_mul(acc, one_minus_t_power(g + 1))
        den = one_minus_t_power(l + 1)
        try:
            acc = poly_exact_div(acc, den)
        except NonExactDivision:
            deferred = poly_mul(deferred, den)
    try:
        return poly_exact_div(acc, deferred)
    except NonExactDivision:
        pass
    num = IntPolynomial.one()
    den = IntPolynomial.one()
    for g, l in zip(gs, ls):
        num = poly_mul(num, one_minus_t_power(g + 1))
        den = poly_mul(den, one_minus_t_power(l + 1))
    return poly_exact_div(num, den)


def poincare_coset(root_system: RootSystem, levi_spec: LeviSpec, **kw) -> IntPolynomial:
    """``sum_{w in W^P} t^(2 l(w))`` over minimal coset representatives."""
    counts = coset_length_counts(root_system, levi_spec, **kw)
    coeffs = [0] * (2 * len(counts) - 1)
    coeffs[::2] = counts
    return IntPolynomial(coeffs)


def euler_number(g_exponents, l_exponents) -> int:
    gs, ls = _as_degrees(g_exponents), _as_degrees(l_exponents)
    if len(gs) != len(ls):
        raise RankMismatch(f"rank of G is {len(gs)} but rank of H is {len(ls)}")
    num = prod(g + 1 for g in gs)
    den = prod(l + 1 for l in ls)
    q, r = divmod(num, den)
    if r:
        raise NonIntegerEuler(f"{num}/{den} is not an integer")
    return q


def euler_weyl(root_system: RootSystem, levi_spec: LeviSpec) -> int:
    """Index ``|W(G)| / |W(H)|``, the number of torus fixed points on ``G/H``."""
    sub = levi_decompose(root_system, levi_spec).weyl_order()
    q, r = divmod(weyl_order(root_system), sub)
    if r:
        raise OracleMismatch("Levi Weyl group order does not divide |W|")
    return q


def compute_flag_cohomology(root_system: RootSystem, levi_spec: LeviSpec, **kw) -> FlagCohomology:
    """Full cohomology record for ``G/H``, cross-checked across all routes."""
    levi = levi_decompose(root_system, levi_spec)
    g_exp = exponents(root_system)
    l_exp = levi_exponents(levi)
    borel = poincare_borel(g_exp, l_exp)
    coset = poincare_coset(root_system, levi_spec, **kw)
    if borel != coset:
        raise OracleMismatch(f"Borel formula gives {borel}, Bruhat cells give {coset}")
    dim = len(root_system.positive_roots) - levi.positive_root_count()
    if borel.degree != 2 * dim:
        raise OracleMismatch(f"degree {borel.degree} != 2 * complex dimension {dim}")
    chi = euler_number(g_exp, l_exp)
    routes = {chi, euler_weyl(root_system, levi_spec), eval_at_one(borel)}
    if len(routes) != 1:
        raise OracleMismatch(f"Euler number routes disagree: {sorted(routes)}")
    betti = tuple(borel[k] for k in range(2 * dim + 1))
    flag = FlagCohomology(borel, betti, chi, dim, root_system.label, levi.label)
    flag.check_invariants()
    return flag
