from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgqs.matrix import ExactMatrix, determinant
from dgqs.poly import (
    NEG_INF,
    ONE,
    T,
    IntPolynomial,
    PolynomialError,
    divides,
    homogeneous_compose,
    poly_add,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_rem,
    resultant,
    squarefree_part,
)
from dgqs.sequences import gen_a, gen_b, gen_f


def from_roots(roots):
    p = ONE
    for r in roots:
        p = p * (T - r)
    return p


def sylvester(f, g):
    m, n = f.degree, g.degree
    size = m + n
    fc, gc = list(reversed(f.coeffs)), list(reversed(g.coeffs))
    rows = [[0] * i + fc + [0] * (size - m - 1 - i) for i in range(n)]
    rows += [[0] * i + gc + [0] * (size - n - 1 - i) for i in range(m)]
    return determinant(ExactMatrix(rows))


small_roots = st.lists(st.integers(-5, 5), min_size=1, max_size=5)
nonzero_poly = st.lists(st.integers(-9, 9), min_size=1, max_size=6).filter(lambda c: c[-1] != 0).map(IntPolynomial)


def test_normalization_and_degree():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial().degree == NEG_INF
    assert (IntPolynomial() * T).degree == NEG_INF
    assert (T * T).degree == 2


def test_arithmetic_examples():
    assert poly_mul(T - 1, T + 1) == T * T - 1
    assert poly_add(T, -T).is_zero()
    assert poly_rem(T * T - 2 * T, T).is_zero()
    b3 = IntPolynomial([0, 3, -4, 1])
    assert b3 == gen_b(3)
    assert poly_rem(b3, T - 1).is_zero()
    q, r = poly_divmod(T**3 + 1, T + 1)
    assert q == T * T - T + 1 and r.is_zero()


def test_rem_needs_monic_divisor():
    with pytest.raises(PolynomialError):
        poly_rem(T * T, 2 * T + 1)


def test_gcd_examples():
    assert poly_gcd(T * T - 1, T - 1) == T - 1
    f = IntPolynomial([6, -4, 2])
    assert poly_gcd(f, IntPolynomial()) == IntPolynomial([3, -2, 1])
    assert poly_gcd(gen_f(3), gen_b(3)) == T - 1
    with pytest.raises(PolynomialError):
        poly_gcd(IntPolynomial(), IntPolynomial())


@settings(max_examples=60, deadline=None)
@given(small_roots, small_roots, small_roots)
def test_gcd_recovers_common_factor(common, r1, r2):
    f = from_roots(common + r1)
    g = from_roots(common + r2)
    d = poly_gcd(f, g)
    assert d.lc > 0 and d.content() == 1
    assert divides(d, f) and divides(d, g)
    shared = []
    pool = list(r2 + common)
    for r in common + r1:
        if r in pool:
            pool.remove(r)
            shared.append(r)
    assert d == from_roots(shared)


def test_squarefree_examples():
    assert squarefree_part(T * (T - 2) ** 2) == T * (T - 2)
    assert squarefree_part(T * (T - 1)) == T * (T - 1)
    assert gen_f(6) == T * (T - 1) ** 2 * (T - 3) ** 2
    assert squarefree_part(gen_f(6)) == T * (T - 1) * (T - 3)
    with pytest.raises(PolynomialError):
        squarefree_part(IntPolynomial())


def test_resultant_examples():
    assert resultant(T - 1, T - 2) == -1
    assert resultant(T**3 + T + 5, IntPolynomial([7])) == 7**3
    assert resultant(gen_a(1), gen_b(2)) == -1
    with pytest.raises(PolynomialError):
        resultant(T, IntPolynomial())


@settings(max_examples=100, deadline=None)
@given(small_roots, nonzero_poly)
def test_resultant_product_and_symmetry(roots, g):
    f = from_roots(roots)
    m, n = f.degree, g.degree
    r = resultant(f, g)
    assert r == math.prod(g(x) for x in roots)
    assert r == (-1) ** (m * n) * resultant(g, f)
    if n >= 1:
        assert r == sylvester(f, g)


@settings(max_examples=60, deadline=None)
@given(nonzero_poly, nonzero_poly)
def test_resultant_matches_sylvester_for_non_monic(f, g):
    if f.degree >= 1 and g.degree >= 1:
        assert resultant(f, g) == sylvester(f, g)


def test_homogeneous_compose_examples():
    b = gen_b(3)
    assert homogeneous_compose(T, b, gen_a(2)) == b
    assert homogeneous_compose(T - 5, b, ONE) == b - 5
    with pytest.raises(PolynomialError):
        homogeneous_compose(2 * T, b, ONE)


def test_homogeneous_compose_is_product_over_roots():
    chi = from_roots([0, 1, 4])
    b, a = gen_b(3), gen_a(2)
    expected = ONE
    for lam in (0, 1, 4):
        expected = expected * (b - a * lam)
    assert homogeneous_compose(chi, b, a) == expected


def test_json_round_trip():
    p = IntPolynomial([-(10**40), 0, 3])
    assert p.to_json() == [str(-(10**40)), "0", "3"]
    assert IntPolynomial.from_json(p.to_json()) == p
