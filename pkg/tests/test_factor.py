from __future__ import annotations

import math
import random

import sympy

from dgqs.factor import factorize, is_prime


def test_is_prime_matches_sympy():
    for n in range(-5, 5000):
        assert is_prime(n) == sympy.isprime(n)
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randrange(1, 10**30)
        assert is_prime(n) == sympy.isprime(n)
    assert is_prime(2**127 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_factorize_reconstructs():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randrange(2, 10**18)
        fac = factorize(n)
        assert fac.complete
        assert math.prod(p**e for p, e in fac.factors.items()) == n
        assert all(is_prime(p) for p in fac.factors)


def test_factorize_large_semiprime_and_budget():
    p, q = sympy.nextprime(10**12), sympy.nextprime(3 * 10**12)
    fac = factorize(p * q)
    assert fac.factors == {p: 1, q: 1}
    starved = factorize(p * q, budget=0)
    assert not starved.complete and starved.residual == p * q


def test_repeated_large_factor_detected():
    p = sympy.nextprime(10**9)
    fac = factorize(p * p * 3)
    assert fac.factors == {3: 1, p: 2} and fac.has_repeated_factor()


def test_units_and_sign():
    assert factorize(1).factors == {} and factorize(-1).factors == {}
    assert factorize(-12).factors == {2: 2, 3: 1}
