"""Integer factorization with an effort budget.

Trial division by primes below 10**6, then Brent's variant of Pollard rho.
Primality: deterministic Miller-Rabin below 3.3e24, strong BPSW above.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import gmpy2

TRIAL_LIMIT = 10**6
DEFAULT_BUDGET = 10**7
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * TRIAL_LIMIT
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(TRIAL_LIMIT - 1) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, TRIAL_LIMIT, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_DETERMINISTIC_BOUND:
        return bool(gmpy2.is_strong_bpsw_prp(n))
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, c: int, budget: int) -> tuple[int | None, int]:
    """One rho run; returns (factor or None, iterations spent)."""
    y, r, q, m = 2, 1, 1, 128
    g = 1
    spent = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        spent += r
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            spent += min(m, r - k)
            g = math.gcd(q, n)
            k += m
        r *= 2
        if spent > budget:
            return None, spent
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            spent += 1
    return (g if g != n else None), spent


@dataclass
class Factorization:
    factors: dict[int, int] = field(default_factory=dict)
    residual: int = 1
    complete: bool = True

    def sorted_factors(self) -> list[tuple[int, int]]:
        return sorted(self.factors.items())

    def has_repeated_factor(self) -> bool:
        return any(e > 1 for e in self.factors.values())


def factorize(n: int, budget: int = DEFAULT_BUDGET) -> Factorization:
    """Factor ``|n|``; unfactored composite cofactors end up in ``residual``."""
    n = abs(n)
    out = Factorization()
    if n < 2:
        return out

    def add(p: int, e: int = 1) -> None:
        out.factors[p] = out.factors.get(p, 0) + e

    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            add(p, e)
    if n == 1:
        return out
    stack = [n]
    remaining = budget
    leftovers: list[int] = []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            add(m)
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack += [root, root]
            continue
        found = None
        c = 1
        while found is None and remaining > 0:
            found, spent = _brent(m, c, remaining)
            remaining -= spent
            c += 1
        if found is None:
            leftovers.append(m)
        else:
            stack += [found, m // found]
    if leftovers:
        out.complete = False
        out.residual = math.prod(leftovers)
    return out
