"""Small integer-arithmetic helpers used throughout the package."""

from __future__ import annotations

import math
from fractions import Fraction


def is_prime(n: int) -> bool:
    """Deterministic trial division; inputs here are desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_upto(n: int) -> list[int]:
    """All primes <= n by sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, b in enumerate(sieve) if b]


def is_squarefree(n: int) -> bool:
    if n <= 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        while n % p == 0:
            n //= p
        p += 1 if p == 2 else 2
    return True


def legendre_symbol(a: int, p: int) -> int:
    """(a|p) in {-1, 0, 1} for an odd prime p, by Euler's criterion."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p = {p} must be an odd prime")
    ls = pow(a % p, (p - 1) // 2, p)
    return -1 if ls == p - 1 else ls


def two_adic_valuation(x: int | Fraction) -> int:
    """v_2 of a nonzero rational."""
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    if isinstance(x, Fraction):
        return two_adic_valuation(x.numerator) - two_adic_valuation(x.denominator)
    v = 0
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


def strip_factor(n: int, p: int) -> int:
    """Remove every factor of p from |n|."""
    n = abs(n)
    while n and n % p == 0:
        n //= p
    return n
