"""Exact integer helpers: gcd, factorization, totient, binomials, falling factorials.

Everything runs on Python's built-in arbitrary-precision integers, so no
overflow or rounding can occur.  Counts produced downstream grow like
l * n**(k-1) and exceed 64 bits quickly, which is why all counting APIs in
this package stick to plain ints.
"""

import math


def gcd_many(values) -> int:
    """Greatest common divisor of one or more integers, ignoring signs.

    gcd of an all-zero list is 0, matching the convention gcd(0, n) = n.
    """
    values = list(values)
    if not values:
        raise ValueError("gcd_many needs at least one value")
    return math.gcd(*values)


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (desk-scale n only)."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, primes increasing.

    Trial division; n = 1 gives the empty list.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    pairs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return pairs


def euler_phi(n: int) -> int:
    """Euler's totient phi(n), computed exactly from the factorization."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    phi = 1
    for p, e in factorize(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def falling_factorial(n: int, k: int) -> int:
    """The product (n-1)(n-2)...(n-k+1); the empty product (k = 1) is 1.

    Factors <= 0 are not rejected: the signed product is returned as-is and
    the caller interprets it.
    """
    if k < 1:
        raise ValueError(f"falling_factorial requires k >= 1, got {k}")
    out = 1
    for j in range(1, k):
        out *= n - j
    return out


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 when k > n, error on negative input."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial requires non-negative arguments, got ({n}, {k})")
    return math.comb(n, k)
