"""Exact integer helpers: primality, factorisation, integer roots."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, by sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(limit + 1) if sieve[i]]


def prime_factors(n: int) -> dict[int, int]:
    """Factorisation {prime: exponent} by trial division."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d, step = 5, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += step
        step = 6 - step
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_split(n: int) -> tuple[int, int] | None:
    """Write n = q**f with q prime, or return None if n is not a prime power."""
    if n < 2:
        return None
    if n % 2 == 0:
        q = 2
    else:
        q = n
        d = 3
        while d * d <= n:
            if n % d == 0:
                q = d
                break
            d += 2
    f = 0
    while n % q == 0:
        n //= q
        f += 1
    return (q, f) if n == 1 else None


def integer_nth_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) computed exactly; n >= 0, k >= 1."""
    if n < 0:
        raise ValueError("integer_nth_root requires n >= 0")
    if k < 1:
        raise ValueError("integer_nth_root requires k >= 1")
    if k == 1 or n == 0:
        return n
    if k == 2:
        return math.isqrt(n)
    if k == 4:
        return math.isqrt(math.isqrt(n))
    # Integer Newton iteration from a high seed.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def ord_mod5(n: int) -> int:
    """Multiplicative order of n modulo 5 (n coprime to 5); one of 1, 2, 4."""
    r = n % 5
    if r == 0:
        raise ValueError("argument divisible by 5 has no order mod 5")
    t, acc = 1, r
    while acc != 1:
        acc = acc * r % 5
        t += 1
    return t
