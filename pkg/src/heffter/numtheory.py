"""Integer helpers: primality, factorization, prime powers."""

from __future__ import annotations

from math import gcd, isqrt

from .errors import InvalidArgument


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division, as ``{prime: exponent}``."""
    if n < 1:
        raise InvalidArgument(f"cannot factor {n}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def prime_power_decompose(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``n == p**k`` and ``p`` prime, or ``None``."""
    if n < 2:
        raise InvalidArgument(f"prime_power_decompose needs n >= 2, got {n}")
    if n % 2 == 0:
        p = 2
    else:
        p = n
        for d in range(3, isqrt(n) + 1, 2):
            if n % d == 0:
                p = d
                break
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def odd_part(k: int) -> int:
    while k % 2 == 0:
        k //= 2
    return k


def radical(k: int) -> int:
    r = 1
    for p in factorize(k):
        r *= p
    return r
