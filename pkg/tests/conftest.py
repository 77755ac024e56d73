"""Shared fixtures and independent brute-force oracles.

Oracles here never call the code path they are checking: primality comes from
trial division, pair counts from literal pair enumeration, smoothness from
per-integer factoring.
"""

from __future__ import annotations

import math

import numpy as np
import pytest


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def trial_division_primes(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1) if trial_division_is_prime(n)]


def brute_gpf(n: int) -> int:
    """Greatest prime factor by naive trial division; P+(1) = 1."""
    big, m, p = 1, n, 2
    while p * p <= m:
        while m % p == 0:
            big, m = p, m // p
        p += 1
    return max(big, m) if m > 1 else big


def brute_omega_star(n: int, prime_flags: np.ndarray | None = None) -> int:
    """Divisor scan up to sqrt(n) plus trial-division primality of d + 1."""
    count = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            for piece in {d, n // d}:
                if (
                    prime_flags[piece + 1]
                    if prime_flags is not None
                    else trial_division_is_prime(piece + 1)
                ):
                    count += 1
        d += 1
    return count


def brute_pair_count_A(x: int, k: int, primes: list[int]) -> int:
    """Literal enumeration of pairs (m, p), m, p <= x, with k | m(p-1)."""
    ms = np.arange(1, x + 1, dtype=np.int64)
    total = 0
    for p in primes:
        if p > x:
            break
        total += int(np.count_nonzero(ms * (p - 1) % k == 0))
    return total


def brute_pair_count_A_d(x: int, y: int, k: int, d: int, primes: list[int]) -> int:
    """Literal enumeration of pairs for the per-d condition."""
    count = 0
    for p in primes:
        if p > x:
            break
        if (p - 1) % d != 0:
            continue
        for m in range(1, y + 1):
            if math.gcd(m, k) == k // d:
                count += 1
    return count


@pytest.fixture(scope="session")
def oracle_primes_2000() -> list[int]:
    return trial_division_primes(2000)


@pytest.fixture(scope="session")
def oracle_prime_flags_1e4() -> np.ndarray:
    """Trial-division prime flags for 0..10002 (covers d + 1 lookups at 1e4)."""
    limit = 10**4 + 2
    flags = np.zeros(limit + 1, dtype=bool)
    for n in range(2, limit + 1):
        flags[n] = trial_division_is_prime(n)
    return flags


@pytest.fixture(scope="session")
def gpf_oracle_1e5() -> np.ndarray:
    limit = 10**5
    out = np.zeros(limit + 1, dtype=np.int64)
    out[1] = 1
    for n in range(2, limit + 1):
        out[n] = brute_gpf(n)
    return out
