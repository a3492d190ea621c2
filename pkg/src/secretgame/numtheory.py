"""Integer utilities behind the coprime-product decoding question.

A decoding question for secret s is built from pairwise relatively prime
integers a1..an with ai > si. Distinct primes are the simplest such
choice, so the basis is picked greedily: the smallest unused prime above
each secret entry, left to right.
"""

from __future__ import annotations

from math import gcd, isqrt

from .core import Vector, validate_vector

__all__ = ["gcd", "is_prime", "next_prime_above", "coprime_basis_above"]


def is_prime(m: int) -> bool:
    """Deterministic primality test by trial division up to sqrt(m)."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    for d in range(3, isqrt(m) + 1, 2):
        if m % d == 0:
            return False
    return True


def next_prime_above(m: int, excluded=()) -> int:
    """Smallest prime p with p > m and p not in ``excluded``."""
    excluded = set(excluded)
    p = m + 1
    while not is_prime(p) or p in excluded:
        p += 1
    return p


def coprime_basis_above(secret) -> Vector:
    """Pairwise-coprime basis with each value above the matching entry.

    Greedy and deterministic: entry i gets the smallest prime exceeding
    secret[i] that earlier entries have not taken.
    """
    s = validate_vector(secret, role="secret")
    basis: list[int] = []
    for entry in s:
        basis.append(next_prime_above(entry, basis))
    return tuple(basis)
