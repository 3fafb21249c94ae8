"""Exact integer arithmetic on positive 64-bit integers.

Factorization uses a smallest-prime-factor table up to ``SIEVE_LIMIT`` and
trial division beyond it.  Trial division of ``n`` never looks past
``isqrt(n)``, so the worst case is a semiprime with two factors near
``2**31``; that costs ~10**9 divisions and is accepted at desk scale.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from . import kernels

INT64_MAX = 2**63 - 1
SIEVE_LIMIT = 10**6

# Deterministic for every n < 3.3e24, which covers the whole 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def check_pos(n, name="n"):
    """Validate a PosInt and return it as a plain ``int``."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {type(n).__name__}")
    n = int(n)
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")
    if n > INT64_MAX:
        raise OverflowError(f"{name}={n} exceeds the 64-bit range")
    return n


def checked_mul(a: int, b: int) -> int:
    r = a * b
    if r > INT64_MAX:
        raise OverflowError(f"{a} * {b} exceeds the 64-bit range")
    return r


def checked_lcm(a: int, b: int) -> int:
    r = a // math.gcd(a, b) * b
    if r > INT64_MAX:
        raise OverflowError(f"lcm({a}, {b}) exceeds the 64-bit range")
    return r


def checked_prod(values) -> int:
    r = 1
    for v in values:
        r = checked_mul(r, v)
    return r


@lru_cache(maxsize=1)
def _spf() -> np.ndarray:
    table = kernels.spf_sieve(SIEVE_LIMIT)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=1)
def _small_primes() -> np.ndarray:
    spf = _spf()
    idx = np.arange(spf.shape[0])
    primes = idx[(spf == idx) & (idx >= 2)]
    primes.setflags(write=False)
    return primes


def spf_table() -> np.ndarray:
    """Read-only smallest-prime-factor table for ``0..SIEVE_LIMIT``."""
    return _spf()


def gcd(a: int, b: int) -> int:
    return math.gcd(check_pos(a, "a"), check_pos(b, "b"))


def factorize(n: int) -> list[tuple[int, int]]:
    """Canonical factorization as ``[(prime, exponent), ...]``, primes ascending.

    >>> factorize(12)
    [(2, 2), (3, 1)]
    >>> factorize(1)
    []
    """
    n = check_pos(n)
    out: list[tuple[int, int]] = []

    def push(p):
        if out and out[-1][0] == p:
            out[-1] = (p, out[-1][1] + 1)
        else:
            out.append((p, 1))

    spf = _spf()
    if n > SIEVE_LIMIT:
        for p in _small_primes():
            p = int(p)
            if p * p > n:
                break
            while n % p == 0:
                push(p)
                n //= p
            if n <= SIEVE_LIMIT:
                break
        if n > SIEVE_LIMIT:
            # no factor <= SIEVE_LIMIT left; either n is prime or we keep dividing
            if not is_prime(n):
                p = SIEVE_LIMIT + 1 if SIEVE_LIMIT % 2 == 0 else SIEVE_LIMIT + 2
                while p * p <= n:
                    while n % p == 0:
                        push(p)
                        n //= p
                    p += 2
            if n > SIEVE_LIMIT:
                push(n)
                n = 1
    while n > 1:
        p = int(spf[n])
        push(p)
        n //= p
    return out


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def radical(n: int) -> int:
    """Product of the distinct primes dividing ``n``; ``radical(1) == 1``."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


def is_prime(n: int) -> bool:
    n = check_pos(n)
    if n <= SIEVE_LIMIT:
        return n >= 2 and int(_spf()[n]) == n
    for p in _MR_BASES:
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> np.ndarray:
    """All primes ``<= limit`` as an int64 array."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    if limit <= SIEVE_LIMIT:
        small = _small_primes()
        return small[: np.searchsorted(small, limit, side="right")].copy()
    spf = kernels.spf_sieve(int(limit))
    idx = np.arange(spf.shape[0])
    return idx[(spf == idx) & (idx >= 2)].astype(np.int64)


def iter_primes(start: int = 2):
    """Ascending primes ``>= start``, unbounded (segmented by doubling sieves)."""
    lo = max(2, start)
    hi = max(2 * lo, 1024)
    while True:
        for p in _primes_between(lo, hi):
            yield p
        lo, hi = hi + 1, 2 * hi


def _primes_between(lo: int, hi: int) -> list[int]:
    if hi <= SIEVE_LIMIT:
        small = _small_primes()
        a = np.searchsorted(small, lo, side="left")
        b = np.searchsorted(small, hi, side="right")
        return [int(p) for p in small[a:b]]
    seg = np.ones(hi - lo + 1, dtype=bool)
    for p in primes_up_to(math.isqrt(hi)):
        p = int(p)
        start = max(p * p, -(-lo // p) * p)
        seg[start - lo :: p] = False
    return [lo + int(i) for i in np.flatnonzero(seg) if lo + int(i) >= 2]
