"""Exact integer substrate: binomials, a segmented prime sieve, factorization
and the classical arithmetic functions.

Python ints are already unbounded, so BigInt is simply ``int`` and
BigRational is :class:`fractions.Fraction` throughout the package.
"""
from __future__ import annotations

import bisect
import math
import os
import threading
from fractions import Fraction

import numpy as np

from .errors import CapacityExceeded

BigInt = int
BigRational = Fraction

DEFAULT_SIEVE_LIMIT = 10**8
_SEGMENT = 1 << 22


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _simple_sieve(limit: int) -> np.ndarray:
    """Primes <= limit as an int64 array (dense Eratosthenes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


class PrimeSieve:
    """Segmented sieve of Eratosthenes over [2, limit].

    Only per-segment prime counts are kept permanently; the primes of a
    segment are re-sieved on demand (with a small cache), so memory stays
    O(limit / segment) even for limits of a few times 10**8.
    """

    def __init__(self, limit: int | None = None, segment: int = _SEGMENT):
        if limit is None:
            limit = int(os.environ.get("SEQLAB_SIEVE_LIMIT", DEFAULT_SIEVE_LIMIT))
        if limit < 2:
            raise ValueError("sieve limit must be at least 2")
        self.limit = limit
        self.segment = segment
        self._base = _simple_sieve(math.isqrt(limit) + 1)
        # _cum[k] = number of primes below k * segment
        self._cum = [0]
        self._cache: dict[int, np.ndarray] = {}
        self._lock = threading.Lock()

    @property
    def num_segments(self) -> int:
        return self.limit // self.segment + 1

    def _sieve_segment(self, k: int) -> np.ndarray:
        lo = k * self.segment
        hi = min(lo + self.segment, self.limit + 1)
        flags = np.ones(hi - lo, dtype=bool)
        if lo == 0:
            flags[: min(2, hi)] = False
        for p in self._base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, -(-lo // p) * p)
            flags[start - lo :: p] = False
        return np.flatnonzero(flags).astype(np.int64) + lo

    def segment_primes(self, k: int) -> np.ndarray:
        with self._lock:
            primes = self._cache.get(k)
            if primes is None:
                primes = self._sieve_segment(k)
                if len(self._cache) >= 8:
                    self._cache.pop(next(iter(self._cache)))
                self._cache[k] = primes
            return primes

    def _extend_counts(self, upto_segment: int) -> None:
        while len(self._cum) <= upto_segment and len(self._cum) <= self.num_segments:
            k = len(self._cum) - 1
            self._cum.append(self._cum[-1] + len(self.segment_primes(k)))

    def _check(self, x: int) -> None:
        if x > self.limit:
            raise CapacityExceeded(f"{x} is beyond the sieve limit {self.limit}")

    def is_prime(self, p: int) -> bool:
        if p < 2:
            return False
        self._check(p)
        primes = self.segment_primes(p // self.segment)
        i = np.searchsorted(primes, p)
        return bool(i < len(primes) and primes[i] == p)

    def prime_count(self, x: int) -> int:
        if x < 0:
            raise ValueError("prime_count requires x >= 0")
        self._check(x)
        k = x // self.segment
        self._extend_counts(k)
        primes = self.segment_primes(k)
        return self._cum[k] + int(np.searchsorted(primes, x, side="right"))

    def nth_prime(self, n: int) -> int:
        if n < 1:
            raise ValueError("nth_prime requires n >= 1")
        while self._cum[-1] < n:
            if len(self._cum) > self.num_segments:
                raise CapacityExceeded(
                    f"the {n}-th prime is beyond the sieve limit {self.limit}"
                )
            self._extend_counts(len(self._cum))
        k = bisect.bisect_left(self._cum, n) - 1
        return int(self.segment_primes(k)[n - self._cum[k] - 1])

    def primes_upto(self, x: int) -> np.ndarray:
        self._check(x)
        parts = [self.segment_primes(k) for k in range(x // self.segment + 1)]
        primes = np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)
        return primes[primes <= x]

    def first_primes(self, count: int) -> np.ndarray:
        if count <= 0:
            return np.zeros(0, dtype=np.int64)
        return self.primes_upto(self.nth_prime(count))


_shared: dict[int | None, PrimeSieve] = {}
_shared_lock = threading.Lock()


def get_sieve(limit: int | None = None) -> PrimeSieve:
    """Process-wide sieve for ``limit`` (default from SEQLAB_SIEVE_LIMIT)."""
    with _shared_lock:
        sieve = _shared.get(limit)
        if sieve is None:
            sieve = _shared[limit] = PrimeSieve(limit)
        return sieve


def nth_prime(n: int, sieve: PrimeSieve | None = None) -> int:
    return (sieve or get_sieve()).nth_prime(n)


def prime_count(x: int, sieve: PrimeSieve | None = None) -> int:
    return (sieve or get_sieve()).prime_count(x)


# --- factorization ---------------------------------------------------------

_SMALL_PRIMES = [int(p) for p in _simple_sieve(1 << 12)]
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with the first twelve prime bases; deterministic for n < 2**64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
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


def _brent(n: int) -> int:
    # fixed polynomial constants keep the result reproducible run to run
    for c in range(1, 200):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"no factor found for {n}")


def factorize(n: int) -> list[tuple[int, int]]:
    """Sorted prime factorization of 1 <= n < 2**64; ``[]`` for n = 1."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    if n >= 1 << 64:
        raise ValueError("factorize only supports n < 2**64")
    factors: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
        else:
            d = _brent(m)
            stack += [d, m // d]
    return sorted(factors.items())


def arith_functions(n: int) -> tuple[int, int, int, int]:
    """(sigma(n), d(n), phi(n), sigma_3(n))."""
    sigma = d = phi = sigma3 = 1
    for p, e in factorize(n):
        sigma *= (p ** (e + 1) - 1) // (p - 1)
        d *= e + 1
        phi *= (p - 1) * p ** (e - 1)
        sigma3 *= (p ** (3 * (e + 1)) - 1) // (p**3 - 1)
    return sigma, d, phi, sigma3


def arith_tables(limit: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """sigma, d and phi for 0..limit as int64 arrays (index 0 unused)."""
    sigma = np.zeros(limit + 1, dtype=np.int64)
    divisors = np.zeros(limit + 1, dtype=np.int64)
    # divisor k of m = k j: small k by strided slices, large k by cofactor j
    root = math.isqrt(limit)
    for k in range(1, root + 1):
        sigma[k::k] += k
        divisors[k::k] += 1
    for j in range(1, limit // (root + 1) + 1):
        ks = np.arange(root + 1, limit // j + 1, dtype=np.int64)
        sigma[ks * j] += ks
        divisors[ks * j] += 1
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in _simple_sieve(limit):
        phi[p::p] -= phi[p::p] // p
    return sigma, divisors, phi


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)
