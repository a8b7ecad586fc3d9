import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqlab.bignum import (
    PrimeSieve,
    arith_functions,
    arith_tables,
    binomial,
    divisors,
    factorize,
    get_sieve,
    is_probable_prime,
    nth_prime,
    prime_count,
)
from seqlab.errors import CapacityExceeded


def test_binomial_examples(frozen):
    assert binomial(4, 2) == 6
    assert binomial(24, 5) == frozen["binomial_24_5"] == 42504
    assert all(binomial(n, 0) == 1 for n in range(50))
    assert binomial(5, -1) == 0 and binomial(5, 6) == 0


def test_pascal_rows_match_oracle(frozen):
    for n, row in enumerate(frozen["pascal_rows_60"]):
        assert [binomial(n, k) for k in range(n + 1)] == row


def test_pascal_recurrence():
    for n in range(1, 61):
        for k in range(-1, n + 2):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_nth_prime_examples():
    assert nth_prime(1) == 2
    assert nth_prime(5381) == 52711
    assert nth_prime(648391) == 9737333


def test_prime_count_examples(frozen):
    assert prime_count(10) == 4
    assert prime_count(2) == 1
    assert prime_count(0) == 0
    assert prime_count(10**6) == frozen["prime_count_1e6"] == 78498


def test_nth_prime_and_prime_count_are_inverse():
    sieve = get_sieve()
    for n in range(1, 10**5 + 1, 97):
        assert sieve.prime_count(sieve.nth_prime(n)) == n
    assert sieve.prime_count(sieve.nth_prime(10**5)) == 10**5


def test_sieve_capacity_is_enforced():
    small = PrimeSieve(100)
    assert small.nth_prime(25) == 97
    with pytest.raises(CapacityExceeded):
        small.nth_prime(26)
    with pytest.raises(CapacityExceeded):
        small.prime_count(101)


def test_segmented_sieve_agrees_across_segment_sizes():
    a = PrimeSieve(200_000, segment=1 << 10)
    b = PrimeSieve(200_000)
    assert list(a.primes_upto(200_000)) == list(b.primes_upto(200_000))
    assert a.nth_prime(17984) == b.nth_prime(17984)


def test_sieve_limit_from_environment(monkeypatch):
    monkeypatch.setenv("SEQLAB_SIEVE_LIMIT", "1000")
    assert PrimeSieve().limit == 1000


def test_arith_functions_examples(frozen):
    assert arith_functions(1) == (1, 1, 1, 1)
    assert list(arith_functions(6)) == frozen["arith_6"] == [12, 4, 2, 252]
    sigma, d, phi, _ = arith_functions(4)
    assert sigma - d - phi == 2
    for n, row in enumerate(frozen["arith_1_to_60"], start=1):
        assert list(arith_functions(n)) == row


def test_arith_functions_multiplicative():
    rng = random.Random(5)
    checked = 0
    while checked < 10**4:
        m, n = rng.randint(1, 3000), rng.randint(1, 3000)
        if math.gcd(m, n) != 1:
            continue
        a, b, c = arith_functions(m), arith_functions(n), arith_functions(m * n)
        assert c == tuple(x * y for x, y in zip(a, b))
        checked += 1


def test_arith_tables_match_pointwise():
    sigma, d, phi = arith_tables(3000)
    for n in range(1, 3001):
        s, dd, p, _ = arith_functions(n)
        assert (int(sigma[n]), int(d[n]), int(phi[n])) == (s, dd, p)


def test_factorize_examples(frozen):
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    assert frozen["is_prime_9737333"]
    assert factorize(9737333) == [(9737333, 1)]


def test_factorize_reconstructs_every_n_up_to_1e5():
    for n in range(1, 10**5 + 1):
        f = factorize(n)
        assert math.prod(p**e for p, e in f) == n
        assert [p for p, _ in f] == sorted(p for p, _ in f)


def test_factorize_rejects_large_input():
    with pytest.raises(ValueError):
        factorize(1 << 64)
    with pytest.raises(ValueError):
        factorize(0)


@given(st.integers(min_value=2, max_value=2**62))
@settings(max_examples=200, deadline=None)
def test_factorize_property(n):
    f = factorize(n)
    assert math.prod(p**e for p, e in f) == n
    assert all(is_probable_prime(p) for p, _ in f)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


def test_fraction_is_the_rational_type():
    # rationals are Python Fractions: always reduced, denominator positive
    x = Fraction(6, -4)
    assert (x.numerator, x.denominator) == (-3, 2)
