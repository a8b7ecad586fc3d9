"""Self-generating sequences: tree height sums, Hofstadter's
differences-equal-complement pair, Golomb, the primeth chain, both Recamán
sequences, Conway's $10,000 sequence and its variant, and the Prague clock."""
from __future__ import annotations

import math
from array import array
from itertools import cycle
from math import factorial

from .bignum import PrimeSieve, get_sieve
from .errors import CapacityExceeded, ConstructionError

GOLDEN = (1 + math.sqrt(5)) / 2


def tree_height_sum_W(n: int) -> int:
    """(n-1)! * sum_{k=0}^{n-2} n^k / k!, evaluated without fractions."""
    if n < 1:
        raise ValueError("n must be >= 1")
    f = factorial(n - 1)
    return sum(f // factorial(k) * n**k for k in range(n - 1))


def tree_height_sum_bruteforce(n: int) -> int:
    """Sum of node heights over every rooted labeled tree on n nodes, over n.

    Trees come from Prüfer sequences; each of the n roots is tried, so the
    total equals the sum of all ordered-pair distances in each tree.
    """
    from itertools import product

    if n == 1:
        return 0
    total = 0
    for code in product(range(n), repeat=n - 2):
        adj = _prufer_tree(code, n)
        for root in range(n):
            depth = {root: 0}
            frontier = [root]
            while frontier:
                nxt = []
                for v in frontier:
                    for w in adj[v]:
                        if w not in depth:
                            depth[w] = depth[v] + 1
                            nxt.append(w)
                frontier = nxt
            total += sum(depth.values())
    assert total % n == 0
    return total // n


def _prufer_tree(code, n):
    degree = [1] * n
    for v in code:
        degree[v] += 1
    adj = [[] for _ in range(n)]
    for v in code:
        leaf = degree.index(1)
        adj[leaf].append(v)
        adj[v].append(leaf)
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (i for i in range(n) if degree[i] == 1)
    adj[u].append(w)
    adj[w].append(u)
    return adj


def hofstadter_complement(count: int) -> tuple[list[int], list[int]]:
    """A5228 and its first differences A30124.

    Each difference is the least number exceeding the previous difference
    that is not itself a term, so terms and differences never overlap.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    seq = [1]
    members = {1}
    diffs: list[int] = []
    d = 1
    while len(seq) < count:
        d += 1
        while d in members:
            d += 1
        diffs.append(d)
        seq.append(seq[-1] + d)
        members.add(seq[-1])
    return seq, diffs


def hofstadter_differences(count: int) -> list[int]:
    seq, diffs = hofstadter_complement(count + 1)
    return diffs[:count]


def golomb(count: int) -> list[int]:
    a = [0, 1]
    for n in range(2, count + 1):
        a.append(1 + a[n - a[a[n - 1]]])
    return a[1 : count + 1]


def golomb_approximation(n: int) -> float:
    return GOLDEN ** (2 - GOLDEN) * n ** (GOLDEN - 1)


def wilson_primeth(max_terms: int, sieve: PrimeSieve | None = None, strict: bool = False) -> list[int]:
    """a_1 = 1, a_{n+1} = the a_n-th prime.

    The chain stops quietly at the sieve capacity unless ``strict`` is set,
    in which case :class:`CapacityExceeded` propagates.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    sieve = sieve or get_sieve()
    terms = [1]
    while len(terms) < max_terms:
        try:
            terms.append(sieve.nth_prime(terms[-1]))
        except CapacityExceeded:
            if strict:
                raise
            break
    return terms


def recaman_subtract_first(count: int) -> list[int]:
    """a_1 = 1; step back by n when that lands on a new positive value."""
    a = [1]
    seen = {1}
    for n in range(2, count + 1):
        prev = a[-1]
        if prev - n > 0 and prev - n not in seen:
            a.append(prev - n)
        else:
            a.append(prev + n)
        seen.add(a[-1])
    return a[:count]


def recaman_growth_report(count: int) -> dict:
    a = recaman_subtract_first(count)
    top = max(a)
    distinct = len(set(a))
    return {
        "terms": count,
        "max_term": top,
        "distinct_values": distinct,
        "coverage_density": distinct / top,
        "repeated_terms": count - distinct,
    }


def recaman_divide(count: int) -> list[int]:
    a = [1]
    n = 1
    while len(a) < count:
        prev = a[-1]
        a.append(prev // n if prev % n == 0 else prev * n)
        n += 1
    return a[:count]


def _conway_array(count: int) -> array:
    a = array("l", [0, 1, 1])
    for n in range(3, count + 1):
        x = a[n - 1]
        a.append(a[x] + a[n - x])
    return a


def conway_10000(count: int) -> list[int]:
    if count < 1:
        raise ValueError("count must be >= 1")
    return list(_conway_array(max(count, 2))[1 : count + 1])


def conway_threshold(bound: int) -> int:
    """Largest n <= bound with |a(n)/n - 1/2| > 1/20 (0 if there is none)."""
    a = _conway_array(max(bound, 2))
    last = 0
    for n in range(1, bound + 1):
        # |a/n - 1/2| > 1/20  <=>  |20a - 10n| > n
        if abs(20 * a[n] - 10 * n) > n:
            last = n
    return last


def conway_variant_A5229(count: int) -> list[int]:
    a = array("l", [0, 1, 1])
    for n in range(3, count + 1):
        x = a[n - 2]
        a.append(a[x] + a[n - x])
    return list(a[1 : count + 1])


PRAGUE_STROKES = (1, 2, 3, 4, 3, 2)


def prague_clock_groups(count_groups: int) -> list[tuple[int, ...]]:
    """Split the periodic stroke stream into groups summing to 1, 2, ..., 24, 1, ..."""
    strokes = cycle(PRAGUE_STROKES)
    groups = []
    for g in range(count_groups):
        hour = g % 24 + 1
        group, total = [], 0
        while total < hour:
            s = next(strokes)
            group.append(s)
            total += s
        if total != hour:
            raise ConstructionError(
                f"strokes {group} overshoot hour {hour} (group {g + 1})"
            )
        groups.append(tuple(group))
    return groups


def prague_clock(count_groups: int) -> list[int]:
    return [int("".join(map(str, g))) for g in prague_clock_groups(count_groups)]
