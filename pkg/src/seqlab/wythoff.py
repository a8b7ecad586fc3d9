"""Zeckendorf representations and the Wythoff array.

Fibonacci numbers use F_1 = F_2 = 1, so Zeckendorf indices start at 2.
Array rows are numbered from 0; columns to the right of the vertical line
are numbered k = 0, 1, ... (the horizontal para-Fibonacci sequence adds 1).
Every floor of a multiple of the golden ratio is taken in exact integer
arithmetic: floor(m * tau) = (m + isqrt(5 m^2)) // 2, valid because
sqrt(5) m is irrational for m > 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt


@lru_cache(maxsize=None)
def fib(i: int) -> int:
    if i < 0:
        raise ValueError("negative Fibonacci index")
    a, b = 0, 1
    for _ in range(i):
        a, b = b, a + b
    return a


def floor_tau_multiple(m: int) -> int:
    """floor(m * (1 + sqrt 5) / 2) for integer m >= 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return (m + isqrt(5 * m * m)) // 2


def lower_wythoff(n: int) -> int:
    """floor(n tau); the pre-line column of row r is lower_wythoff(r + 1)."""
    return floor_tau_multiple(n)


@dataclass(frozen=True)
class Zeckendorf:
    n: int
    indices: tuple  # strictly decreasing, pairwise gaps >= 2

    def value(self) -> int:
        return sum(fib(i) for i in self.indices)


def zeckendorf(n: int) -> Zeckendorf:
    if n < 0:
        raise ValueError("n must be >= 0")
    indices = []
    rest = n
    i = 2
    while fib(i + 1) <= rest:
        i += 1
    while rest:
        if fib(i) <= rest:
            indices.append(i)
            rest -= fib(i)
            i -= 1
        i -= 1
    return Zeckendorf(n, tuple(indices))


def fib_successor(n: int) -> int:
    """S n: shift every Zeckendorf index up by one (S 0 = 0)."""
    return sum(fib(i + 1) for i in zeckendorf(n).indices)


def fib_predecessor(n: int) -> int:
    """Inverse of S on its image (numbers whose lowest index is >= 3)."""
    z = zeckendorf(n).indices
    if z and z[-1] < 3:
        raise ValueError(f"{n} is not a Fibonacci successor")
    return sum(fib(i - 1) for i in z)


def is_successor(n: int) -> bool:
    z = zeckendorf(n).indices
    return bool(z) and z[-1] >= 3


def wythoff_entry(n: int, k: int) -> int:
    """floor((n+1) tau) F_{k+2} + F_{k+1} n.

    The floor has to be taken before scaling by F_{k+2}: flooring the whole
    product (n+1) tau F_{k+2} already fails at row 0, column 2 (gives 4, not 3).
    """
    if n < 0 or k < 0:
        raise ValueError("row and column must be >= 0")
    return lower_wythoff(n + 1) * fib(k + 2) + fib(k + 1) * n


@dataclass(frozen=True)
class WythoffWindow:
    """Rows 0..R, columns 0..K, plus the two pre-line columns (n, 1 + S n)."""

    rows: tuple
    preline: tuple

    def __getitem__(self, rk):
        n, k = rk
        return self.rows[n][k]


def _fib_fill(a: int, b: int, count: int) -> list[int]:
    out = [a, b]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


def _construction_1(R: int, K: int):
    rows, pre = [], []
    for n in range(R + 1):
        w = lower_wythoff(n + 1)
        pre.append((n, w))
        rows.append(tuple(_fib_fill(n, w, K + 3)[2:]))
    return rows, pre


def _construction_2(R: int, K: int):
    rows, pre = [], []
    for n in range(R + 1):
        s = fib_successor(n)
        pre.append((n, 1 + s))
        m = n + 1 + s
        row = [m]
        while len(row) < K + 1:
            row.append(fib_successor(row[-1]))
        rows.append(tuple(row))
    return rows, pre


def _construction_3(R: int, K: int):
    rows, pre = [], []
    m = 0
    for n in range(R + 1):
        m += 1
        while is_successor(m):
            m += 1
        row = [m]
        while len(row) < K + 1:
            row.append(fib_successor(row[-1]))
        rows.append(tuple(row))
        # the pre-line pair is recovered by running the recurrence backwards
        first, second = row[0], fib_successor(row[0])
        prev = second - first
        pre.append((first - prev, prev))
    return rows, pre


def _construction_4(R: int, K: int):
    rows = [tuple(wythoff_entry(n, k) for k in range(K + 1)) for n in range(R + 1)]
    pre = []
    for n in range(R + 1):
        a0, a1 = wythoff_entry(n, 0), wythoff_entry(n, 1)
        pre.append((2 * a0 - a1, a1 - a0))
    return rows, pre


_CONSTRUCTIONS = {1: _construction_1, 2: _construction_2, 3: _construction_3, 4: _construction_4}


def wythoff_window(R: int, K: int, construction: int = 4) -> WythoffWindow:
    if R < 0 or K < 0:
        raise ValueError("R and K must be >= 0")
    try:
        build = _CONSTRUCTIONS[construction]
    except KeyError:
        raise ValueError("construction must be 1, 2, 3 or 4") from None
    rows, pre = build(R, K)
    return WythoffWindow(tuple(rows), tuple(pre))


def _row_of_leader(a: int) -> int:
    """Row whose column-0 entry is a (a must not be a successor)."""
    # leader(r) = r + floor((r+1) tau) is increasing in r; start from the
    # estimate a / tau^2 and step to the exact row
    r = max(0, (a * 382) // 1000 - 2)
    while r + lower_wythoff(r + 1) < a:
        r += 1
    while r > 0 and r + lower_wythoff(r + 1) > a:
        r -= 1
    if r + lower_wythoff(r + 1) != a:
        raise ValueError(f"{a} does not start a row")
    return r


def locate(n: int) -> tuple[int, int]:
    """(row, column) of the positive integer n in the array."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = 0
    while is_successor(n):
        n = fib_predecessor(n)
        k += 1
    return _row_of_leader(n), k


def para_fibonacci_vertical(count: int) -> list[int]:
    return [locate(n)[0] for n in range(1, count + 1)]


def para_fibonacci_horizontal(count: int) -> list[int]:
    return [locate(n)[1] + 1 for n in range(1, count + 1)]


def fibonacci_successors(count: int) -> list[int]:
    """S1, S2, ... ."""
    return [fib_successor(n) for n in range(1, count + 1)]


def non_successors(count: int) -> list[int]:
    out, m = [], 0
    while len(out) < count:
        m += 1
        if not is_successor(m):
            out.append(m)
    return out


def lower_wythoff_sequence(count: int) -> list[int]:
    return [lower_wythoff(n) for n in range(1, count + 1)]


def wythoff_antidiagonals(count: int) -> list[int]:
    from .kernel import read_square_by_antidiagonals

    return read_square_by_antidiagonals(wythoff_entry, count)


def find_row_of_fibonacci_type(a: int, b: int, max_steps: int = 200):
    """Row of the array containing the tail of the sequence a, b, a+b, ...

    Returns (row, position in the sequence, column) or None if no match is
    found within ``max_steps`` terms.
    """
    x, y = a, b
    for step in range(max_steps):
        if x >= 1 and y > x:
            row, col = locate(x)
            if wythoff_entry(row, col + 1) == y:
                return row, step, col
        x, y = y, x + y
    return None


def delete_first_occurrences(seq: list[int]) -> list[int]:
    seen: set[int] = set()
    out = []
    for v in seq:
        if v in seen:
            out.append(v)
        else:
            seen.add(v)
    return out


def zero_blocks(seq: list[int], count: int) -> list[list[int]]:
    """The first ``count`` blocks of ``seq``, each starting at a 0."""
    blocks: list[list[int]] = []
    for v in seq:
        if v == 0:
            if len(blocks) == count:
                break
            blocks.append([0])
        elif blocks:
            blocks[-1].append(v)
    return blocks
