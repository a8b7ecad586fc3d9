"""The boustrophedon (Seidel-Entringer-Arnold) triangle and transform."""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .bignum import binomial, divisors


def boustrophedon_triangle(a: Sequence[int]) -> list[list[int]]:
    """Rows T[n][0..n] in fill order: T[n][0] = a_n and
    T[n][k] = T[n][k-1] + T[n-1][n-k]."""
    rows: list[list[int]] = []
    for n, seed in enumerate(a):
        row = [seed]
        for k in range(1, n + 1):
            row.append(row[-1] + rows[n - 1][n - k])
        rows.append(row)
    return rows


def display_rows(rows: list[list[int]]) -> list[list[int]]:
    """Rows as they are drawn: odd rows left to right, even rows right to left."""
    return [row if n % 2 else row[::-1] for n, row in enumerate(rows)]


def format_triangle(a: Sequence[int]) -> str:
    rows = display_rows(boustrophedon_triangle(a))
    if not rows:
        return ""
    # staggered layout: row n's i-th cell sits in slot (depth - 1 - n) + 2i
    width = max(len(str(v)) for row in rows for v in row)
    depth = len(rows)
    lines = []
    for n, row in enumerate(rows):
        slots = [" " * width] * (2 * depth - 1)
        for i, v in enumerate(row):
            slots[depth - 1 - n + 2 * i] = str(v).rjust(width)
        lines.append(" ".join(slots).rstrip())
    return "\n".join(lines)


def boustrophedon_transform(a: Sequence[int]) -> list[int]:
    """Row-end values of the triangle seeded with a."""
    return [row[-1] for row in boustrophedon_triangle(a)]


@lru_cache(maxsize=None)
def _entringer_prefix(count: int) -> tuple:
    return tuple(boustrophedon_transform([1] + [0] * (count - 1))) if count else ()


def entringer(count: int) -> list[int]:
    """1, 1, 1, 2, 5, 16, 61, ... (boustrophedon transform of 1, 0, 0, ...)."""
    return list(_entringer_prefix(count))


def boustrophedon_by_convolution(a: Sequence[int]) -> list[int]:
    """b_n = sum_k C(n, k) a_k E_{n-k}, the EGF identity B = (sec + tan) A."""
    e = entringer(len(a))
    return [sum(binomial(n, k) * a[k] * e[n - k] for k in range(n + 1)) for n in range(len(a))]


def secant_tangent_numbers(count: int) -> tuple[list[int], list[int]]:
    """Secant numbers sit at the even row ends, tangent numbers at the odd ones."""
    e = entringer(2 * count)
    return e[0::2][:count], e[1::2][:count]


def eigen_shift_solver(shift: int, count: int, free_prefix: Sequence[int] | None = None) -> list[int]:
    """Sequence a with T(a)_n = a_{n+shift}.

    Since b_n only involves a_0..a_n, each new term a_{n+shift} is forced once
    the first ``shift`` terms are chosen. The default free prefix is the
    lexicographically least one with a nonzero leading term: (1,) or (1, 0).
    """
    if shift not in (1, 2):
        raise ValueError("shift must be 1 or 2")
    a = list(free_prefix) if free_prefix is not None else [1] + [0] * (shift - 1)
    if len(a) != shift:
        raise ValueError(f"shift {shift} needs exactly {shift} free terms")
    e = entringer(count + 1)
    n = 0
    while len(a) < count:
        a.append(sum(binomial(n, k) * a[k] * e[n - k] for k in range(n + 1)))
        n += 1
    return a[:count]


def moebius_eigen_check(a: Sequence[int]) -> bool:
    """a_{n+1} == sum_{d | n} a_d for every n the prefix can test (1-indexed)."""
    return all(
        a[n] == sum(a[d - 1] for d in divisors(n)) for n in range(1, len(a))
    )


def moebius_eigen_sequence(count: int) -> list[int]:
    """1, 1, 2, 3, 5, 6, 10, ...: shifts left under the inverse Möbius transform."""
    a = [1]
    while len(a) < count:
        n = len(a)
        a.append(sum(a[d - 1] for d in divisors(n)))
    return a[:count]
