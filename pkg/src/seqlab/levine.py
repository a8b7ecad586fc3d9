"""Levine's array kept as run-length rows.

Row n+1 of the array is determined by row n read backwards: the j-th
element from the right of row n is the multiplicity of value j in row n+1.
Storing each row as (value, multiplicity) runs means row n costs memory
proportional to the length of row n-1, which is what makes row 11
(about 1.4e8 entries) cheap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import BudgetExceeded

GOLDEN = (1 + math.sqrt(5)) / 2
DEFAULT_MAX_RUNS = 5_000_000


@dataclass(frozen=True)
class RunLengthRow:
    index: int
    runs: tuple  # ((value, multiplicity), ...)

    def __post_init__(self):
        values = [v for v, _ in self.runs]
        if not values or values[0] != 1:
            raise ValueError("a Levine row starts with a run of 1's")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("run values must be strictly increasing")
        if any(m < 1 for _, m in self.runs):
            raise ValueError("run multiplicities must be positive")

    @classmethod
    def from_values(cls, index: int, values) -> RunLengthRow:
        runs: list[list[int]] = []
        for v in values:
            if runs and runs[-1][0] == v:
                runs[-1][1] += 1
            else:
                runs.append([v, 1])
        return cls(index, tuple(map(tuple, runs)))

    def __len__(self) -> int:
        return sum(m for _, m in self.runs)

    def total(self) -> int:
        return sum(v * m for v, m in self.runs)

    def last(self) -> int:
        return self.runs[-1][0]

    def ones(self) -> int:
        return self.runs[0][1]

    def expand(self) -> Iterator[int]:
        for v, m in self.runs:
            for _ in range(m):
                yield v

    def expand_reversed(self) -> Iterator[int]:
        for v, m in reversed(self.runs):
            for _ in range(m):
                yield v

    def values(self) -> list[int]:
        return list(self.expand())

    def prefix_sum(self, i: int) -> int:
        """s(row, i): sum of the first i elements."""
        s = 0
        for v, m in self.runs:
            if i <= m:
                return s + v * i
            s += v * m
            i -= m
        raise IndexError("prefix longer than the row")

    def sum_of_prefix_sums(self, upto: int) -> int:
        """sum_{i=1}^{upto} s(row, i), one closed form per run."""
        total, base, left = 0, 0, upto
        for v, m in self.runs:
            t = min(m, left)
            # sum_{k=1}^{t} (base + k v)
            total += t * base + v * t * (t + 1) // 2
            base += v * m
            left -= t
            if left == 0:
                return total
        raise IndexError("prefix longer than the row")

    def sum_of_prefix_triangles(self, upto: int) -> int:
        """sum_{i=1}^{upto} C(s(row, i) + 1, 2), one closed form per run."""
        total, base, left = 0, 0, upto
        for v, m in self.runs:
            t = min(m, left)
            # s_k = base + k v;  C(s+1, 2) = (s^2 + s) / 2
            k1 = t * (t + 1) // 2
            k2 = t * (t + 1) * (2 * t + 1) // 6
            sum_s = t * base + v * k1
            sum_s2 = t * base * base + 2 * base * v * k1 + v * v * k2
            total += (sum_s2 + sum_s) // 2
            base += v * m
            left -= t
            if left == 0:
                return total
        raise IndexError("prefix longer than the row")


FIRST_ROW = RunLengthRow(1, ((1, 2),))


def next_row(r: RunLengthRow, max_runs: int = DEFAULT_MAX_RUNS) -> RunLengthRow:
    """Row n+1: value j repeated (j-th element from the right of row n) times."""
    length = len(r)
    if length > max_runs:
        raise BudgetExceeded(
            f"row {r.index + 1} would have {length} runs (cap {max_runs})"
        )
    runs = tuple((j, m) for j, m in enumerate(r.expand_reversed(), start=1))
    return RunLengthRow(r.index + 1, runs)


def rows(upto: int, max_runs: int = DEFAULT_MAX_RUNS) -> list[RunLengthRow]:
    """Rows 1..upto."""
    out = [FIRST_ROW]
    while out[-1].index < upto:
        out.append(next_row(out[-1], max_runs))
    return out[:upto]


def levine_terms(max_index: int, max_runs: int = DEFAULT_MAX_RUNS) -> list[int]:
    """L_1..L_max_index (at most L_15).

    L_n is read directly as the last entry of row n while that row fits the
    run budget; beyond that the identities take over: L_{k+1} is the length
    of row k, L_{k+2} its sum, and L_{k+3}, L_{k+4} come from the prefix-sum
    identities on row k.
    """
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    if max_index > 15:
        raise BudgetExceeded("terms beyond L_15 need formulas that are not available")
    materialized = [FIRST_ROW]
    while materialized[-1].index < min(max_index, 11):
        try:
            materialized.append(next_row(materialized[-1], max_runs))
        except BudgetExceeded:
            break
    terms = [row.last() for row in materialized]
    top = materialized[-1]
    k = top.index
    extra = [
        len(top),
        top.total(),
        top.sum_of_prefix_sums(len(top)),
        top.sum_of_prefix_triangles(len(top)),
    ]
    # the extra values are L_{k+1}..L_{k+4}; they only help if the rows kept up
    for offset, value in enumerate(extra, start=1):
        if len(terms) == k + offset - 1:
            terms.append(value)
    if len(terms) < max_index:
        raise BudgetExceeded(f"L_{max_index} needs more rows than the run budget allows")
    return terms[:max_index]


def verify_identities(n: int, max_runs: int = DEFAULT_MAX_RUNS) -> dict:
    """Check identities (i)-(vii) that involve row n.

    (i)-(iv) are checked for L_n against rows n-2, n-1, n, n+1 where those
    rows exist (row 0 is not part of the array), and (v)-(vii) relate the
    prefix sums s(n, i) to L_{n+2}, L_{n+3}, L_{n+4}.
    """
    if n < 1:
        raise ValueError("rows are numbered from 1")
    all_rows = rows(n, max_runs)
    try:
        all_rows.append(next_row(all_rows[-1], max_runs))
    except BudgetExceeded:
        pass
    row = {r.index: r for r in all_rows}
    L = levine_terms(min(n + 4, 15), max_runs)
    Ln = lambda k: L[k - 1]  # noqa: E731
    report: dict[str, bool] = {}
    if n - 2 >= 1:
        report["i_sum_row_n_minus_2"] = row[n - 2].total() == Ln(n)
    if n - 1 >= 1:
        report["ii_length_row_n_minus_1"] = len(row[n - 1]) == Ln(n)
    report["iii_last_row_n"] = row[n].last() == Ln(n)
    if n + 1 in row:
        report["iv_ones_row_n_plus_1"] = row[n + 1].ones() == Ln(n)
    width = Ln(n + 1)
    report["v_prefix_sum"] = row[n].prefix_sum(width) == Ln(n + 2)
    if n + 3 <= 15:
        report["vi_sum_of_prefix_sums"] = row[n].sum_of_prefix_sums(width) == Ln(n + 3)
    if n + 4 <= 15:
        report["vii_sum_of_triangles"] = row[n].sum_of_prefix_triangles(width) == Ln(n + 4)
    return report


def growth_estimate(terms: list[int], first_index: int = 1):
    """Least-squares fit of log L_n = -log c1 + c2 * tau**n.

    ``terms[0]`` is L_{first_index}. Returns (c1, c2, residuals).
    """
    if len(terms) < 8:
        raise ValueError("the fit needs at least 8 terms")
    n = np.arange(first_index, first_index + len(terms), dtype=float)
    logs = np.array([math.log(t) for t in terms])
    design = np.column_stack([np.ones_like(n), GOLDEN**n])
    (intercept, slope), *_ = np.linalg.lstsq(design, logs, rcond=None)
    residuals = logs - design @ np.array([intercept, slope])
    return math.exp(-intercept), float(slope), residuals
