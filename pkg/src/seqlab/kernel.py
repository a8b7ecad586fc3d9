"""Sequences, array readers, generic transforms, Nim-addition and the
Gilbreath difference array."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence as Seq

import numpy as np

from .bignum import binomial, divisors, get_sieve
from .errors import InsufficientWidth


@dataclass
class Sequence:
    """A lazily extended integer sequence.

    ``generator(count)`` must return the first ``count`` terms; because it is
    deterministic, a longer request simply re-generates and keeps the result.
    """

    id: str
    offset: int = 0
    generator: Callable[[int], list[int]] | None = None
    stored: tuple = ()
    name: str = ""
    _terms: list = field(default_factory=list, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def provenance(self) -> str:
        return "generated" if self.generator is not None else "stored"

    def terms(self, count: int) -> list[int]:
        if self.generator is None:
            return list(self.stored[:count])
        with self._lock:
            if len(self._terms) < count:
                self._terms = list(self.generator(count))
            return self._terms[:count]

    def __getitem__(self, n: int) -> int:
        """Term with index ``n`` under this sequence's offset."""
        i = n - self.offset
        if i < 0:
            raise IndexError(n)
        terms = self.terms(i + 1)
        if len(terms) <= i:
            raise IndexError(n)
        return terms[i]


class NumberTriangle:
    """Triangle whose row n holds entry(n, 0..n)."""

    def __init__(self, entry: Callable[[int, int], int]):
        self.entry = entry

    def row(self, n: int) -> list[int]:
        return [self.entry(n, k) for k in range(n + 1)]


class NumberSquare:
    def __init__(self, entry: Callable[[int, int], int]):
        self.entry = entry

    def __call__(self, row: int, col: int) -> int:
        return self.entry(row, col)


PASCAL = NumberTriangle(binomial)


def nim_add(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("Nim-addition is defined on nonnegative integers")
    return a ^ b


NIM_TABLE = NumberSquare(nim_add)


def read_triangle_by_rows(t: NumberTriangle, count: int) -> list[int]:
    out: list[int] = []
    n = 0
    while len(out) < count:
        out.extend(t.row(n))
        n += 1
    return out[:count]


def antidiagonal_index(i: int) -> tuple[int, int]:
    """(row, col) of the i-th term when a square is read by antidiagonals.

    Each antidiagonal d is read from (d, 0) up to (0, d).
    """
    d = 0
    while i > d:
        i -= d + 1
        d += 1
    return d - i, i


def antidiagonal_position(row: int, col: int) -> int:
    d = row + col
    return d * (d + 1) // 2 + col


def read_square_by_antidiagonals(s, count: int) -> list[int]:
    out = []
    d = 0
    while len(out) < count:
        for col in range(d + 1):
            out.append(s(d - col, col))
        d += 1
    return out[:count]


def gilbreath_rows(primes: np.ndarray, num_rows: int):
    """Yield rows 0..num_rows of the iterated absolute-difference array."""
    row = np.asarray(primes, dtype=np.int64)
    yield row
    for _ in range(num_rows):
        row = np.abs(np.diff(row))
        yield row


def gilbreath_row_leaders(num_rows: int, width: int | None = None, sieve=None) -> list[int]:
    """Leading entries of rows 1..num_rows, using the first ``width`` primes."""
    if width is None:
        width = num_rows + 1
    if width < num_rows + 1:
        raise InsufficientWidth(
            f"{num_rows} difference rows need at least {num_rows + 1} primes, got {width}"
        )
    if num_rows == 0:
        return []
    primes = (sieve or get_sieve()).first_primes(width)[: num_rows + 1]
    # only the first num_rows + 1 primes influence the leaders we report;
    # the working row is difference-updated in place to avoid reallocation
    row = primes.astype(np.int32 if primes[-1] < 2**31 else np.int64)
    leaders = []
    length = len(row)
    for _ in range(num_rows):
        np.subtract(row[1:length], row[: length - 1], out=row[: length - 1])
        length -= 1
        np.abs(row[:length], out=row[:length])
        leaders.append(int(row[0]))
    return leaders


def gilbreath_sequence(count: int, sieve=None) -> list[int]:
    """The Gilbreath array read by upward antidiagonals.

    Antidiagonal d lists row d's first entry, then row d-1's second entry,
    and so on up to the d-th prime.
    """
    if count <= 0:
        return []
    d = 0
    while (d + 1) * (d + 2) // 2 < count:
        d += 1
    primes = (sieve or get_sieve()).first_primes(d + 1)
    rows = [[int(v) for v in r] for r in gilbreath_rows(primes, d)]
    out = []
    for k in range(d + 1):
        for r in range(k, -1, -1):
            out.append(rows[r][k - r])
    return out[:count]


# --- transforms ------------------------------------------------------------

def differences(a: Seq[int]) -> list[int]:
    return [y - x for x, y in zip(a, a[1:])]


def partial_sums(a: Seq[int], start: int = 0) -> list[int]:
    out, s = [], start
    for x in a:
        s += x
        out.append(s)
    return out


def binomial_transform(a: Seq[int]) -> list[int]:
    return [sum(binomial(n, k) * a[k] for k in range(n + 1)) for n in range(len(a))]


def inverse_binomial_transform(a: Seq[int]) -> list[int]:
    return [
        sum((-1) ** (n - k) * binomial(n, k) * a[k] for k in range(n + 1))
        for n in range(len(a))
    ]


def inverse_moebius_transform(a: Seq[int]) -> list[int]:
    """b_n = sum_{d | n} a_d, with both sequences 1-indexed."""
    return [sum(a[d - 1] for d in divisors(n)) for n in range(1, len(a) + 1)]


TRANSFORMS: dict[str, Callable[[Seq[int]], list[int]]] = {
    "differences": differences,
    "partial_sums": partial_sums,
    "binomial": binomial_transform,
    "inverse_binomial": inverse_binomial_transform,
    "inverse_moebius": inverse_moebius_transform,
}


def transform(seq: Iterable[int] | Sequence, kind: str, count: int) -> list[int]:
    """Apply a named transform and return ``count`` output terms.

    ``differences`` consumes one extra source term; every other transform maps
    the first ``count`` source terms to ``count`` outputs.
    """
    if kind not in TRANSFORMS:
        raise ValueError(f"unknown transform {kind!r}")
    need = count + 1 if kind == "differences" else count
    if isinstance(seq, Sequence):
        source = seq.terms(need)
    else:
        source = list(seq)[:need]
    if len(source) < need:
        raise ValueError(f"{kind} of {count} terms needs {need} source terms")
    return TRANSFORMS[kind](source)[:count]
