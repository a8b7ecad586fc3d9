"""A small sequence database: stripped-format loading, lookup, a
transform-chain search in the spirit of an email "superseeker", and the
number-theory sequences used to illustrate identification."""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from math import isqrt
from pathlib import Path
from typing import Iterable

from .bignum import arith_functions, arith_tables, binomial, factorize
from .boustrophedon import boustrophedon_transform
from .errors import DuplicateId, ParseError, RecurrenceViolation
from .kernel import (
    binomial_transform,
    differences,
    inverse_binomial_transform,
    inverse_moebius_transform,
)

_ID = re.compile(r"A(\d+)$")
_TERMS = re.compile(r"-?\d+(,-?\d+)*$")


def normalize_id(text: str) -> str:
    """'A435', 'a000435' -> 'A000435'."""
    m = _ID.match(text.strip().upper())
    if not m:
        raise ValueError(f"not a sequence id: {text!r}")
    return f"A{int(m.group(1)):06d}"


@dataclass
class SeqDatabase:
    entries: dict = field(default_factory=dict)  # id -> tuple of terms
    _index: dict = field(default_factory=dict, repr=False)  # first 3 terms -> [(id, pos)]

    def add(self, seq_id: str, terms: Iterable[int]) -> None:
        seq_id = normalize_id(seq_id)
        if seq_id in self.entries:
            raise DuplicateId(seq_id)
        terms = tuple(terms)
        self.entries[seq_id] = terms
        for pos in range(len(terms) - 2):
            self._index.setdefault(terms[pos : pos + 3], []).append((seq_id, pos))

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, seq_id: str) -> bool:
        return normalize_id(seq_id) in self.entries

    def __getitem__(self, seq_id: str) -> tuple:
        return self.entries[normalize_id(seq_id)]

    def index_snapshot(self) -> dict:
        return {k: tuple(v) for k, v in self._index.items()}


def parse_stripped(lines: Iterable[str]) -> SeqDatabase:
    db = SeqDatabase()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, "expected '<ID> <t1>,<t2>,...'")
        seq_id, body = parts
        try:
            seq_id = normalize_id(seq_id)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        if not _TERMS.match(body):
            raise ParseError(lineno, f"malformed term list {body!r}")
        try:
            db.add(seq_id, (int(t) for t in body.split(",")))
        except DuplicateId:
            raise DuplicateId(f"{seq_id} (line {lineno})") from None
    return db


def default_db_path() -> Path:
    env = os.environ.get("SEQLAB_DB")
    if env:
        return Path(env)
    return Path(str(resources.files("seqlab") / "data" / "sequences.txt"))


def load_db(path: str | os.PathLike | None = None) -> SeqDatabase:
    path = Path(path) if path is not None else default_db_path()
    with open(path, encoding="ascii") as fh:
        return parse_stripped(fh)


@dataclass(frozen=True)
class Match:
    id: str
    position: int  # index in the entry where the query starts
    exact: bool  # query is a prefix of the entry
    low_confidence: bool  # fewer than 3 query terms


def _occurrences(db: SeqDatabase, q: tuple):
    if len(q) >= 3:
        for seq_id, pos in db._index.get(q[:3], ()):
            if db.entries[seq_id][pos : pos + len(q)] == q:
                yield seq_id, pos
    else:
        for seq_id, terms in db.entries.items():
            for pos in range(len(terms) - len(q) + 1):
                if terms[pos : pos + len(q)] == q:
                    yield seq_id, pos


def lookup(db: SeqDatabase, terms: Iterable[int]) -> list[Match]:
    """Entries containing the query as a contiguous run; prefix matches
    first, then by id. Each entry is reported at its first occurrence."""
    q = tuple(int(t) for t in terms)
    if not q:
        return []
    first: dict[str, int] = {}
    for seq_id, pos in _occurrences(db, q):
        if seq_id not in first or pos < first[seq_id]:
            first[seq_id] = pos
    low = len(q) < 3
    hits = [Match(i, p, p == 0, low) for i, p in first.items()]
    return sorted(hits, key=lambda m: (not m.exact, m.id))


# --- transform-chain search -------------------------------------------------

def _partial_sums_from(c: int):
    def f(a):
        out, s = [c], c
        for x in a:
            s += x
            out.append(s)
        return out

    return f


def _scale(c: int):
    return lambda a: [c * x for x in a]


def _divide(c: int):
    def f(a):
        if any(x % c for x in a):
            return None
        return [x // c for x in a]

    return f


# Fixed enumeration order keeps results reproducible. Partial sums carry an
# explicit integration constant (0 or 1) that is prepended to the output.
SUPERSEEK_STEPS: dict = {
    "differences": differences,
    "partial_sums[0]": _partial_sums_from(0),
    "partial_sums[1]": _partial_sums_from(1),
    "binomial": binomial_transform,
    "inverse_binomial": inverse_binomial_transform,
    "inverse_moebius": inverse_moebius_transform,
    "boustrophedon": boustrophedon_transform,
    "scale[-1]": _scale(-1),
    "scale[2]": _scale(2),
    "scale[3]": _scale(3),
    "divide[2]": _divide(2),
    "divide[3]": _divide(3),
    "shift": lambda a: list(a[1:]),
}

MIN_MATCH = 4

# adjacent steps that undo each other; chains containing them are skipped
_CANCELLING = {
    ("binomial", "inverse_binomial"),
    ("inverse_binomial", "binomial"),
    ("scale[-1]", "scale[-1]"),
    ("scale[2]", "divide[2]"),
    ("scale[3]", "divide[3]"),
    ("divide[2]", "scale[2]"),
    ("divide[3]", "scale[3]"),
    ("partial_sums[0]", "differences"),
    ("partial_sums[1]", "differences"),
}


@dataclass(frozen=True)
class SuperseekerResult:
    id: str
    chain: tuple  # names of the steps applied to the query, in order
    offset: int  # position in the entry where the transformed query starts

    def replay(self, terms: Iterable[int]) -> list[int] | None:
        return apply_chain(self.chain, terms)


def apply_chain(chain: Iterable[str], terms: Iterable[int]) -> list[int] | None:
    out = list(terms)
    for step in chain:
        out = SUPERSEEK_STEPS[step](out)
        if out is None:
            return None
    return list(out)


def superseek(db: SeqDatabase, terms: Iterable[int], max_chain: int = 2) -> list[SuperseekerResult]:
    """Look the query up directly, then after every chain of at most
    ``max_chain`` transforms; a transformed query must keep at least
    MIN_MATCH terms to count."""
    q = [int(t) for t in terms]
    results: list[SuperseekerResult] = []
    seen = set()
    for length in range(max_chain + 1):
        for chain in product(SUPERSEEK_STEPS, repeat=length):
            if any(pair in _CANCELLING for pair in zip(chain, chain[1:])):
                continue
            out = apply_chain(chain, q)
            if out is None or len(out) < MIN_MATCH:
                continue
            for m in lookup(db, out):
                key = (m.id, chain)
                if key not in seen:
                    seen.add(key)
                    results.append(SuperseekerResult(m.id, chain, m.position))
    return results


# --- identification examples -----------------------------------------------

def binomial_sum_A36917(count: int) -> list[int]:
    """a(n) = sum_k C(2n-2k, n-k)^2 C(2k, k)^2, checked against
    2n^3 a(n) = 16(2n-1)(2n^2-2n+1) a(n-1) - 512(n-1)^3 a(n-2).

    Both binomials are squared; with C(2k, k) unsquared the sum gives
    1, 6, 50, ... and fails the recurrence.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    a = [
        sum(binomial(2 * n - 2 * k, n - k) ** 2 * binomial(2 * k, k) ** 2 for k in range(n + 1))
        for n in range(count)
    ]
    for n in range(2, count):
        lhs = 2 * n**3 * a[n]
        rhs = 16 * (2 * n - 1) * (2 * n * n - 2 * n + 1) * a[n - 1] - 512 * (n - 1) ** 3 * a[n - 2]
        if lhs != rhs:
            raise RecurrenceViolation(f"A36917 recurrence fails at n={n}")
    return a


def a36917_by_recurrence(count: int) -> list[int]:
    a = [1, 8][:count]
    for n in range(2, count):
        num = 16 * (2 * n - 1) * (2 * n * n - 2 * n + 1) * a[n - 1] - 512 * (n - 1) ** 3 * a[n - 2]
        q, r = divmod(num, 2 * n**3)
        if r:
            raise RecurrenceViolation(f"non-integral term at n={n}")
        a.append(q)
    return a


def inequality_sequence_A46520(count: int) -> list[int]:
    """sigma(n) - d(n) - phi(n) for n = 1..count."""
    out = []
    for n in range(1, count + 1):
        sigma, d, phi, _ = arith_functions(n)
        out.append(sigma - d - phi)
    return out


def a46520_min_upto(limit: int) -> tuple[int, int]:
    """(min of sigma - d - phi over 2 <= n <= limit, first n attaining it)."""
    sigma, d, phi = arith_tables(limit)
    diff = sigma[2:] - d[2:] - phi[2:]
    i = int(diff.argmin())
    return int(diff[i]), i + 2


def _even_exponents(n: int, bad) -> bool:
    return all(e % 2 == 0 for p, e in factorize(n) if bad(p))


def mod5_square_indices(limit: int) -> list[int]:
    """c <= limit in which every prime = 2 or 3 (mod 5) has even exponent."""
    return [c for c in range(1, limit + 1) if _even_exponents(c, lambda p: p % 5 in (2, 3))]


def mod5_square_indices_count(count: int) -> list[int]:
    out, c = [], 0
    while len(out) < count:
        c += 1
        if _even_exponents(c, lambda p: p % 5 in (2, 3)):
            out.append(c)
    return out


def loeschian_search(N: int) -> tuple[int, int] | None:
    """Some (a, b) with a, b >= 0 and a^2 + ab + b^2 = N, by direct search."""
    if N < 0:
        raise ValueError("N must be >= 0")
    for a in range(isqrt(N) + 1):
        # b^2 + a b + (a^2 - N) = 0
        disc = 4 * N - 3 * a * a
        if disc < 0:
            break
        r = isqrt(disc)
        if r * r == disc and (r - a) >= 0 and (r - a) % 2 == 0:
            return a, (r - a) // 2
    return None


def loeschian_by_primes(N: int) -> bool:
    """Every prime = 2 (mod 3) divides N to an even power."""
    if N == 0:
        return True
    return _even_exponents(N, lambda p: p % 3 == 2)


def loeschian_test(N: int) -> bool:
    found = loeschian_search(N) is not None
    if found != loeschian_by_primes(N):
        raise ArithmeticError(f"search and prime criterion disagree at N={N}")
    return found


def central_binomials(count: int) -> list[int]:
    return [binomial(n, n // 2) for n in range(count)]
