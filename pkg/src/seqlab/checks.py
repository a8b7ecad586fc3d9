"""Invariant suites run by ``seqlab check``: every registered generator
against its stored terms, plus the cross-checks between independent
routes in each module."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import boustrophedon as bo
from . import extremal as ex
from . import hard_enum as he
from . import kernel, recursive, tchouka, wythoff
from .bignum import PrimeSieve
from .registry import REGISTRY
from .seqdb import SeqDatabase, a36917_by_recurrence, binomial_sum_A36917, lookup


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def _prefixes(db: SeqDatabase, extended: bool):
    bad = []
    for seq_id, reg in REGISTRY.items():
        if reg.sequence.generator is None or seq_id not in db:
            continue
        count = max(reg.desk, reg.extended) if extended else reg.desk
        stored = db[seq_id]
        got = reg.sequence.terms(min(count, len(stored)))
        if tuple(got) != stored[: len(got)]:
            first = next((i for i, (x, y) in enumerate(zip(got, stored)) if x != y), len(got))
            bad.append(f"{seq_id}@{first}")
    return not bad, "mismatch: " + ", ".join(bad) if bad else "all generated prefixes match"


def _round_trip(db: SeqDatabase, extended: bool):
    missing = [i for i, t in db.entries.items() if i not in {m.id for m in lookup(db, t[:10])}]
    return not missing, f"not self-identified: {missing}" if missing else f"{len(db)} entries"


def _tree_heights(db, extended):
    top = 7 if extended else 6
    ok = all(recursive.tree_height_sum_W(n) == recursive.tree_height_sum_bruteforce(n) for n in range(1, top + 1))
    return ok, f"closed formula = Pruefer enumeration for n <= {top}"


def _conway(db, extended):
    got = recursive.conway_threshold(10**6 if extended else 10**5)
    return got == 1489, f"last exceedance at n = {got}"


def _wythoff(db, extended):
    windows = [wythoff.wythoff_window(30, 20, c) for c in (1, 2, 3, 4)]
    ok = all(w == windows[0] for w in windows[1:])
    return ok, "four constructions agree on a 31 x 21 window"


def _boustro(db, extended):
    rng = random.Random(1)
    for _ in range(50):
        a = [rng.randint(-20, 20) for _ in range(rng.randint(1, 25))]
        if bo.boustrophedon_transform(a) != bo.boustrophedon_by_convolution(a):
            return False, f"routes disagree on {a}"
    return True, "triangle = convolution on 50 random inputs"


def _extremal(db, extended):
    top = 12 if extended else 8
    ok = all(
        ex.extremal_leading_coeffs(m)[0] == ex.leading_coeff_closed_form(m)
        and ex.extremal_leading_coeffs(m) == ex.extremal_leading_coeffs(m, method="linear")
        for m in range(1, top + 1)
    )
    detail = f"triangular = linear = closed form for m <= {top}"
    if extended:
        first = ex.find_negative_next_coeff(range(1, 200))
        ok = ok and first == 3696
        detail += f"; first negative next coefficient at n = {first}"
    return ok, detail


def _tchouka(db, extended):
    top = 300
    game = tchouka.t_by_game(top)
    ok = game == [tchouka.t_by_rounding(n) for n in range(1, top + 1)] == tchouka.t_by_sieve(top)
    return ok, f"game, rounding and sieve agree for n <= {top}"


def _gilbreath(db, extended):
    limit = 10**6 if extended else 10**5
    sieve = PrimeSieve(limit)
    count = sieve.prime_count(limit)
    leaders = kernel.gilbreath_row_leaders(count - 1, sieve=sieve)
    return all(v == 1 for v in leaders), f"{len(leaders)} row leaders, all 1"


def _a36917(db, extended):
    return binomial_sum_A36917(40) == a36917_by_recurrence(40), "summation = recurrence for 40 terms"


def _hard(db, extended):
    ok = all(he.latin_squares_reduced(n) == he.latin_squares_bruteforce(n) for n in range(1, 5))
    ok = ok and all(he.monotone_functions_raw(n) == he.monotone_functions_bruteforce(n) for n in range(0, 5))
    ok = ok and all(he.hadamard_maxdet01(n) == he.maxdet01_direct(n) for n in range(1, 5))
    ok = ok and all(he.pancake_f(n) == he.pancake_f_reference(n) for n in range(1, 7))
    return ok, "fast routes = brute force on small cases"


SUITES: list[tuple[str, Callable]] = [
    ("registered prefixes", _prefixes),
    ("lookup round trip", _round_trip),
    ("tree height sums", _tree_heights),
    ("conway threshold", _conway),
    ("wythoff constructions", _wythoff),
    ("boustrophedon routes", _boustro),
    ("extremal enumerators", _extremal),
    ("tchoukaillon t(n)", _tchouka),
    ("gilbreath leaders", _gilbreath),
    ("A36917 dual path", _a36917),
    ("hard enumerations", _hard),
]


def run_checks(db: SeqDatabase, extended: bool = False) -> list[CheckResult]:
    out = []
    for name, fn in SUITES:
        t = time.perf_counter()
        try:
            ok, detail = fn(db, extended)
        except Exception as exc:  # a crashing suite is a failed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, ok, detail, time.perf_counter() - t))
    return out
