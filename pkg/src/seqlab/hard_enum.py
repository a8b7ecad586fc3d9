"""Brute-force enumerators for small cases of classic hard sequences:
pancake flipping, reduced Latin squares, monotone Boolean functions,
maximal {0,1} determinants, meanders and stamp foldings."""
from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .errors import BudgetExceeded

# --- sorting by prefix reversal -------------------------------------------

PANCAKE_MAX_N = 10


def _lehmer_rank(perms: np.ndarray) -> np.ndarray:
    """Lexicographic rank of each row of a (k, n) array of permutations of 0..n-1."""
    k, n = perms.shape
    rank = np.zeros(k, dtype=np.int64)
    for i in range(n - 1):
        smaller = (perms[:, i + 1 :] < perms[:, i : i + 1]).sum(axis=1)
        rank = rank * (n - i) + smaller
    return rank


def pancake_f(n: int) -> int:
    """Largest flip distance to the identity, by breadth-first search over
    all n! stacks (flips are their own inverses, so distance from the
    identity equals distance to it)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > PANCAKE_MAX_N:
        raise BudgetExceeded(f"{n}! states exceed the BFS budget")
    seen = np.zeros(math.factorial(n), dtype=bool)
    frontier = np.arange(n, dtype=np.int8)[None, :]
    seen[_lehmer_rank(frontier)] = True
    depth = 0
    while True:
        children = []
        for k in range(2, n + 1):
            child = frontier.copy()
            child[:, :k] = frontier[:, k - 1 :: -1]
            children.append(child)
        if not children:
            return depth
        cand = np.concatenate(children)
        ranks = _lehmer_rank(cand)
        ranks, first = np.unique(ranks, return_index=True)
        fresh = ~seen[ranks]
        if not fresh.any():
            return depth
        seen[ranks[fresh]] = True
        frontier = cand[first[fresh]]
        depth += 1


def pancake_f_reference(n: int) -> int:
    """Plain dictionary BFS, kept as an independent check for small n."""
    start = tuple(range(n))
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for k in range(2, n + 1):
                q = p[:k][::-1] + p[k:]
                if q not in dist:
                    dist[q] = dist[p] + 1
                    nxt.append(q)
        frontier = nxt
    return max(dist.values())


# --- Latin squares ----------------------------------------------------------

LATIN_MAX_N = 7


def latin_squares_reduced(n: int) -> int:
    """Latin squares with first row and first column 1, 2, ..., n.

    Rows 2..n-2 are filled by backtracking; the number of ways to add row
    n-1 is a permanent (any (n-1) x n Latin rectangle has exactly one
    completion), counted by a DP over used symbols. The total number of
    Latin squares is n! (n-1)! times this.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > LATIN_MAX_N:
        raise BudgetExceeded(f"order {n} exceeds the Latin square budget")
    if n <= 2:
        return 1
    full = (1 << n) - 1
    col_used = [1 << c for c in range(n)]  # first row is 0, 1, ..., n-1

    @lru_cache(maxsize=None)
    def completions(avail: tuple, first: int) -> int:
        # avail[c] = symbols still allowed in column c (c >= 1); row starts with `first`
        ways = {1 << first: 1}
        for c in range(1, n):
            nxt: dict[int, int] = {}
            for used, w in ways.items():
                free = avail[c] & ~used
                while free:
                    bit = free & -free
                    free ^= bit
                    nxt[used | bit] = nxt.get(used | bit, 0) + w
            ways = nxt
        return ways.get(full, 0)

    total = 0

    def fill(row: int, col: int, row_used: int) -> None:
        nonlocal total
        if row == n - 2:
            avail = tuple(full & ~col_used[c] for c in range(n))
            total += completions(avail, n - 2)
            return
        if col == n:
            fill(row + 1, 1, 1 << (row + 1))
            return
        free = full & ~col_used[col] & ~row_used
        while free:
            bit = free & -free
            free ^= bit
            col_used[col] |= bit
            fill(row, col + 1, row_used | bit)
            col_used[col] ^= bit

    col_used[0] = full  # column 0 is 0, 1, ..., n-1 by reduction
    fill(1, 1, 1 << 1)
    return total


def latin_squares_bruteforce(n: int) -> int:
    """Reduced Latin squares by plain row-permutation search (n <= 5)."""
    from itertools import permutations

    if n <= 2:
        return 1
    rows = [p for p in permutations(range(n))]
    count = 0

    def extend(square):
        nonlocal count
        r = len(square)
        if r == n:
            count += 1
            return
        for p in rows:
            if p[0] == r and all(p[c] != s[c] for s in square for c in range(n)):
                extend(square + [p])

    extend([tuple(range(n))])
    return count


# --- monotone Boolean functions --------------------------------------------

DEDEKIND_MAX_N = 5


def monotone_functions_raw(n: int) -> int:
    """All monotone Boolean functions of n variables, constants included.

    A monotone f(x_1..x_n) splits as (f with x_n = 0, f with x_n = 1), a
    pair of monotone functions g <= h in n-1 variables.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > DEDEKIND_MAX_N:
        raise BudgetExceeded(f"n={n} exceeds the monotone-function budget")
    funcs = [0, 1]  # truth tables on one point
    width = 1
    for _ in range(n):
        funcs = [g | (h << width) for g in funcs for h in funcs if g & ~h == 0]
        width *= 2
    return len(funcs)


def monotone_functions_bruteforce(n: int) -> int:
    """Count truth tables closed upward, by testing every table (n <= 4)."""
    points = 1 << n
    count = 0
    for table in range(1 << points):
        if all(
            not (table >> x & 1) or (table >> (x | 1 << i) & 1)
            for x in range(points)
            for i in range(n)
        ):
            count += 1
    return count


def dedekind_variant(n: int) -> int:
    """The listed values 1, 4, 18, 166, 7579: raw count minus the two constants."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return monotone_functions_raw(n) - 2


# --- maximal determinants ----------------------------------------------------

def _int_det(rows) -> int:
    """Exact determinant by Bareiss elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def maxdet01_direct(n: int) -> int:
    """Maximum over sets of n distinct nonzero {0,1} rows (n <= 5)."""
    if n > 5:
        raise BudgetExceeded("direct search is limited to n <= 5")
    rows = [tuple((v >> j) & 1 for j in range(n)) for v in range(1, 1 << n)]
    return max(abs(_int_det(c)) for c in combinations(rows, n))


HADAMARD_MAX_N = 7


def hadamard_maxdet01(n: int) -> int:
    """Maximal determinant of an n x n {0,1} matrix.

    Uses maxdet01(n) = maxdet(+-1, order n+1) / 2^n. The +-1 matrix is
    normalized to an all-ones first row and first column; remaining rows are
    chosen with a branch-and-bound on the Gram-Schmidt volume. Each future
    row adds at most its current residual norm, and any +-1 determinant of
    order n+1 is a multiple of 2^n, so a branch is cut once the product of
    the largest available residuals cannot beat the best volume by 2^n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > HADAMARD_MAX_N:
        raise BudgetExceeded(f"n={n} exceeds the determinant search budget")
    m = n + 1
    cand = np.array(
        [[1] + [1 - 2 * ((v >> j) & 1) for j in range(n)] for v in range(1, 1 << n)],
        dtype=float,
    )
    step = 2.0**n * (1 - 1e-9)
    best = [0.0, None]

    def project(resid: np.ndarray, i: int):
        u = resid[i] / math.sqrt(resid[i] @ resid[i])
        return resid - np.outer(resid @ u, u)

    def search(resid: np.ndarray, allowed: np.ndarray, volume: float, chosen: list) -> None:
        remaining = m - 1 - len(chosen)
        if remaining == 0:
            if volume >= best[0] + step:
                best[0], best[1] = volume, list(chosen)
            return
        norms = np.sqrt(np.maximum((resid * resid).sum(axis=1), 0.0))
        norms[~allowed] = 0.0
        order = [int(i) for i in np.argsort(-norms, kind="stable") if norms[i] > 1e-6]
        for pos, i in enumerate(order):
            # rows are taken as a set: later rows come from the rest of `order`
            rest = norms[order[pos + 1 : pos + remaining]]
            if len(rest) < remaining - 1:
                break
            if volume * norms[i] * float(np.prod(rest)) < best[0] + step:
                break
            nxt = allowed.copy()
            nxt[order[: pos + 1]] = False
            search(project(resid, i), nxt, volume * norms[i], chosen + [i])

    first = np.ones(m) / math.sqrt(m)
    base = cand - np.outer(cand @ first, first)
    # columns 2..m may be permuted freely, so one chosen row can be taken as
    # +1, then j entries -1, then +1s
    for j in range(1, n + 1):
        i = (1 << j) - 2  # index of the row with -1 in columns 2..j+1
        allowed = np.ones(len(cand), dtype=bool)
        allowed[i] = False
        r = math.sqrt(base[i] @ base[i])
        search(project(base, i), allowed, math.sqrt(m) * r, [i])
    matrix = [[1] * m] + [[int(x) for x in cand[i]] for i in best[1]]
    det = abs(_int_det(matrix))
    q, r = divmod(det, 2**n)
    assert r == 0
    return q


def hadamard_bound(n: int) -> int:
    """(n+1)^((n+1)/2) / 2^n for n = 3 (mod 4)."""
    if n < 3 or n % 4 != 3:
        raise ValueError("n must be 3 mod 4")
    q, r = divmod((n + 1) ** ((n + 1) // 2), 2**n)
    if r:
        raise ArithmeticError(f"Hadamard bound not integral at n={n}")
    return q


# --- meanders and stamp folding ------------------------------------------------

MEANDER_MAX_N = 14


@lru_cache(maxsize=None)
def noncrossing_matchings(points: tuple) -> tuple:
    """All noncrossing perfect matchings of the sorted points, as dicts
    (tuples of (a, b) pairs)."""
    if not points:
        return ((),)
    out = []
    a = points[0]
    for j in range(1, len(points), 2):
        inner, outer = points[1:j], points[j + 1 :]
        for m1 in noncrossing_matchings(inner):
            for m2 in noncrossing_matchings(outer):
                out.append(((a, points[j]),) + m1 + m2)
    return tuple(out)


def _partner_table(matching, size: int) -> list[int]:
    t = [-1] * size
    for a, b in matching:
        t[a], t[b] = b, a
    return t


def meander_count(n: int) -> int:
    """Ways a river from the south-west, flowing east, can cross a road n times.

    Crossings are points 1..n on the road. The river's two infinite ends are
    modelled as extra points 0 (start, below the road) and n+1 (end, above
    the road when n is odd, below when even). A curve is a pair of
    noncrossing matchings, one per half-plane, and counts when the walk from
    point 0 alternating lower/upper arcs visits every crossing.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MEANDER_MAX_N:
        raise BudgetExceeded(f"n={n} exceeds the meander enumeration budget")
    size = n + 2
    if n % 2:
        lower_pts, upper_pts = tuple(range(0, n + 1)), tuple(range(1, n + 2))
    else:
        lower_pts, upper_pts = tuple(range(0, n + 2)), tuple(range(1, n + 1))
    uppers = [_partner_table(m, size) for m in noncrossing_matchings(upper_pts)]
    lowers = [_partner_table(m, size) for m in noncrossing_matchings(lower_pts)]
    count = 0
    for lo in lowers:
        for up in uppers:
            p, steps, use_lower = 0, 0, True
            while True:
                p = lo[p] if use_lower else up[p]
                steps += 1
                if p == n + 1:
                    break
                use_lower = not use_lower
            if steps == n + 1:
                count += 1
    return count


def closed_meander_count(n: int) -> int:
    """Closed curves crossing a line 2n times (pairs of matchings forming one loop)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if 2 * n > MEANDER_MAX_N + 2:
        raise BudgetExceeded(f"n={n} exceeds the meander enumeration budget")
    pts = tuple(range(2 * n))
    tables = [_partner_table(m, 2 * n) for m in noncrossing_matchings(pts)]
    count = 0
    for up in tables:
        for lo in tables:
            p, steps = 0, 0
            while True:
                p = lo[up[p]]
                steps += 2
                if p == 0:
                    break
            if steps == 2 * n:
                count += 1
    return count


def labeled_foldings(n: int) -> int:
    """Stack orders of a strip of n labeled stamps.

    Perforation k joins stamps k and k+1 and lies on the side given by the
    parity of k; perforations on one side must nest or be disjoint, which is
    the semi-infinite-line crossing condition.
    """
    return sum(1 for _ in _foldings(n))


def _foldings(n: int):
    pos = [0] * (n + 1)
    free = set(range(n))

    def crosses(a, b, c, d):
        a, b = sorted((a, b))
        c, d = sorted((c, d))
        return a < c < b < d or c < a < d < b

    def place(k):
        if k > n:
            yield tuple(pos[1:])
            return
        for p in sorted(free):
            ok = True
            # new perforation (k-1, k) on side (k-1) % 2
            for j in range(k - 1 - 2, 0, -2):
                if crosses(pos[j], pos[j + 1], pos[k - 1], p):
                    ok = False
                    break
            if ok:
                pos[k] = p
                free.discard(p)
                yield from place(k + 1)
                free.add(p)

    for p in range(n):
        pos[1] = p
        free.discard(p)
        yield from place(2)
        free.add(p)


STAMP_MAX_N = 12


def stamp_foldings(n: int) -> int:
    """Foldings of a strip of n blank stamps: orbits of the labeled foldings
    under reversing the strip and turning the stack over (Burnside)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > STAMP_MAX_N:
        raise BudgetExceeded(f"n={n} exceeds the stamp-folding budget")
    # a folding is the stack order: order[i] = stamp at height i
    layouts = set()
    for pos in _foldings(n):
        order = [0] * n
        for stamp, p in enumerate(pos, start=1):
            order[p] = stamp
        layouts.add(tuple(order))
    fixed = 0
    for order in layouts:
        flipped = order[::-1]
        relabeled = tuple(n + 1 - s for s in order)
        both = relabeled[::-1]
        fixed += 1 + (flipped == order) + (relabeled == order) + (both == order)
    assert fixed % 4 == 0
    return fixed // 4


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def meander_growth_check(max_n: int) -> dict:
    """Roots M^(1/n) and the Catalan bracket C_n <= M <= C_n^2.

    Two readings of "M_{2n}" are reported: the 2n-th term of the open
    listing, and closed meanders with 2n crossings (the odd-position terms
    M_{2n-1}). Also records which pairs satisfy submultiplicativity.
    """
    open_terms = {k: meander_count(k) for k in range(1, 2 * max_n + 1)}
    report = {"rows": [], "submultiplicative_failures": []}
    for n in range(1, max_n + 1):
        c = catalan(n)
        even = open_terms[2 * n]
        closed = open_terms[2 * n - 1]
        report["rows"].append(
            {
                "n": n,
                "catalan": c,
                "M_2n": even,
                "closed_2n": closed,
                "root_M_2n": even ** (1 / n),
                "root_closed": closed ** (1 / n),
                "bracket_M_2n": c <= even <= c * c,
                "bracket_closed": c <= closed <= c * c,
            }
        )
    for a, b in product(range(1, max_n + 1), repeat=2):
        if a <= b and a + b <= max_n:
            lhs = open_terms[2 * (a + b)]
            rhs = open_terms[2 * a] * open_terms[2 * b]
            if lhs > rhs:
                report["submultiplicative_failures"].append((a, b, lhs, rhs))
    return report


# --- stored listings ------------------------------------------------------

STORED_HARD = {
    "A1231": ("projective planes of order n", 2, (1, 1, 1, 1, 0, 1, 1, 4, 0)),
    # the third term is printed as "1?"; it is stored as 1
    "A1676": (
        "differential structures on the n-sphere",
        1,
        (1, 1, 1, 1, 1, 1, 28, 2, 8, 6, 992, 1, 3, 2, 16256, 2),
    ),
    "A7299": ("Hadamard matrices of order 4n", 1, (1, 1, 1, 5, 3, 60, 487)),
    "A1116": ("lattice kissing numbers", 1, (2, 6, 12, 24, 40, 72, 126, 240, 272)),
}


def stored_hard_data() -> dict:
    """{id: (name, offset, terms)} for listings that are stored, not generated."""
    return dict(STORED_HARD)
