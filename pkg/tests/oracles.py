"""Naive reference implementations used to freeze derived values.

Nothing here imports seqlab: each routine takes the most literal route
(exhaustive enumeration, trial division, repeated multiplication) so that
agreement with the package is evidence rather than repetition.
Run ``python3 tests/oracles.py`` to rewrite tests/data/frozen_oracles.json.
"""
from __future__ import annotations

import json
from collections import deque
from itertools import combinations, permutations, product
from pathlib import Path

FROZEN = Path(__file__).parent / "data" / "frozen_oracles.json"


def binomial_by_multiplication(n, k):
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= n - i
        den *= i + 1
    return num // den


def is_prime_trial(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_count_trial(x):
    flags = [True] * (x + 1)
    flags[0:2] = [False, False][: x + 1]
    for p in range(2, int(x**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = [False] * len(flags[p * p :: p])
    return sum(flags)


def divisor_loop(n):
    divs = [d for d in range(1, n + 1) if n % d == 0]
    from math import gcd

    phi = sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
    return sum(divs), len(divs), phi, sum(d**3 for d in divs)


def ramanujan_by_product(count):
    """Coefficients of q prod (1 - q^m)^24, by repeated polynomial products."""
    poly = [1] + [0] * count
    for m in range(1, count + 1):
        for _ in range(24):
            poly = [poly[i] - (poly[i - m] if i >= m else 0) for i in range(count + 1)]
    return poly[:count]


def tree_heights_by_parent_maps(n):
    """Sum of depths over all rooted labeled trees on n nodes, divided by n.

    A rooted tree is a parent map: root r, every other node points to a
    parent, no cycles.
    """
    total = 0
    nodes = range(n)
    for root in nodes:
        others = [v for v in nodes if v != root]
        for parents in product(nodes, repeat=n - 1):
            par = dict(zip(others, parents))
            depth_sum, ok = 0, True
            for v in others:
                d, u, seen = 0, v, set()
                while u != root:
                    if u in seen:
                        ok = False
                        break
                    seen.add(u)
                    u = par[u]
                    d += 1
                if not ok:
                    break
                depth_sum += d
            if ok:
                total += depth_sum
    return total // n


def alternating_permutations(n):
    """Permutations with p1 > p2 < p3 > ... (down-up)."""
    count = 0
    for p in permutations(range(n)):
        if all((p[i] > p[i + 1]) == (i % 2 == 0) for i in range(n - 1)):
            count += 1
    return count


def maxdet01_all_matrices(n):
    def det(m):
        if len(m) == 1:
            return m[0][0]
        return sum((-1) ** j * m[0][j] * det([r[:j] + r[j + 1 :] for r in m[1:]]) for j in range(len(m)))

    best = 0
    for bits in product((0, 1), repeat=n * n):
        m = [list(bits[i * n : (i + 1) * n]) for i in range(n)]
        best = max(best, det(m))
    return best


def reduced_latin_all(n):
    count = 0
    first = tuple(range(n))
    rows = [p for p in permutations(range(n))]
    for rest in product(rows, repeat=n - 1):
        square = [first, *rest]
        if any(square[i][0] != i for i in range(n)):
            continue
        if all(len({square[i][j] for i in range(n)}) == n for j in range(n)):
            count += 1
    return count


def monotone_all(n):
    points = list(product((0, 1), repeat=n))
    below = [[i for i, q in enumerate(points) if all(a <= b for a, b in zip(q, p))] for p in points]
    count = 0
    for values in product((0, 1), repeat=len(points)):
        if all(values[q] <= values[p] for p in range(len(points)) for q in below[p]):
            count += 1
    return count


def pancake_bfs(n):
    start = tuple(range(n))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for k in range(2, n + 1):
            q = p[:k][::-1] + p[k:]
            if q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    return max(dist.values())


def _all_noncrossing(points):
    """All perfect matchings of points with no two arcs interleaved."""
    out = []

    def rec(left, pairs):
        if not left:
            out.append(pairs)
            return
        a = left[0]
        for b in left[1:]:
            new = (a, b)
            if any(x < a < y < b or a < x < b < y for x, y in pairs):
                continue
            rec([v for v in left if v not in new], pairs + [new])

    rec(list(points), [])
    return out


def closed_meanders(n):
    pts = list(range(2 * n))
    top = _all_noncrossing(pts)
    count = 0
    for up in top:
        for lo in top:
            pu = {a: b for x in up for a, b in (x, x[::-1])}
            pl = {a: b for x in lo for a, b in (x, x[::-1])}
            p, steps = 0, 0
            while True:
                p = pl[pu[p]]
                steps += 2
                if p == 0:
                    break
            if steps == 2 * n:
                count += 1
    return count


def _valid_stack(order):
    """order[h] = stamp at height h. Perforation k joins stamps k, k+1;
    odd k on one side, even on the other; same-side perforations may not
    interleave."""
    n = len(order)
    pos = {s: h for h, s in enumerate(order)}
    for side in (0, 1):
        arcs = [tuple(sorted((pos[k], pos[k + 1]))) for k in range(1, n) if k % 2 == side]
        for (a, b), (c, d) in combinations(arcs, 2):
            if a < c < b < d or c < a < d < b:
                return False
    return True


def stamp_foldings_by_orbits(n):
    seen, orbits = set(), 0
    for order in permutations(range(1, n + 1)):
        if order in seen or not _valid_stack(order):
            continue
        images = {order, order[::-1], tuple(n + 1 - s for s in order), tuple(n + 1 - s for s in order[::-1])}
        seen |= images
        orbits += 1
    return orbits


def labeled_stamp_foldings(n):
    return sum(1 for order in permutations(range(1, n + 1)) if _valid_stack(order))


def tchouka_winners_by_game_tree(n):
    """Boards (hole 1 first) with n stones in holes 1..n from which some
    sequence of moves, each ending in hole 0, clears the board."""

    def wins(board):
        if not any(board):
            return True
        for h in range(1, len(board) + 1):
            k = board[h - 1]
            if k == h:
                nb = list(board)
                nb[h - 1] = 0
                for j in range(h - 1):
                    nb[j] += 1
                if wins(tuple(nb)):
                    return True
        return False

    winners = []
    for bars in combinations(range(2 * n - 1), n - 1):
        cuts = (-1, *bars, 2 * n - 1)
        board = tuple(cuts[i + 1] - cuts[i] - 1 for i in range(n))
        if wins(board):
            winners.append("".join(str(v) for v in reversed(board)).lstrip("0") or "0")
    return winners


def t_by_crossing_off(max_k):
    """Literal sieve on a Python list."""
    col = list(range(1, max_k * max_k + 2))
    tops = [col[0]]
    for n in range(2, max_k + 1):
        col = [v for i, v in enumerate(col) if i % n]
        tops.append(col[0])
    return tops


def zeckendorf_greedy(n):
    fibs = [1, 2]
    while fibs[-1] <= n:
        fibs.append(fibs[-1] + fibs[-2])
    # index of fibs[i] is i + 2 (F_2 = 1, F_3 = 2)
    out = []
    for i in range(len(fibs) - 1, -1, -1):
        if fibs[i] <= n:
            out.append(i + 2)
            n -= fibs[i]
    return out


def a36917_by_fractions(count):
    from fractions import Fraction

    a = [Fraction(1), Fraction(8)]
    for n in range(2, count):
        a.append((16 * (n - Fraction(1, 2)) * (2 * n * n - 2 * n + 1) * a[n - 1] - 256 * (n - 1) ** 3 * a[n - 2]) / n**3)
    return [int(x) for x in a[:count]]


def loeschian_pairs(N):
    return any(a * a + a * b + b * b == N for a in range(N + 1) for b in range(N + 1))


def mod5_by_trial(limit):
    out = []
    for c in range(1, limit + 1):
        m, ok, p = c, True, 2
        while p * p <= m:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e % 2 and p % 5 in (2, 3):
                ok = False
            p += 1
        if m > 1 and m % 5 in (2, 3):
            ok = False
        if ok:
            out.append(c)
    return out


def conway_by_dict(bound):
    a = {1: 1, 2: 1}
    for n in range(3, bound + 1):
        a[n] = a[a[n - 1]] + a[n - a[n - 1]]
    return a


def build() -> dict:
    conway = conway_by_dict(1 << 16)
    a5229 = {1: 1, 2: 1}
    for n in range(3, 10**4 + 1):
        a5229[n] = a5229[a5229[n - 2]] + a5229[n - a5229[n - 2]]
    rec = [1]
    for n in range(1, 30):
        rec.append(rec[-1] // n if rec[-1] % n == 0 else rec[-1] * n)
    return {
        "binomial_24_5": binomial_by_multiplication(24, 5),
        "pascal_rows_60": [[binomial_by_multiplication(n, k) for k in range(n + 1)] for n in range(61)],
        "prime_count_1e6": prime_count_trial(10**6),
        "is_prime_9737333": is_prime_trial(9737333),
        "arith_6": list(divisor_loop(6)),
        "arith_1_to_60": [list(divisor_loop(n)) for n in range(1, 61)],
        "e8_q8": 240 * divisor_loop(4)[3],
        "tau_20": ramanujan_by_product(20),
        "tree_heights_1_7": [tree_heights_by_parent_maps(n) for n in range(1, 8)],
        "alternating_1_8": [alternating_permutations(n) for n in range(1, 9)],
        "maxdet01_1_4": [maxdet01_all_matrices(n) for n in range(1, 5)],
        "latin_reduced_1_4": [reduced_latin_all(n) for n in range(1, 5)],
        "monotone_raw_0_4": [monotone_all(n) for n in range(0, 5)],
        "pancake_1_8": [pancake_bfs(n) for n in range(1, 9)],
        "closed_meanders_1_5": [closed_meanders(n) for n in range(1, 6)],
        "labeled_foldings_1_8": [labeled_stamp_foldings(n) for n in range(1, 9)],
        "stamp_foldings_1_8": [stamp_foldings_by_orbits(n) for n in range(1, 9)],
        "tchouka_winners_1_8": [tchouka_winners_by_game_tree(n) for n in range(1, 9)],
        "t_sieve_200": t_by_crossing_off(200),
        "zeckendorf_10000": zeckendorf_greedy(10**4),
        "a36917_40": a36917_by_fractions(40),
        "loeschian_0_60": [loeschian_pairs(N) for N in range(61)],
        "mod5_200": mod5_by_trial(200),
        "conway_threshold_100": max(n for n in range(1, 101) if abs(conway[n] / n - 0.5) > 0.05),
        "conway_powers_of_two": [conway[1 << k] for k in range(1, 17)],
        "a5229_10000": a5229[10**4],
        "recaman_divide_30": rec[29],
        "square_row_index_6": [i for d in range(3) for i in range(d, -1, -1)][:6],
    }


if __name__ == "__main__":
    FROZEN.parent.mkdir(exist_ok=True)
    FROZEN.write_text(json.dumps(build(), indent=1) + "\n")
    print(f"wrote {FROZEN}")
