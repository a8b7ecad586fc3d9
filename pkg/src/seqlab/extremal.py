"""Extremal weight enumerators of doubly-even self-dual codes and extremal
theta series of even unimodular lattices.

Both live in a ring generated by a degree-8 and a degree-24 element. For
weight enumerators we set x = 1 and write z = y^4, so f = 1 + 14z + z^2 and
the Golay enumerator g has degree 6 in z; the theta series use the same
index convention with z = q^2.
"""
from __future__ import annotations

from fractions import Fraction

from .bignum import binomial
from .errors import BudgetExceeded, SingularSystem
from .series import BivariatePoly, QSeries, convolve, e8_theta, leech_theta, qseries_eta24

HAMMING_F = BivariatePoly.from_terms(8, {0: 1, 4: 14, 8: 1})
GOLAY_G = BivariatePoly.from_terms(24, {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1})

_F_Z = [1, 14, 1]
_G_Z = [1, 0, 759, 2576, 759, 0, 1]
# (f^3 - g) / 42 = z (1 - z)^4
_H_Z = [0, 1, -4, 6, -4, 1]

MAX_LINEAR_SOLVE_M = 40


def solve_exact(matrix: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Solve a square integer system exactly.

    Bareiss fraction-free elimination keeps every intermediate an integer;
    only the final back substitution uses Fractions.
    """
    n = len(matrix)
    m = [list(row) + [b] for row, b in zip(matrix, rhs)]
    prev = 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            raise SingularSystem(f"no pivot in column {k}")
        m[k], m[pivot] = m[pivot], m[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n]) - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / m[i][i]
    return x


def _power(poly: list[int], k: int, length: int | None = None) -> list[int]:
    result, base = [1], list(poly)
    while k:
        if k & 1:
            result = convolve(result, base, length)
        base = convolve(base, base, length)
        k >>= 1
    return result


def _check_length(n: int) -> None:
    if n < 8 or n % 8:
        raise ValueError("length must be a positive multiple of 8")


def extremal_weight_enumerator(n: int) -> BivariatePoly:
    """The unique Gleason combination with constant term 1 whose y^4, ...,
    y^(4 floor(n/24)) coefficients vanish, solved as a linear system."""
    _check_length(n)
    mu = n // 24
    if mu > MAX_LINEAR_SOLVE_M:
        raise BudgetExceeded(f"linear solve at n={n} exceeds the desk budget")
    k = n // 8
    basis = [convolve(_power(_F_Z, k - 3 * i), _power(_G_Z, i)) for i in range(mu + 1)]
    matrix = [[basis[i][j] for i in range(mu + 1)] for j in range(mu + 1)]
    rhs = [1] + [0] * mu
    a = solve_exact(matrix, rhs)
    w = [Fraction(0)] * (n // 4 + 1)
    for ai, b in zip(a, basis):
        for j, c in enumerate(b):
            w[j] += ai * c
    poly = BivariatePoly.from_terms(n, {4 * j: c for j, c in enumerate(w)})
    if not poly.is_integral():
        raise ArithmeticError(f"extremal enumerator at n={n} is not integral")
    return poly.as_integers()


def extremal_coefficients(n: int, count: int) -> list[int]:
    """First ``count`` coefficients (in z = y^4) of the extremal enumerator.

    Uses the basis f^(n/8 - 3i) h^i with h = (f^3 - g)/42 = z(1 - z)^4, which
    spans the same space as the Gleason basis but is unitriangular, so the
    vanishing conditions are met by forward substitution in integers.
    """
    _check_length(n)
    mu = n // 24
    length = max(count, mu + 1)
    k = n // 8
    f3 = _power(_F_Z, 3, length)
    f_pow = _power(_F_Z, k - 3 * mu, length)  # f^(k - 3 mu), grows by f^3 below
    columns: list = [None] * (mu + 1)
    # build columns from the highest i (smallest f power) downwards
    h_powers = [[1]]
    for _ in range(mu):
        h_powers.append(convolve(h_powers[-1], _H_Z, length))
    for i in range(mu, -1, -1):
        columns[i] = convolve(f_pow, h_powers[i], length)
        if i:
            f_pow = convolve(f_pow, f3, length)
    b = [1] + [0] * mu
    for j in range(1, mu + 1):
        b[j] = -sum(b[i] * _at(columns[i], j) for i in range(j))
    w = [0] * length
    for bi, col in zip(b, columns):
        if bi:
            for j, c in enumerate(col):
                w[j] += bi * c
    return w[:count]


def _at(poly: list[int], j: int) -> int:
    return poly[j] if j < len(poly) else 0


def extremal_leading_coeffs(m: int, method: str = "triangular") -> tuple[int, int]:
    """(number of words of weight 4m+4, of weight 4m+8) at length 24m."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return 1, 1
    n = 24 * m
    if method == "linear":
        w = extremal_weight_enumerator(n)
        return w.coeff(4 * m + 4), w.coeff(4 * m + 8)
    if method != "triangular":
        raise ValueError("method must be 'linear' or 'triangular'")
    coeffs = extremal_coefficients(n, m + 3)
    return coeffs[m + 1], coeffs[m + 2]


def leading_coeff_closed_form(m: int) -> int:
    """C(24m, 5) C(5m-2, m-1) / C(4m+4, 5)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    num = binomial(24 * m, 5) * binomial(5 * m - 2, m - 1)
    den = binomial(4 * m + 4, 5)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"closed form is not integral at m={m}")
    return q


def find_negative_next_coeff(search) -> int | None:
    """First length n = 24m (m from ``search``, in order) whose
    next-to-minimal extremal coefficient is negative."""
    for m in search:
        if extremal_leading_coeffs(m)[1] < 0:
            return 24 * m
    return None


# --- lattices --------------------------------------------------------------

def extremal_theta(n: int, order: int) -> QSeries:
    """Extremal theta series in dimension n (a multiple of 8) to q^(2*order)."""
    _check_length(n)
    mu = n // 24
    if order < mu + 1:
        raise ValueError(f"order must be at least {mu + 1} to show the leading term")
    f = e8_theta(order)
    g = leech_theta(order)
    k = n // 8
    basis = [(f ** (k - 3 * i)) * (g**i) for i in range(mu + 1)]
    matrix = [[basis[i][j] for i in range(mu + 1)] for j in range(mu + 1)]
    a = solve_exact(matrix, [1] + [0] * mu)
    coeffs = [sum(ai * b[j] for ai, b in zip(a, basis)) for j in range(order + 1)]
    if any(Fraction(c).denominator != 1 for c in coeffs):
        raise ArithmeticError(f"extremal theta series at n={n} is not integral")
    return QSeries(int(c) for c in coeffs)


def shortest_vector_count(n: int) -> int:
    """Coefficient of q^(n/12 + 2) in the extremal theta series, n = 24m."""
    mu = n // 24
    return extremal_theta(n, mu + 1)[mu + 1]


def ramanujan_numbers(count: int) -> list[int]:
    """tau(1), tau(2), ...: coefficients of q^2 prod (1 - q^(2m))^24."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return list(qseries_eta24(count - 1).coeffs)


def table_fig3(max_m: int = 8) -> list[tuple[int, int]]:
    return [(24 * m, extremal_leading_coeffs(m)[0]) for m in range(max_m + 1)]


def table_fig4(max_m: int = 8) -> list[tuple[int, int]]:
    return [(24 * m, extremal_leading_coeffs(m)[1]) for m in range(max_m + 1)]


def table_fig5(max_m: int = 5) -> list[tuple[int, int]]:
    return [(0, 1)] + [(24 * m, shortest_vector_count(24 * m)) for m in range(1, max_m + 1)]
