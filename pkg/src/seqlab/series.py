"""Exact homogeneous bivariate polynomials and truncated q-series.

QSeries index ``m`` stands for the exponent ``q**(2*m)``: every series we
need comes from an even lattice, so odd powers never occur.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bignum import arith_functions, binomial


def convolve(a: Sequence, b: Sequence, length: int | None = None) -> list:
    """Cauchy product of coefficient lists, optionally truncated to ``length``."""
    if not a or not b:
        return []
    n = len(a) + len(b) - 1 if length is None else min(length, len(a) + len(b) - 1)
    out = [0] * n
    for i, x in enumerate(a):
        if i >= n or not x:
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] += x * b[j]
    return out


@dataclass(frozen=True)
class BivariatePoly:
    """Homogeneous polynomial sum_j coeffs[j] * x**(degree-j) * y**j."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a homogeneous polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls) -> BivariatePoly:
        return cls((1,))

    @classmethod
    def from_terms(cls, degree: int, terms: dict[int, int]) -> BivariatePoly:
        """Build from {power of y: coefficient}."""
        c = [0] * (degree + 1)
        for j, v in terms.items():
            c[j] = v
        return cls(c)

    def __mul__(self, other):
        if isinstance(other, BivariatePoly):
            return poly_mul(self, other)
        return BivariatePoly(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def __add__(self, other: BivariatePoly) -> BivariatePoly:
        if other.degree != self.degree:
            raise ValueError("cannot add homogeneous polynomials of different degree")
        return BivariatePoly(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: BivariatePoly) -> BivariatePoly:
        return self + other * -1

    def __pow__(self, k: int) -> BivariatePoly:
        result, base = BivariatePoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def coeff(self, power_of_y: int):
        if 0 <= power_of_y <= self.degree:
            return self.coeffs[power_of_y]
        return 0

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def as_integers(self) -> BivariatePoly:
        if not self.is_integral():
            raise ValueError("polynomial has non-integral coefficients")
        return BivariatePoly(int(c) for c in self.coeffs)

    def substitute_sum_difference(self) -> BivariatePoly:
        """W(x + y, x - y), the unnormalized MacWilliams transform."""
        n = self.degree
        result = [0] * (n + 1)
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            # (x+y)^(n-j) (x-y)^j
            left = [binomial(n - j, i) for i in range(n - j + 1)]
            right = [binomial(j, i) * (-1) ** i for i in range(j + 1)]
            for i, v in enumerate(convolve(left, right)):
                result[i] += c * v
        return BivariatePoly(result)

    def is_macwilliams_invariant(self) -> bool:
        """W((x+y)/sqrt2, (x-y)/sqrt2) == W(x, y), checked in exact rationals."""
        if self.degree % 2:
            return False
        scale = Fraction(1, 2 ** (self.degree // 2))
        return all(
            scale * a == b
            for a, b in zip(self.substitute_sum_difference().coeffs, self.coeffs)
        )


def poly_mul(p: BivariatePoly, q: BivariatePoly) -> BivariatePoly:
    return BivariatePoly(convolve(p.coeffs, q.coeffs))


@dataclass(frozen=True)
class QSeries:
    """Power series in q**2 truncated after the coefficient of q**(2*order)."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a QSeries keeps at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int):
        return self.coeffs[m]

    def _align(self, other: QSeries) -> int:
        return min(self.order, other.order) + 1

    def __add__(self, other: QSeries) -> QSeries:
        n = self._align(other)
        return QSeries(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    def __sub__(self, other: QSeries) -> QSeries:
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return qseries_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> QSeries:
        return QSeries(c * a for a in self.coeffs)

    def shift(self, k: int) -> QSeries:
        """Multiply by q**(2k), keeping the same truncation order."""
        return QSeries(([0] * k + list(self.coeffs))[: self.order + 1])

    def __pow__(self, k: int) -> QSeries:
        return qseries_pow(self, k)


def qseries_mul(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order) + 1
    return QSeries(convolve(a.coeffs, b.coeffs, n))


def qseries_pow(a: QSeries, k: int) -> QSeries:
    if k < 0:
        raise ValueError("negative powers are not supported")
    result = QSeries([1] + [0] * a.order)
    base = a
    while k:
        if k & 1:
            result = qseries_mul(result, base)
        base = qseries_mul(base, base)
        k >>= 1
    return result


def qseries_eta24(order: int) -> QSeries:
    """prod_{m>=1} (1 - q**(2m))**24 through q**(2*order)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [1] + [0] * order
    for m in range(1, order + 1):
        # multiply by (1 - z^m) twenty-four times, in place, high index first
        for _ in range(24):
            for i in range(order, m - 1, -1):
                coeffs[i] -= coeffs[i - m]
    return QSeries(coeffs)


def e8_theta(order: int) -> QSeries:
    if order < 0:
        raise ValueError("order must be >= 0")
    return QSeries([1] + [240 * arith_functions(m)[3] for m in range(1, order + 1)])


def leech_theta(order: int) -> QSeries:
    """E8**3 - 720 q**2 prod (1 - q**(2m))**24."""
    f = e8_theta(order)
    return f**3 - qseries_eta24(order).shift(1).scale(720)
