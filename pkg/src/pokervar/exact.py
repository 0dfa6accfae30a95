"""Exact rational arithmetic helpers and summary statistics.

Every probability, mean and variance in the package is a
:class:`fractions.Fraction`.  Decimal strings are produced only for display,
always from the exact value, with round-half-even at a fixed number of places.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

Rational = Fraction

PLACES = 6


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) as a Rational; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))


def as_fraction(value: Fraction | int | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    return Fraction(value)


def format_exact(value: Fraction) -> str:
    """``"p/q"`` in lowest terms (``"p/1"`` for integers)."""
    value = as_fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_exact(text: str) -> Fraction:
    return Fraction(text.strip())


def _round_half_even(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q % 2 == 1):
        q += 1
    return q


def _render_scaled(q: int, places: int) -> str:
    sign = "-" if q < 0 else ""
    digits = str(abs(q)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def format_decimal(value: Fraction, places: int = PLACES) -> str:
    """Render an exact value to ``places`` decimals, rounding half to even."""
    value = as_fraction(value)
    scaled = value * 10**places
    return _render_scaled(_round_half_even(scaled.numerator, scaled.denominator), places)


def format_sqrt(value: Fraction, places: int = PLACES) -> str:
    """Correctly rounded decimal rendering of ``sqrt(value)``."""
    value = as_fraction(value)
    if value < 0:
        raise ValueError("square root of a negative value")
    x = value * 10 ** (2 * places)
    a = isqrt(x.numerator // x.denominator)
    half = (Fraction(2 * a + 1, 2)) ** 2
    if x > half or (x == half and a % 2 == 1):
        a += 1
    return _render_scaled(a, places)


@dataclass(frozen=True)
class SummaryStats:
    """Mean and variance of a return, both exact."""

    mean: Fraction
    variance: Fraction

    def __post_init__(self):
        if self.variance < 0:
            raise ValueError(f"negative variance {self.variance}")

    @property
    def std_dev_approx(self) -> str:
        return format_sqrt(self.variance)

    def to_dict(self) -> dict:
        return {
            "mean": {"exact": format_exact(self.mean), "decimal": format_decimal(self.mean)},
            "variance": {
                "exact": format_exact(self.variance),
                "decimal": format_decimal(self.variance),
            },
            "std_dev": self.std_dev_approx,
        }


def sample_mean_stats(mean1: Fraction, var1: Fraction, cov12: Fraction, n: int) -> SummaryStats:
    """Mean and variance of ``(R_1 + ... + R_n) / n`` for an exchangeable sequence.

    The mean equals ``mean1``; the variance is ``var1/n + (1 - 1/n) * cov12``.
    """
    if n < 1:
        raise ValueError(f"number of runs must be positive, got {n}")
    mean1, var1, cov12 = as_fraction(mean1), as_fraction(var1), as_fraction(cov12)
    if var1 < 0:
        raise ValueError("single-run variance must be nonnegative")
    if cov12 < -var1:
        raise ValueError("covariance below -variance is impossible")
    return SummaryStats(mean1, var1 / n + (1 - Fraction(1, n)) * cov12)
