"""Generating functions for Arndt-Carlitz compositions.

Let F(z, u) = sum over Arndt-Carlitz compositions with an even number of
parts of z^(sum of parts) * u^(last part).  Appending one admissible slice
(a pair a > b with a different from the previous last part) maps a marker
monomial u^j to

    z^3*u/((1-z)(1-z^2*u)) - z^j * (zu - (zu)^j)/(1 - zu),

which gives the slice recurrence

    a_{k+1}(z,u) = z^3*u/((1-z)(1-z^2*u)) * a_k(z,1)
                   - zu/(1-zu) * a_k(z,z) + 1/(1-zu) * a_k(z, z^2*u),
    a_1(z,u)     = z^3*u/((1-z)(1-z^2*u)),

where a_k counts the compositions with exactly 2k parts.  Summing over k
and iterating yields the linear functional equation

    F(z,u) = alpha(z,u) * (F(z,1) + 1) + beta(z,u) * F(z,z),

with coefficient functions

    alpha(z,u) = 1/(1-z) * sum_{k>=1} z^(2k+1)*u / (1 - z^(2k)*u)
                           / prod_{l=1}^{k-1} (1 - z^(2l-1)*u),
    beta(z,u)  = - sum_{k>=1} z^(2k-1)*u / prod_{l=1}^{k} (1 - z^(2l-1)*u).

Specializing u to 1 and to z gives a 2x2 linear system for F(z,1) and
F(z,z), solved by

    F(z,1) = Num(z) / D(z),        F(z,z) = alpha(z,z) / D(z),
    Num    = alpha(z,1) + alpha(z,z)*beta(z,1) - alpha(z,1)*beta(z,z),
    D      = 1 - alpha(z,1) - beta(z,z) + beta(z,z)*alpha(z,1)
               - alpha(z,z)*beta(z,1).

F(z,1) counts the even-part compositions.  Odd-part compositions arise
from the even ones by attaching one extra part different from the last
(plus the single-part compositions), so their series is

    z/(1-z) + F(z,1)*z/(1-z) - F(z,z),

F(z,z) being exactly the correction for the forbidden repeat of the last
part (each even-part composition contributes z^(n + last part), which the
brute-force oracle confirms).

Two independent computation paths are provided: the closed forms above
(production path) and direct iteration of the slice recurrence
(cross-check path, slower).  Their agreement, plus agreement with
exhaustive enumeration, is the module's correctness argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import BivariateTruncatedSeries, TruncatedSeries

VARIANTS = ("one", "z")

DEFAULT_ORDER = 64


class SeriesConsistencyError(ArithmeticError):
    """A counting series came out non-integral or negative: arithmetic bug."""


def _validate_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


def _validate_order(order: int) -> None:
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")


@lru_cache(maxsize=64)
def alpha_series(variant: str, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """alpha(z,1) (variant "one") or alpha(z,z) (variant "z"), truncated.

    alpha(z,1) = z/(1-z) * sum_k z^(2k)  /(1-z^(2k))   / prod_{l<k}(1-z^(2l-1))
    alpha(z,z) = z/(1-z) * sum_k z^(2k+1)/(1-z^(2k+1)) / prod_{l<k}(1-z^(2l))

    The k-th summand has valuation 2k+1 resp. 2k+2 after the prefactor, so
    the infinite sum is cut at the first k whose term cannot touch the
    truncation order.
    """
    _validate_variant(variant)
    _validate_order(order)
    total = TruncatedSeries.zero(order)
    prod = TruncatedSeries.one(order)
    k = 1
    while True:
        if variant == "one":
            if 2 * k + 1 > order:
                break
            if k > 1:
                prod = prod * TruncatedSeries.geometric(2 * k - 3, order)
            term = TruncatedSeries.geometric(2 * k, order).shift(2 * k) * prod
        else:
            if 2 * k + 2 > order:
                break
            if k > 1:
                prod = prod * TruncatedSeries.geometric(2 * k - 2, order)
            term = TruncatedSeries.geometric(2 * k + 1, order).shift(2 * k + 1) * prod
        total = total + term
        k += 1
    prefactor = TruncatedSeries.geometric(1, order).shift(1)  # z/(1-z)
    return prefactor * total


@lru_cache(maxsize=64)
def beta_series(variant: str, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """beta(z,1) (variant "one") or beta(z,z) (variant "z"), truncated.

    beta(z,1) = - sum_k z^(2k-1) / prod_{l=1}^{k} (1-z^(2l-1))
    beta(z,z) = - sum_k z^(2k)   / prod_{l=1}^{k} (1-z^(2l))

    Valuation of the k-th term: 2k-1 resp. 2k.  All coefficients <= 0.
    """
    _validate_variant(variant)
    _validate_order(order)
    total = TruncatedSeries.zero(order)
    prod = TruncatedSeries.one(order)
    k = 1
    while True:
        if variant == "one":
            if 2 * k - 1 > order:
                break
            prod = prod * TruncatedSeries.geometric(2 * k - 1, order)
            term = prod.shift(2 * k - 1)
        else:
            if 2 * k > order:
                break
            prod = prod * TruncatedSeries.geometric(2 * k, order)
            term = prod.shift(2 * k)
        total = total + term
        k += 1
    return -total


@lru_cache(maxsize=64)
def numerator_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Num = alpha(z,1) + alpha(z,z)*beta(z,1) - alpha(z,1)*beta(z,z)."""
    _validate_order(order)
    a1 = alpha_series("one", order)
    az = alpha_series("z", order)
    b1 = beta_series("one", order)
    bz = beta_series("z", order)
    return a1 + az * b1 - a1 * bz


@lru_cache(maxsize=64)
def denominator_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """D = 1 - alpha(z,1) - beta(z,z) + beta(z,z)*alpha(z,1) - alpha(z,z)*beta(z,1)."""
    _validate_order(order)
    a1 = alpha_series("one", order)
    az = alpha_series("z", order)
    b1 = beta_series("one", order)
    bz = beta_series("z", order)
    return TruncatedSeries.one(order) - a1 - bz + bz * a1 - az * b1


def _require_counting_series(s: TruncatedSeries, name: str) -> TruncatedSeries:
    for n, c in enumerate(s.coeffs):
        if c.denominator != 1 or c < 0:
            raise SeriesConsistencyError(
                f"{name} coefficient of z^{n} is {c}; counting series must have "
                f"nonnegative integer coefficients"
            )
    return s


@lru_cache(maxsize=64)
def even_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """F(z,1): number of Arndt-Carlitz compositions of n with evenly many parts."""
    s = numerator_series(order) * denominator_series(order).reciprocal()
    return _require_counting_series(s, "even_series")


@lru_cache(maxsize=64)
def fzz_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """F(z,z) = alpha(z,z)/D: even-part compositions weighted by z^(last part)."""
    _validate_order(order)
    s = alpha_series("z", order) * denominator_series(order).reciprocal()
    return _require_counting_series(s, "fzz_series")


@lru_cache(maxsize=64)
def odd_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Number of Arndt-Carlitz compositions of n with oddly many parts.

    z/(1-z) + F(z,1)*z/(1-z) - F(z,z): attach a part different from the
    last to an even-part composition, plus the one-part compositions.
    """
    _validate_order(order)
    z_over = TruncatedSeries.geometric(1, order).shift(1)
    s = z_over + even_series(order) * z_over - fzz_series(order)
    return _require_counting_series(s, "odd_series")


@lru_cache(maxsize=64)
def total_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """All Arndt-Carlitz compositions of n, no parity restriction."""
    return even_series(order) + odd_series(order)


@dataclass(frozen=True)
class SeriesBundle:
    """The four counting series at one truncation order."""

    even: TruncatedSeries
    fzz: TruncatedSeries
    odd: TruncatedSeries
    total: TruncatedSeries
    order: int


def series_bundle(order: int = DEFAULT_ORDER) -> SeriesBundle:
    """Closed-form bundle (production path)."""
    return SeriesBundle(
        even=even_series(order),
        fzz=fzz_series(order),
        odd=odd_series(order),
        total=total_series(order),
        order=order,
    )


def _slice_kernel(order: int) -> BivariateTruncatedSeries:
    """z^3*u/((1-z)(1-z^2*u)); also the first slice a_1(z,u)."""
    zu2 = BivariateTruncatedSeries.geometric_zu(2, order).mul_monomial(0, 1)
    return zu2.mul_univariate(TruncatedSeries.geometric(1, order).shift(3))


@lru_cache(maxsize=16)
def slice_iteration_series(order: int = DEFAULT_ORDER) -> BivariateTruncatedSeries:
    """F(z,u) by direct iteration of the slice recurrence (cross-check path).

    Each slice contributes at least z^3 (the smallest admissible pair is
    2 > 1), so a_k has z-valuation 3k and the loop ends once the truncated
    a_k vanishes.
    """
    _validate_order(order)
    kernel = _slice_kernel(order)
    zu_geom = BivariateTruncatedSeries.geometric_zu(1, order)  # 1/(1-zu)
    w = zu_geom.mul_monomial(1, 1)                             # zu/(1-zu)
    a = kernel
    total = a
    while not a.is_zero():
        at_one = a.substitute_u("one")
        at_z = a.substitute_u("z")
        rescaled = a.substitute_u("z2u")
        a = (
            kernel.mul_univariate(at_one)
            - w.mul_univariate(at_z)
            + zu_geom * rescaled
        )
        total = total + a
    return total


def slice_bundle(order: int = DEFAULT_ORDER) -> SeriesBundle:
    """Counting bundle computed from the slice recurrence (cross-check path)."""
    f = slice_iteration_series(order)
    even = _require_counting_series(f.substitute_u("one"), "slice even")
    fzz = _require_counting_series(f.substitute_u("z"), "slice fzz")
    z_over = TruncatedSeries.geometric(1, order).shift(1)
    odd = _require_counting_series(z_over + even * z_over - fzz, "slice odd")
    return SeriesBundle(even=even, fzz=fzz, odd=odd, total=even + odd, order=order)
