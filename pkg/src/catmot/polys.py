"""Cancellation-safe polynomial building blocks.

The Motzkin-from-Catalan transforms repeatedly need

    (1/2) * ((1 + t)^n + (1 - t)^n)            even-binomial sum in t^2
    phi_m(t) = ((1+t)^m + (1-t)^m - 2) / m     even powers only, j >= 1
    psi_m(x) = ((1+2x)^m - 1) / m              all powers, j >= 1

near t = 0 (or x = 0) the closed forms subtract nearly equal quantities;
here every one of them is evaluated as a polynomial with exact rational
coefficients converted to float once, so small arguments accumulate
same-sign terms only.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import binomial


def horner(coeffs: tuple[float, ...], s: float) -> float:
    """Evaluate sum(coeffs[i] * s**i) by Horner's scheme."""
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * s + c
    return acc


@lru_cache(maxsize=None)
def even_binomial_coeffs(n: int) -> tuple[float, ...]:
    """Coefficients of (1/2)*((1+t)^n + (1-t)^n) as a polynomial in s = t^2:
    C(n, 0), C(n, 2), ..., C(n, 2*floor(n/2))."""
    return tuple(float(binomial(n, 2 * j)) for j in range(n // 2 + 1))


def half_power_sum(n: int, s: float) -> float:
    """(1/2)*((1+t)^n + (1-t)^n) as a function of s = t^2 (s >= 0)."""
    return horner(even_binomial_coeffs(n), s)


class PhiEvaluator:
    """phi_m(t) = ((1+t)^m + (1-t)^m - 2)/m as an even polynomial in t.

    ``coefficients`` holds the exact rationals 2*C(m, 2j)/m for j >= 1;
    evaluation sums same-sign terms in s = t^2, so there is no cancellation
    for real t.
    """

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("phi_m is defined for m >= 1")
        self.m = m
        self.coefficients: tuple[Fraction, ...] = tuple(
            Fraction(2 * binomial(m, 2 * j), m) for j in range(1, m // 2 + 1)
        )
        self._float_coeffs = tuple(float(c) for c in self.coefficients)

    def __call__(self, t: float) -> float:
        s = t * t
        # s * (c_1 + c_2 s + ...) keeps the j >= 1 offset explicit
        return s * horner(self._float_coeffs, s)


@lru_cache(maxsize=None)
def phi_diff_coeffs(n: int) -> tuple[Fraction, ...]:
    """Exact coefficients d_j of phi_{n+2} - phi_{n+1} as a polynomial in
    s = t^2, j running from 1:  d_j = 2*C(n+2,2j)/(n+2) - 2*C(n+1,2j)/(n+1).

    All d_j are nonnegative and d_1 == 1, which makes
    (phi_{n+2} - phi_{n+1}) / t^2  -> 1 as t -> 0.
    """
    top = (n + 2) // 2
    return tuple(
        Fraction(2 * binomial(n + 2, 2 * j), n + 2)
        - Fraction(2 * binomial(n + 1, 2 * j), n + 1)
        for j in range(1, top + 1)
    )


@lru_cache(maxsize=None)
def phi_ratio_coeffs(n: int) -> tuple[float, ...]:
    """Float coefficients of (phi_{n+2}(t) - phi_{n+1}(t)) / t^2 in s = t^2."""
    return tuple(float(d) for d in phi_diff_coeffs(n))


def phi_diff_over_square(n: int, s: float) -> float:
    """(phi_{n+2} - phi_{n+1}) / t^2 evaluated at s = t^2.

    Continuous at s = 0 with value 1 (the d_1 coefficient), which is the
    analytic limit used when the transform's f vanishes.
    """
    return horner(phi_ratio_coeffs(n), s)


@lru_cache(maxsize=None)
def psi_diff_coeffs(n: int) -> tuple[Fraction, ...]:
    """Exact coefficients e_j of psi_{n+2} - psi_{n+1} in u = 2x, for
    j = 2 .. n+2:  e_j = C(n+2,j)/(n+2) - C(n+1,j)/(n+1).

    The j = 1 coefficient is identically zero and is dropped, which is what
    removes the catastrophic cancellation of the two-term closed form at
    small x.
    """
    return tuple(
        Fraction(binomial(n + 2, j), n + 2) - Fraction(binomial(n + 1, j), n + 1)
        for j in range(2, n + 3)
    )


@lru_cache(maxsize=None)
def psi_diff_float_coeffs(n: int) -> tuple[float, ...]:
    return tuple(float(e) for e in psi_diff_coeffs(n))


def psi_difference(n: int, x: float) -> float:
    """psi_{n+2}(x) - psi_{n+1}(x) with psi_m(x) = ((1+2x)^m - 1)/m,
    evaluated as u^2 * (e_2 + e_3 u + ...) with u = 2x."""
    if n < 0:
        raise ValueError("psi_difference requires n >= 0")
    u = 2.0 * x
    return (u * u) * horner(psi_diff_float_coeffs(n), u)


def psi_difference_over_square(n: int, x: float) -> float:
    """(psi_{n+2}(x) - psi_{n+1}(x)) / x^2, continuous at x = 0 (value 2)."""
    # u^2 / x^2 == 4 exactly in binary arithmetic, so divide it out up front
    return 4.0 * horner(psi_diff_float_coeffs(n), 2.0 * x)


def psi_difference_naive(n: int, x: float) -> float:
    """Two-term closed form of the psi difference; kept only to demonstrate
    its cancellation failure near x = 0."""
    u = 1.0 + 2.0 * x
    return (u ** (n + 2) - 1.0) / (n + 2) - (u ** (n + 1) - 1.0) / (n + 1)
