"""Exact integer sequences: binomials, Catalan numbers, Motzkin numbers.

Everything here is computed in arbitrary-precision integer arithmetic and
serves as ground truth for the numerical verification of the integral
representations in :mod:`catmot.catalog`.
"""

from __future__ import annotations

from functools import lru_cache

# Arbitrary-precision nonnegative integer count.  Python's int already is
# one; the alias marks intent in signatures.
ExactInteger = int


def binomial(n: int, k: int) -> ExactInteger:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k > n.

    Uses the multiplicative formula with an exact division at every step,
    so intermediates never exceed the final value times (k+1).
    """
    if n < 0 or k < 0:
        raise ValueError("binomial requires nonnegative arguments")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


@lru_cache(maxsize=None)
def catalan(n: int) -> ExactInteger:
    """Catalan number C(2n, n) / (n + 1); the division is always exact."""
    if n < 0:
        raise ValueError("catalan requires a nonnegative argument")
    central = binomial(2 * n, n)
    quotient, remainder = divmod(central, n + 1)
    if remainder:
        raise ArithmeticError(f"(n+1) does not divide C(2n,n) at n={n}")
    return quotient


@lru_cache(maxsize=None)
def motzkin(n: int) -> ExactInteger:
    """Motzkin number as the even-binomial sum over Catalan numbers:
    sum over k of C(n, 2k) * catalan(k)."""
    if n < 0:
        raise ValueError("motzkin requires a nonnegative argument")
    return sum(binomial(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def motzkin_oracle(n: int) -> ExactInteger:
    """Motzkin number via the integer convolution recurrence
    M(0) = 1, M(n+1) = M(n) + sum_{k<n} M(k) * M(n-1-k).

    Independent of :func:`motzkin`; used to cross-check it.
    """
    if n < 0:
        raise ValueError("motzkin_oracle requires a nonnegative argument")
    table = [1]
    for m in range(n):
        nxt = table[m] + sum(table[k] * table[m - 1 - k] for k in range(m))
        table.append(nxt)
    return table[n]
