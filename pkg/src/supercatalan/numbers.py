"""Exact counting formulas: binomials, Catalan and super-Catalan numbers.

Every value is returned as a :class:`fractions.Fraction`. Integers are the
denominator-1 case; the only non-integral super-Catalan value is at
``m = n = 0``, where the closed form evaluates to 1/2.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

ExactNumber = Fraction


def binomial(n: int, k: int) -> Fraction:
    if n < 0:
        raise ValueError(f"binomial: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))


def catalan(n: int) -> Fraction:
    if n < 0:
        raise ValueError(f"catalan: n must be >= 0, got {n}")
    return Fraction(comb(2 * n, n), n + 1)


def super_catalan(m: int, n: int) -> Fraction:
    """C(2m,m) C(2n,n) / (2 C(m+n,m)).

    Order 0 gives half the central binomials, order 1 the Catalan numbers
    and order 2 the counts of aligned cubic trees (3, 2, 3, 6, 14, 36, ...).
    """
    if m < 0 or n < 0:
        raise ValueError(f"super_catalan: need m, n >= 0, got ({m}, {n})")
    return Fraction(comb(2 * m, m) * comb(2 * n, n), 2 * comb(m + n, m))


def recurrence_terms(m: int, n: int) -> dict[int, Fraction]:
    """Summands 2^(n-m-2k) C(n-m,2k) u_k of the recurrence, keyed by k."""
    if m < 0 or n < m:
        raise ValueError(f"recurrence needs 0 <= m <= n, got m={m}, n={n}")
    d = n - m
    return {k: Fraction(2 ** (d - 2 * k) * comb(d, 2 * k)) * super_catalan(m, k)
            for k in range(d // 2 + 1)}


def recurrence_rhs(m: int, n: int) -> Fraction:
    return sum(recurrence_terms(m, n).values(), Fraction(0))


def hidden_class_count(n: int, k: int) -> Fraction:
    """Predicted number of n-ctrees with exactly k hidden nodes.

    This is also the number of (n, k)-configurations.
    """
    if n < 2:
        raise ValueError(f"hidden_class_count needs n >= 2, got {n}")
    if k < 0 or 2 * k > n - 2:
        return Fraction(0)
    return Fraction(comb(n - 2, 2 * k) * 2 ** (n - 2 - 2 * k)) * super_catalan(2, k)


def ctree_count(n: int, rooted: bool) -> Fraction:
    if n < 0:
        raise ValueError(f"ctree_count: n must be >= 0, got {n}")
    total = 6 * catalan(n)
    return total if rooted else total / (n + 2)
