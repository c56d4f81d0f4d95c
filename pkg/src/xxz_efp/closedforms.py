"""Exact evaluation of the factorized counting formulas: EFP ratio products,
alternating-sign-matrix counts, punctured plane-partition counts (both the
product form and the nonintersecting-path determinant), and the
thermodynamic-limit product.

Everything is big-integer / rational except thermo_limit, which is the single
floating-point surface of the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .linalg import RingMatrix, det_bareiss
from .rings import QQ

RATIO_FAMILIES = ("recurE--", "EFP++", "EFPee*", "EFPee")


def efp_ratio_closed(family: str, n: int, k: int) -> Fraction:
    """E(k-1)/E(k) for the four factorized families (the pseudo family's -q
    phase is handled by the caller; this is the rational part)."""
    if not 1 <= k <= n + (1 if family == "EFP++" else 0):
        raise ValueError(f"k={k} out of range for {family} at n={n}")
    f = math.factorial
    if family == "recurE--":
        return Fraction(f(2 * k - 2) * f(2 * k - 1) * f(2 * n + k) * f(n - k),
                        f(k - 1) * f(3 * k - 2) * f(2 * n - k + 1) * f(n + k - 1))
    if family == "EFP++":
        return Fraction(f(2 * k - 2) * f(2 * k - 1) * f(2 * n + k) * f(n - k + 1),
                        f(k - 1) * f(3 * k - 2) * f(2 * n - k + 1) * f(n + k))
    if family == "EFPee*":
        return Fraction(f(2 * k - 2) * f(2 * k - 1) * f(2 * n + k - 1) * f(n - k),
                        f(k - 1) * f(3 * k - 2) * f(2 * n - k) * f(n + k - 1))
    if family == "EFPee":
        return Fraction(f(2 * k - 2) * f(2 * k - 1) * f(2 * n + k - 1) * f(n - k),
                        f(k - 1) * f(3 * k - 3) * (3 * k - 1) * f(2 * n - k) * f(n + k - 1))
    raise ValueError(f"unknown family {family!r}")


def efp_value_closed(family: str, n: int, k: int) -> Fraction:
    """E(k) by telescoping the ratio product down from E(0) = 1 (rational
    part only for the pseudo family)."""
    out = Fraction(1)
    for j in range(1, k + 1):
        out /= efp_ratio_closed(family, n, j)
    return out


def asm_count(n: int) -> int:
    """Number of alternating sign matrices, prod (3j+1)!/(n+j)!."""
    if n < 1:
        raise ValueError("need n >= 1")
    out = Fraction(1)
    for j in range(n):
        out *= Fraction(math.factorial(3 * j + 1), math.factorial(n + j))
    assert out.denominator == 1
    return out.numerator


def aht_count(N: int) -> int:
    """Half-turn-symmetric alternating sign matrices of size N.

    Odd N: reciprocal of the stated product for the maximal EFP.
    Even N: telescoped product of the even-chain ratio formula.
    """
    if N < 1:
        raise ValueError("need N >= 1")
    if N == 1:
        return 1
    n = N // 2
    if N % 2:
        out = Fraction(1)
        for j in range(1, n + 1):
            out *= Fraction(
                math.factorial(2 * j - 1) ** 2 * math.factorial(2 * j) ** 2,
                math.factorial(j - 1) * math.factorial(j)
                * math.factorial(3 * j - 1) * math.factorial(3 * j))
        inv = 1 / out
    else:
        inv = 1 / efp_value_closed("EFPee*", n, n)
    assert inv.denominator == 1
    return inv.numerator


def binom(a: int, b: int) -> int:
    """Binomial with out-of-range indices giving 0 (the path-count matrix
    below silently relies on this)."""
    if b < 0 or b > a or a < 0:
        return 0
    return math.comb(a, b)


def path_count_entry(i: int, j: int) -> int:
    """Q_{i,j} = 2 C(i+j-2, 2j-i-2) + C(i+j-2, 2j-i-1)."""
    return 2 * binom(i + j - 2, 2 * j - i - 2) + binom(i + j - 2, 2 * j - i - 1)


def lgv_count(n: int, k: int) -> int:
    """det [Q_{i+k, j+k}], 1 <= i, j <= n-k: nonintersecting-path count of
    the k-punctured tilings."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    size = n - k
    if size == 0:
        return 1
    rows = [[Fraction(path_count_entry(i + k, j + k))
             for j in range(1, size + 1)] for i in range(1, size + 1)]
    det = det_bareiss(RingMatrix(QQ, rows))
    assert det.denominator == 1
    return det.numerator


def cssc_product(n: int, k: int) -> Fraction:
    """Product formula for the k-punctured cyclically symmetric
    self-complementary tilings of the size-2n hexagon; the running index of
    the product is the bound variable h = 1..n-k."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    f = math.factorial
    out = Fraction(1)
    for h in range(1, n - k + 1):
        out *= Fraction(
            f(h - 1) * f(h + 2 * k - 1) * f(3 * h + 3 * k - 2) ** 2,
            f(2 * h + k - 1) * f(2 * h + k - 2)
            * f(2 * h + 3 * k - 1) * f(2 * h + 3 * k - 2))
    return out


def cssc_ratio(n: int, k: int) -> Fraction:
    """CSSCPP(2n, k-1)/CSSCPP(2n, k); equals the rational part of the pseudo
    ratio formula."""
    f = math.factorial
    return Fraction(
        f(2 * k - 2) * f(2 * k - 1) * f(2 * n + k - 1) * f(n - k),
        f(k - 1) * f(3 * k - 3) * (3 * k - 1) * f(2 * n - k) * f(n + k - 1))


@dataclass
class LinkReport:
    n: int
    k: int
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self):
        return self.lhs == self.rhs


def pseudo_ratio_link(n: int, k: int) -> LinkReport:
    """|pseudo ratio| against the tiling-count ratio: the modulus of the
    stated -q * CSSCPP(2n,k-1)/CSSCPP(2n,k) is the plain count ratio."""
    lhs = abs(efp_ratio_closed("EFPee", n, k))
    rhs = Fraction(lgv_count(n, k - 1), lgv_count(n, k))
    return LinkReport(n=n, k=k, lhs=lhs, rhs=rhs)


def thermo_limit(k: int) -> float:
    """Large-N limit of the EFP: (sqrt(3)/2)^(3k^2) times the Gamma-function
    product over j = 1..k.  Double precision; the one float in the package."""
    if k < 0:
        raise ValueError("need k >= 0")
    out = (math.sqrt(3) / 2) ** (3 * k * k)
    for j in range(1, k + 1):
        out *= (math.gamma(j - 1 / 3) * math.gamma(j + 1 / 3)
                / (math.gamma(j - 1 / 2) * math.gamma(j + 1 / 2)))
    return out
