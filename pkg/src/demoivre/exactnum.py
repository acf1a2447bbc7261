"""Exact integer/rational arithmetic and odds-probability conversions.

Python integers are arbitrary precision, so 32! and friends are exact by
construction; rationals ride on fractions.Fraction, which normalizes to
lowest terms with a positive denominator on every construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def factorial(n: int) -> int:
    """Exact n! for n >= 0."""
    if n < 0:
        raise ValueError("factorial requires n >= 0")
    return math.factorial(n)


def binomial_coefficient(n: int, k: int) -> int:
    """Exact C(n, k); 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError("binomial_coefficient requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class Odds:
    """A reduced for:against pair. Not both zero; stored coprime."""

    favor: int
    against: int

    def __post_init__(self):
        if self.favor < 0 or self.against < 0:
            raise ValueError("odds components must be non-negative")
        if self.favor == 0 and self.against == 0:
            raise ValueError("odds 0:0 are undefined")
        g = math.gcd(self.favor, self.against)
        if g > 1:
            object.__setattr__(self, "favor", self.favor // g)
            object.__setattr__(self, "against", self.against // g)

    def __str__(self):
        return f"{self.favor}:{self.against}"


def odds_from_probability(p: Fraction) -> Odds:
    """Reduced odds for an event of rational probability p in [0, 1].

    p = 0 and p = 1 yield 0:1 and 1:0 respectively.
    """
    p = Fraction(p)
    if p < 0 or p > 1:
        raise ValueError("probability must lie in [0, 1]")
    q = 1 - p
    return Odds(p.numerator * q.denominator, q.numerator * p.denominator)


def probability_from_odds(odds: Odds) -> Fraction:
    """Exact inverse of odds_from_probability: for/(for+against)."""
    return Fraction(odds.favor, odds.favor + odds.against)
