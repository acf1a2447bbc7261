import random
from fractions import Fraction

import pytest

from demoivre.series import (
    PowerSeries,
    compose_series,
    identity_series,
    multinomial_coefficient_terms,
    multiply_series,
    raise_series,
    revert_series,
    series_from_rationals,
    series_from_reals,
)


def repeated_multiplication(s, p, order):
    """Oracle: s^p by plain truncated polynomial products."""
    out = s.truncate(order)
    for _ in range(p - 1):
        out = multiply_series(out, s, order)
    return out


def random_rational_series(rng, order, nonzero_linear=False):
    coeffs = []
    for i in range(order):
        num = rng.randrange(-6, 7)
        if i == 0 and nonzero_linear:
            while num == 0:
                num = rng.randrange(-6, 7)
        coeffs.append(Fraction(num, rng.randrange(1, 5)))
    return series_from_rationals(coeffs)


def test_raise_monomial():
    s = series_from_rationals([1])
    assert raise_series(s, 3, 5).coefficients == tuple(Fraction(v) for v in (0, 0, 1, 0, 0))


def test_raise_quadratic_degree4_coefficient():
    # (ax + bx^2 + cx^3 + dx^4)^2: the x^4 coefficient collects ac twice and bb once
    a, b, c, d = Fraction(3), Fraction(5), Fraction(7), Fraction(11)
    s = series_from_rationals([a, b, c, d])
    sq = raise_series(s, 2, 4)
    assert sq.coefficient(4) == 2 * a * c + b * b
    assert sq.coefficient(2) == a * a
    assert sq.coefficient(3) == 2 * a * b


def test_raise_matches_repeated_multiplication():
    rng = random.Random(32)
    for _ in range(12):
        s = random_rational_series(rng, 8)
        assert raise_series(s, 3, 8).coefficients == repeated_multiplication(s, 3, 8).coefficients


def test_raise_matches_multiplication_all_small_powers():
    rng = random.Random(46)
    for p in range(1, 6):
        s = random_rational_series(rng, 10)
        assert raise_series(s, p, 10).coefficients == repeated_multiplication(s, p, 10).coefficients


def test_multinomial_terms_examples():
    assert multinomial_coefficient_terms(4, 2) == [((1, 3), 2), ((2, 2), 1)]
    assert multinomial_coefficient_terms(2, 2) == [((1, 1), 1)]
    assert multinomial_coefficient_terms(1, 2) == []


def test_multinomial_counts_sum_to_all_ones_expansion():
    # setting every letter to 1 turns the multiset counts into the x^m
    # coefficient of (x + x^2 + ... )^p
    for m, p in ((6, 3), (8, 4), (5, 2)):
        ones = series_from_rationals([1] * m)
        expanded = raise_series(ones, p, m)
        total = sum(count for _, count in multinomial_coefficient_terms(m, p))
        assert total == expanded.coefficient(m)


def test_revert_identity():
    s = series_from_rationals([1])
    assert revert_series(s, 4).coefficients == identity_series(4).coefficients


def test_revert_leading_coefficients():
    rng = random.Random(98)
    for _ in range(10):
        s = random_rational_series(rng, 5, nonzero_linear=True)
        t = revert_series(s, 5)
        a1, a2 = s.coefficient(1), s.coefficient(2)
        assert t.coefficient(1) == 1 / a1
        assert t.coefficient(2) == -a2 / a1**3


def test_revert_x_plus_x_squared():
    s = series_from_rationals([1, 1])
    t = revert_series(s, 6)
    assert compose_series(s, t, 6).coefficients == identity_series(6).coefficients


def test_compose_examples():
    g = series_from_rationals([1, 1])
    f = series_from_rationals([1])
    assert compose_series(f, g, 4).coefficients == g.truncate(4).coefficients
    f2 = series_from_rationals([0, 1])  # x^2
    assert compose_series(f2, g, 4).coefficients == tuple(Fraction(v) for v in (0, 1, 2, 1))


def test_reversion_roundtrip_exact_rationals():
    rng = random.Random(1730)
    for _ in range(25):
        s = random_rational_series(rng, 8, nonzero_linear=True)
        t = revert_series(s, 8)
        assert compose_series(s, t, 8).coefficients == identity_series(8).coefficients
    for order in (9, 10):
        s = random_rational_series(rng, order, nonzero_linear=True)
        t = revert_series(s, order)
        assert compose_series(s, t, order).coefficients == identity_series(order).coefficients


def test_double_reversion_is_identity_when_monic():
    rng = random.Random(5)
    for _ in range(10):
        s = random_rational_series(rng, 7)
        s = PowerSeries((Fraction(1),) + s.coefficients[1:])
        assert revert_series(revert_series(s, 7), 7).coefficients == s.coefficients


def test_real_mode_roundtrip_tolerance():
    rng = random.Random(12)
    for _ in range(10):
        coeffs = [rng.uniform(0.5, 2.0)] + [rng.uniform(-1, 1) for _ in range(7)]
        s = series_from_reals(coeffs)
        t = revert_series(s, 8)
        back = compose_series(s, t, 8)
        assert abs(back.coefficient(1) - 1.0) <= 1e-9
        for d in range(2, 9):
            assert abs(back.coefficient(d)) <= 1e-9


def test_revert_rejects_zero_linear_term():
    s = series_from_rationals([0, 1])
    with pytest.raises(ValueError):
        revert_series(s, 4)
