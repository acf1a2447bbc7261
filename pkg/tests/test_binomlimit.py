import math
from fractions import Fraction

import pytest

from demoivre.binomlimit import (
    CentralBand,
    TrialSpec,
    demoivre_term,
    exact_central_probability,
    gaussian_sample_size_estimate,
    limit_central_probability,
    limit_tail_probability,
    remark1_fraction,
    sample_size,
    simulate_band,
    stirling_log_factorial,
)

HALF = Fraction(1, 2)


def enumerate_band_probability(n, p, c):
    """Oracle: walk every outcome count with Pascal-row coefficients."""
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    half_width = c * math.sqrt(n) / 2
    total = Fraction(0)
    p = Fraction(p)
    for k, ways in enumerate(row):
        if abs(k - n * p) <= half_width:
            total += ways * p**k * (1 - p) ** (n - k)
    return total


def test_two_coin_band():
    assert exact_central_probability(TrialSpec(2, HALF), 1) == HALF


def test_four_coin_band_enumeration():
    # all 16 outcomes: k in {1,2,3} stays within half-width 1
    assert exact_central_probability(TrialSpec(4, HALF), 1) == Fraction(14, 16)
    assert exact_central_probability(TrialSpec(4, HALF), 1) == enumerate_band_probability(4, HALF, 1)


def test_band_matches_enumeration_oracle():
    for n in (3, 7, 12, 30):
        for c in (0.5, 1.0, 2.0):
            spec = TrialSpec(n, Fraction(2, 5))
            assert exact_central_probability(spec, c) == enumerate_band_probability(n, Fraction(2, 5), c)


def test_large_band_near_limit():
    value = float(exact_central_probability(TrialSpec(3600, HALF), 1))
    assert abs(value - 0.6827) < 0.01


def test_band_monotone_in_c_and_saturates():
    spec = TrialSpec(50, HALF)
    values = [exact_central_probability(spec, c) for c in (0.25, 0.5, 1.0, 2.0, 4.0)]
    assert values == sorted(values)
    for n in (4, 16, 64, 100):  # perfect squares: c = sqrt(n) is exact
        assert exact_central_probability(TrialSpec(n, HALF), math.sqrt(n)) == 1


def test_band_convergence_decreasing():
    limit = 0.682688
    errors = [
        abs(float(exact_central_probability(TrialSpec(n, HALF), 1)) - limit)
        for n in (100, 400, 1600, 6400)
    ]
    assert all(a > b for a, b in zip(errors, errors[1:]))


def test_float_path_tracks_rational_path():
    # the compensated-summation route must agree with the exact one at the
    # rational cutoff scale
    exact = float(exact_central_probability(TrialSpec(4096, HALF), 1))
    big = exact_central_probability(TrialSpec(4098, HALF), 1)
    assert isinstance(big, float)
    assert abs(big - exact) < 5e-3


def test_demoivre_term_center():
    assert demoivre_term(100, 0) == pytest.approx(2 / math.sqrt(200 * math.pi), rel=1e-15)
    assert demoivre_term(100, 0) == pytest.approx(0.079788, abs=1e-6)


def test_demoivre_term_against_exact_center():
    for n, bound in ((100, 0.01), (10_000, 0.001)):
        exact = math.comb(n, n // 2) / 2**n
        approx = demoivre_term(n, 0)
        assert abs(approx - exact) / exact < bound


def test_demoivre_term_riemann_sum_consistency():
    c = 1.0
    previous = None
    for n in (400, 1600, 6400):
        half = int(c * math.sqrt(n) / 2)
        total = demoivre_term(n, 0) + 2 * sum(demoivre_term(n, l) for l in range(1, half + 1))
        err = abs(total - limit_central_probability(c))
        assert err <= 2 / math.sqrt(n)
        if previous is not None:
            assert err < previous
        previous = err


def test_stirling_form_tracks_exact_log_factorial():
    for n in (10, 100, 1000):
        exact = math.lgamma(n + 1)
        assert abs(stirling_log_factorial(n) - exact) < 1 / (12 * n) + 1e-12
    # the central-term prefactor is the fully reduced Stirling expression
    n = 10_000
    reduced = math.exp(stirling_log_factorial(n) - 2 * stirling_log_factorial(n / 2) - n * math.log(2))
    assert reduced == pytest.approx(2 / math.sqrt(2 * math.pi * n), rel=1e-9)


def test_limit_values_against_erf_oracle():
    for c in (0.5, 1.0, 2.0, 3.0):
        oracle = math.erf(c / math.sqrt(2))  # P(|Z| <= c) for standard normal
        assert limit_central_probability(c) == pytest.approx(oracle, abs=1e-10)
    assert limit_central_probability(1.0) == pytest.approx(0.682688, abs=1e-5)
    assert limit_central_probability(2.0) == pytest.approx(0.954500, abs=1e-5)
    assert limit_central_probability(1e-8) < 1e-7


def test_limit_band_plus_tail_is_one():
    for c in (0.3, 1.0, 2.5):
        assert abs(limit_central_probability(c) + limit_tail_probability(c) - 1.0) < 1e-10


def test_remark1_fractions():
    assert remark1_fraction(3600) == Fraction(1, 120)
    # historical printings give "the 260th part" for 14,400; the arithmetic
    # says 240, and that is what is asserted
    assert remark1_fraction(14_400) == Fraction(1, 240)
    assert remark1_fraction(1_000_000) == Fraction(1, 2000)


def test_remark1_rejects_non_square():
    with pytest.raises(ValueError):
        remark1_fraction(3601)


def scan_smallest_sample_size(p, c, alpha, limit=10_000):
    """Oracle: exhaustive scan with the Pascal-row band enumerator."""
    p, c, alpha = Fraction(p), Fraction(c), Fraction(alpha)
    row = [1]
    for n in range(1, limit + 1):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        total = Fraction(0)
        for k, ways in enumerate(row):
            if abs(Fraction(k, n) - p) <= c:
                total += ways * p**k * (1 - p) ** (n - k)
        if total >= 1 - alpha:
            return n
    raise AssertionError("scan limit reached")


def test_sample_size_trivial_single_trial():
    assert sample_size(HALF, HALF, Fraction(1, 2)) == 1


def test_sample_size_matches_scan_oracle():
    result = sample_size(HALF, Fraction(1, 20), Fraction(1, 20))
    assert result == scan_smallest_sample_size(HALF, Fraction(1, 20), Fraction(1, 20))
    assert result == 371  # frozen from the oracle


def test_sample_size_asymmetric_case():
    p, c, alpha = Fraction(3, 10), Fraction(1, 10), Fraction(1, 10)
    assert sample_size(p, c, alpha) == scan_smallest_sample_size(p, c, alpha)


def test_sample_size_halving_c_increases_n():
    for p in (HALF, Fraction(3, 10)):
        for alpha in (Fraction(1, 10), Fraction(1, 4)):
            wide = sample_size(p, Fraction(1, 5), alpha)
            narrow = sample_size(p, Fraction(1, 10), alpha)
            assert narrow > wide


def test_sample_size_crossing_property():
    from demoivre.binomlimit import _band_probability_exact_frequency

    for p, c, alpha in ((HALF, Fraction(1, 20), Fraction(1, 20)),
                        (Fraction(3, 10), Fraction(1, 10), Fraction(1, 10))):
        n = sample_size(p, c, alpha)
        assert _band_probability_exact_frequency(n, p, c) >= 1 - alpha
        if n > 1:
            assert _band_probability_exact_frequency(n - 1, p, c) < 1 - alpha


def test_gaussian_estimate_scale():
    est = gaussian_sample_size_estimate(0.5, 0.05, 0.05)
    assert 300 < est < 500


def test_simulate_band_trivial_cover():
    assert simulate_band(TrialSpec(1, HALF), 2.0, 50, seed=9) == 1.0


def test_simulate_band_concentration_and_determinism():
    spec = TrialSpec(3600, HALF)
    first = simulate_band(spec, 1.0, 10_000, seed=1733)
    assert 0.67 <= first <= 0.695
    assert simulate_band(spec, 1.0, 10_000, seed=1733) == first


def test_simulate_band_worker_invariance():
    spec = TrialSpec(900, HALF)
    baseline = simulate_band(spec, 1.0, 9999, seed=42)
    for workers in (1, 2, 4):
        assert simulate_band(spec, 1.0, 9999, seed=42, workers=workers) == baseline


def test_trial_spec_and_band_validation():
    with pytest.raises(ValueError):
        TrialSpec(0, HALF)
    with pytest.raises(ValueError):
        TrialSpec(10, Fraction(1))
    with pytest.raises(ValueError):
        CentralBand.for_trials(0, 100)
