import random
from fractions import Fraction

import pytest

from hamrel import (
    DomainError,
    ExactCoeffVector,
    binomial_envelope,
    binomial_row,
    coefficient_profile,
    dual_coeffs,
)
from reference_tables import exact_5_3


def test_profile_interpolates_knots():
    f = coefficient_profile(exact_5_3())
    assert f(11) == 1187
    assert f(5) == 21
    assert f(0) == 0


def test_profile_chord_midpoint():
    f = coefficient_profile(exact_5_3())
    assert f(Fraction(23, 2)) == Fraction(1187 + 439, 2) == 813


def test_profile_interpolates_random_vector():
    rng = random.Random(11)
    n = 9
    row = binomial_row(n)
    coeffs = tuple(rng.randint(0, row[k]) for k in range(n + 1))
    f = coefficient_profile(ExactCoeffVector(n, coeffs))
    for k in range(1, n + 1):
        assert f(k) == coeffs[k]


def test_envelope_symmetric_chord():
    b = binomial_envelope(15)
    assert b(Fraction(15, 2)) == 6435
    assert b(0) == 1
    assert b(15) == 1


def test_domain_error():
    f = coefficient_profile(exact_5_3())
    with pytest.raises(DomainError):
        f(-0.5)
    with pytest.raises(DomainError):
        f(15.5)


def test_integral_5_3():
    f = coefficient_profile(exact_5_3())
    assert f.integral() == 9073 - Fraction(1, 2)


def test_integral_complementary_pair():
    h = exact_5_3()
    hd = dual_coeffs(h)
    total = coefficient_profile(h).integral() + coefficient_profile(hd).integral()
    assert total == 2**15 - 1


def test_integral_envelope():
    # the chord rule halves both endpoint values, hence 2^n - 1 rather than 2^n
    assert binomial_envelope(15).integral() == 2**15 - 1


def test_integral_zero_vector():
    f = coefficient_profile(ExactCoeffVector(4, (0, 0, 0, 0, 0)))
    assert f.integral() == 0


def test_samples_grid():
    f = coefficient_profile(exact_5_3())
    pts = f.samples(31)
    assert len(pts) == 31
    assert pts[0] == (0.0, 0.0)
    assert pts[-1][0] == pytest.approx(15.0)
    assert pts[-1][1] == pytest.approx(1.0)
    with pytest.raises(DomainError):
        f.samples(1)
