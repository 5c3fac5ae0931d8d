import random
from fractions import Fraction

import pytest

from hamrel import (
    ApproxCoeffVector,
    DomainError,
    ExactCoeffVector,
    HammockDims,
    InvalidVectorError,
    binomial_row,
    check_duality_identity,
    check_sum_complementarity,
    dual_coeffs,
    eval_nform,
    vector_from_json,
    vector_to_json,
)
from reference_tables import exact_5_3, exact_5_5


def test_binomial_row_values():
    assert binomial_row(15)[7] == 6435
    assert binomial_row(25)[5] == 53130
    assert binomial_row(0).values == (1,)


def test_binomial_row_symmetry_and_sum():
    for n in (1, 2, 7, 15, 25, 40):
        row = binomial_row(n)
        assert row.values == tuple(reversed(row.values))
        assert sum(row.values) == 2**n


def test_binomial_row_pascal_recurrence():
    for n in (2, 9, 30):
        prev, cur = binomial_row(n - 1), binomial_row(n)
        for k in range(1, n):
            assert cur[k] == prev[k - 1] + prev[k]


def test_binomial_row_rejects_negative():
    with pytest.raises(DomainError):
        binomial_row(-1)


def test_hammock_dims():
    dims = HammockDims(5, 3)
    assert dims.n == 15
    assert dims.dual() == HammockDims(3, 5)
    with pytest.raises(DomainError):
        HammockDims(0, 3)


class TestExactVectorValidation:
    def test_length(self):
        with pytest.raises(InvalidVectorError):
            ExactCoeffVector(3, (0, 0, 1))

    def test_binomial_ceiling(self):
        with pytest.raises(InvalidVectorError):
            ExactCoeffVector(2, (0, 3, 1))

    def test_negative(self):
        with pytest.raises(InvalidVectorError):
            ExactCoeffVector(2, (0, -1, 1))

    def test_dims_mismatch(self):
        with pytest.raises(InvalidVectorError):
            ExactCoeffVector(4, (0, 0, 0, 0, 1), HammockDims(5, 3))


def test_eval_endpoints():
    vec = exact_5_3()
    assert eval_nform(vec, 0) == 0
    assert eval_nform(vec, 1) == 1
    assert eval_nform(vec, 0.0) == 0.0
    assert eval_nform(vec, 1.0) == 1.0


def test_eval_exact_at_half():
    # all basis terms equal (1/2)^15, so h(1/2) = sum(N_k) / 2^15
    assert eval_nform(exact_5_3(), Fraction(1, 2)) == Fraction(9073, 32768)


def test_eval_binomial_row_is_one():
    n = 12
    vec = ExactCoeffVector(n, binomial_row(n).values)
    for p in (Fraction(1, 3), Fraction(2, 7), Fraction(9, 10)):
        assert eval_nform(vec, p) == 1
    assert eval_nform(vec, 0.375) == pytest.approx(1.0, rel=1e-12)


def test_eval_domain_error():
    vec = exact_5_3()
    for p in (-0.1, 1.1, Fraction(3, 2)):
        with pytest.raises(DomainError):
            eval_nform(vec, p)


def test_eval_monotone_in_coefficients():
    vec = exact_5_3()
    base = eval_nform(vec, Fraction(2, 5))
    for k in (3, 8, 15):
        bumped = list(vec.coeffs)
        if bumped[k] + 1 > binomial_row(vec.n)[k]:
            continue
        bumped[k] += 1
        assert eval_nform(ExactCoeffVector(vec.n, tuple(bumped)), Fraction(2, 5)) >= base


def test_dual_coeffs_5_3():
    dual = dual_coeffs(exact_5_3())
    assert dual.coeffs[3] == 455 - 439 == 16
    assert dual.coeffs[4] == 1365 - 1187 == 178
    assert dual.dims == HammockDims(3, 5)


def test_dual_is_involution():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 12)
        row = binomial_row(n)
        coeffs = tuple(rng.randint(0, row[k]) for k in range(n + 1))
        vec = ExactCoeffVector(n, coeffs)
        assert dual_coeffs(dual_coeffs(vec)).coeffs == vec.coeffs


def test_dual_of_series_is_parallel():
    n = 6
    series = ExactCoeffVector(n, (0,) * n + (1,))
    dual = dual_coeffs(series)
    row = binomial_row(n)
    assert dual.coeffs == (0,) + tuple(row[k] for k in range(1, n + 1))


def test_self_dual_5_5():
    vec = exact_5_5()
    assert dual_coeffs(vec).coeffs == vec.coeffs


def test_duality_identity():
    h = exact_5_3()
    hd = dual_coeffs(h)
    assert check_duality_identity(h, hd, Fraction(1, 3))
    assert check_duality_identity(exact_5_5(), exact_5_5(), Fraction(1, 2))


def test_duality_identity_fails_for_mismatched_pair():
    n = 4
    full = ExactCoeffVector(n, binomial_row(n).values)
    almost_zero = ExactCoeffVector(n, (0, 0, 0, 0, 1))
    assert not check_duality_identity(full, almost_zero, Fraction(1, 2))


def test_sum_complementarity():
    h = exact_5_3()
    hd = dual_coeffs(h)
    assert h.total == 9073 and hd.total == 32768 - 9073
    assert check_sum_complementarity(h, hd)
    n = 5
    assert check_sum_complementarity(
        ExactCoeffVector(n, binomial_row(n).values),
        ExactCoeffVector(n, (0,) * (n + 1)),
    )
    assert exact_5_5().total * 2 == 2**25


def test_json_round_trip_exact():
    vec = exact_5_3()
    text = vector_to_json(vec)
    back = vector_from_json(text)
    assert isinstance(back, ExactCoeffVector)
    assert back.coeffs == vec.coeffs and back.n == vec.n
    assert '"kind": "exact"' in text or '"kind":"exact"' in text.replace(" ", "")


def test_json_round_trip_approx():
    vec = ApproxCoeffVector(3, (0.0, 0.1, 560.7142857142857, 1.0))
    back = vector_from_json(vector_to_json(vec))
    assert isinstance(back, ApproxCoeffVector)
    assert back.coeffs == vec.coeffs


def test_json_rejects_garbage():
    with pytest.raises(InvalidVectorError):
        vector_from_json("{not json")
    with pytest.raises(InvalidVectorError):
        vector_from_json('{"n": 2, "coeffs": ["0", "1", "1"], "kind": "weird"}')


def test_approx_rounded_half_away():
    vec = ApproxCoeffVector(3, (0.5, 1.4, -0.5, 2.5))
    assert vec.rounded() == (1, 1, -1, 3)
