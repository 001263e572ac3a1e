import pytest

from stockbraid.laurent import LaurentPoly, neg_a_power, poly_from_json, poly_to_json


def test_zero_coefficients_never_stored():
    p = LaurentPoly({2: 1, -2: 0})
    assert p.terms == {2: 1}
    assert LaurentPoly([(1, 3), (1, -3)]).is_zero()


def test_equality_is_term_set_equality():
    assert LaurentPoly({0: 1}) == LaurentPoly.one()
    assert LaurentPoly({0: 2}) == 2
    assert LaurentPoly() == 0
    assert LaurentPoly({1: 1}) != LaurentPoly({-1: 1})


def test_arithmetic():
    a = LaurentPoly({1: 1, -1: 1})  # A + A^-1
    square = a * a
    assert square.terms == {2: 1, 0: 2, -2: 1}
    assert (square - square).is_zero()
    assert (-a).terms == {1: -1, -1: -1}
    assert (a * 3).terms == {1: 3, -1: 3}
    assert (a ** 0) == LaurentPoly.one()
    assert a ** 2 == square


def test_shifted_and_mirrored():
    p = LaurentPoly({2: -1, -2: -1})
    assert p.shifted(-3).terms == {-1: -1, -5: -1}
    assert p.shifted(1, -1).terms == {3: 1, -1: 1}
    assert p.mirrored() == p
    assert LaurentPoly({3: 1}).mirrored().terms == {-3: 1}


def test_neg_a_power_signed_monomial():
    assert neg_a_power(3).terms == {3: -1}
    assert neg_a_power(-3).terms == {-3: -1}
    assert neg_a_power(0) == LaurentPoly.one()
    assert neg_a_power(4).terms == {4: 1}
    assert neg_a_power(-6).terms == {-6: 1}


def test_negative_pow_rejected():
    with pytest.raises(ValueError):
        LaurentPoly({1: 1, 0: 1}) ** -1


def test_evaluate():
    p = LaurentPoly({2: -1, -2: -1})
    assert abs(p.evaluate(1j) - 2) < 1e-12  # -(i^2) - (i^-2) = 2
    assert abs(LaurentPoly.one().evaluate(0.3 + 0.4j) - 1) < 1e-12


def test_exponent_range():
    p = LaurentPoly({5: 1, -7: 2})
    assert p.min_exponent() == -7
    assert p.max_exponent() == 5
    with pytest.raises(ValueError):
        LaurentPoly().min_exponent()


def test_json_round_trip():
    p = LaurentPoly({4: -1, -4: -1})
    doc = poly_to_json(p, variable="A")
    assert doc == {"variable": "A", "terms": [[-4, -1], [4, -1]]}
    assert poly_from_json(doc) == p
    tagged = poly_to_json(p, variable="t^{1/4}", convention="paper")
    assert tagged["convention"] == "paper"
