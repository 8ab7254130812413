"""Tests for the exact Laurent polynomial arithmetic."""

import pytest

from models.laurent import LaurentPoly, Unit


def h(k, i, power2=2):
    return LaurentPoly.variable(k, i, power2)


def test_zero_coefficients_are_dropped():
    poly = LaurentPoly(2, {(0, 0): 0, (2, 0): 3})
    assert poly.terms == {(2, 0): 3}
    assert LaurentPoly(2, {(0, 0): 0}).is_zero()


def test_wrong_exponent_length_rejected():
    with pytest.raises(ValueError):
        LaurentPoly(2, {(1,): 1})


def test_ring_operations():
    x, y = h(2, 1), h(2, 2)
    one = LaurentPoly.one(2)
    product = (one + x) * (one - y)
    assert product == one + x - y - x * y
    assert (x - x).is_zero()
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y


def test_mixed_variable_counts_rejected():
    with pytest.raises(ValueError):
        h(1, 1) + h(2, 1)


def test_half_integer_powers_multiply_to_integers():
    root = h(1, 1, 1)
    assert not root.is_integral()
    assert root * root == h(1, 1)
    assert (root * root).is_integral()


def test_text_rendering_orders_by_total_degree():
    x_inv, y_inv = h(2, 1, -2), h(2, 2, -2)
    poly = x_inv + y_inv - x_inv * y_inv
    assert poly.to_text() == "h1^-1 + h2^-1 - h1^-1*h2^-1"


@pytest.mark.parametrize("poly, expected", [
    (LaurentPoly.zero(1), "0"),
    (LaurentPoly.one(1), "1"),
    (h(1, 1) - LaurentPoly.one(1) + h(1, 1, -2), "h1 - 1 + h1^-1"),
    (LaurentPoly.monomial(1, (1,), -3), "-3*h1^(1/2)"),
    (LaurentPoly.monomial(2, (4, -6)), "h1^2*h2^-3"),
])
def test_to_text(poly, expected):
    assert poly.to_text() == expected


def test_json_is_lexicographic():
    poly = h(2, 1) + h(2, 2) - LaurentPoly.one(2)
    assert [item["exp2"] for item in poly.to_json()] == [[0, 0], [0, 2], [2, 0]]


def test_specialize_to_one_collapses_variables():
    x, y = h(2, 1), h(2, 2)
    poly = x * y + x - y
    assert poly.specialize_to_one([2]) == x * 2 - LaurentPoly.one(2)
    with pytest.raises(ValueError):
        poly.specialize_to_one([3])


def test_invert_and_merge_variables():
    poly = h(2, 1) - h(2, 2, -2)
    assert poly.invert_variables() == h(2, 1, -2) - h(2, 2)
    merged = poly.merge_variables(1, 2)
    assert merged.k == 3
    assert merged == LaurentPoly.monomial(3, (2, 2, 0)) - LaurentPoly.monomial(3, (0, 0, -2))


def test_embed_places_variables():
    poly = h(1, 1)
    assert poly.embed(3, 2) == h(3, 3)
    with pytest.raises(ValueError):
        poly.embed(1, 1)


def test_equal_up_to_unit_finds_sign_and_shift():
    x, y = h(2, 1), h(2, 2)
    one = LaurentPoly.one(2)
    base = x + y - one
    other = -(base.shift((2, -4)))
    unit = other.equal_up_to_unit(base)
    assert unit == Unit(-1, (2, -4))
    assert unit.to_text() == "-h1*h2^-2"


def test_equal_up_to_unit_rejects_different_shapes():
    x, y = h(2, 1), h(2, 2)
    one = LaurentPoly.one(2)
    assert (x + y).equal_up_to_unit(x - y) is None
    assert (x + y).equal_up_to_unit(x + y + one) is None
    assert LaurentPoly.zero(2).equal_up_to_unit(x) is None
    assert LaurentPoly.zero(2).equal_up_to_unit(LaurentPoly.zero(2)) == Unit(1, (0, 0))


def test_immutable():
    poly = LaurentPoly.one(1)
    with pytest.raises(AttributeError):
        poly.foo = 1
