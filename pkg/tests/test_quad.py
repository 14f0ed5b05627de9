from fractions import Fraction

import pytest

from arith import (
    add,
    compare_to_rational,
    conjugate,
    from_coefficient,
    in_window,
    make_quad_irr,
    multiply,
    reciprocal,
    same_field,
    sign_of,
)
from utils.exceptions import DegenerateRadicand, FieldMismatch, NonPositiveRadicand

SQRT2 = make_quad_irr(0, 1, 2)
GOLDEN_CONJ = make_quad_irr(Fraction(-1, 2), 1, Fraction(5, 4))


def test_radicand_must_be_positive_non_square():
    with pytest.raises(DegenerateRadicand):
        make_quad_irr(0, 1, 4)
    with pytest.raises(DegenerateRadicand):
        make_quad_irr(1, -1, Fraction(9, 16))
    with pytest.raises(NonPositiveRadicand):
        make_quad_irr(0, 1, 0)
    with pytest.raises(NonPositiveRadicand):
        make_quad_irr(0, 1, -2)


def test_canonical_form_is_value_equality():
    assert from_coefficient(Fraction(-1, 2), Fraction(1, 2), 5) == GOLDEN_CONJ
    assert from_coefficient(0, -3, 2) == make_quad_irr(0, -1, 18)
    assert make_quad_irr(0, 1, 8) != make_quad_irr(0, 1, 2)


def test_sign_of():
    assert sign_of(make_quad_irr(1, -1, 2)) == -1
    assert sign_of(make_quad_irr(2, -1, 2)) == 1
    assert sign_of(make_quad_irr(-1, 1, 2)) == 1
    assert sign_of(make_quad_irr(-2, 1, 2)) == -1
    assert sign_of(-SQRT2) == -1


def test_compare_and_window():
    assert compare_to_rational(SQRT2, Fraction(141, 100)) == 1
    assert compare_to_rational(SQRT2, Fraction(142, 100)) == -1
    assert in_window(GOLDEN_CONJ, 0, 1)
    assert not in_window(conjugate(GOLDEN_CONJ), -1, 0)
    assert in_window(conjugate(GOLDEN_CONJ), None, -1)
    assert in_window(SQRT2, 1, None)


def test_shift_and_negate():
    assert SQRT2 + 1 == make_quad_irr(1, 1, 2)
    assert 1 + SQRT2 == make_quad_irr(1, 1, 2)
    assert SQRT2 - Fraction(1, 2) == make_quad_irr(Fraction(-1, 2), 1, 2)
    assert -make_quad_irr(1, 1, 2) == make_quad_irr(-1, -1, 2)


def test_field_arithmetic():
    one_plus = make_quad_irr(1, 1, 2)
    assert multiply(one_plus, conjugate(one_plus)) == -1
    assert multiply(SQRT2, make_quad_irr(0, 1, 8)) == 4
    assert multiply(SQRT2, 0) == 0
    assert add(SQRT2, make_quad_irr(0, 1, 8)) == make_quad_irr(0, 1, 18)
    assert add(SQRT2, -SQRT2) == 0
    assert reciprocal(one_plus) == make_quad_irr(-1, 1, 2)
    assert same_field(SQRT2, make_quad_irr(3, -1, Fraction(1, 2)))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        add(SQRT2, make_quad_irr(0, 1, 3))
    with pytest.raises(FieldMismatch):
        multiply(SQRT2, make_quad_irr(0, 1, 3))


def test_str():
    assert str(make_quad_irr(Fraction(-19, 14), 1, Fraction(837, 196))) == "-19/14 + sqrt(837/196)"
    assert str(-SQRT2) == "-sqrt(2)"
