from fractions import Fraction

import pytest

from arith import MobiusMap, make_quad_irr
from cf import (
    ABOVE_ONE,
    UNIT_INTERVAL,
    evaluate_general,
    evaluate_purely_periodic,
    evaluate_zero_periodic,
    mobius_fixed_point,
    zero_periodic_map,
)
from models import CFExpansion
from utils.exceptions import EmptyPeriod, NoRootInWindow, RationalFixedPoint, TwoRootsInWindow

SECOND_EXAMPLE = (16, 11, 1, 3, 2, 3, 1, 11, 16, 2)


def test_zero_periodic_examples():
    assert evaluate_zero_periodic((1, 2, 2, 3)) == make_quad_irr(Fraction(-19, 14), 1, Fraction(837, 196))
    assert evaluate_zero_periodic((1, 2, 2, 5)) == make_quad_irr(Fraction(-33, 14), 1, Fraction(1845, 196))
    assert evaluate_zero_periodic((2, 3, 1, 3, 2, 1)) == make_quad_irr(Fraction(-1, 2), 1, Fraction(39, 44))
    assert evaluate_zero_periodic((1,)) == make_quad_irr(Fraction(-1, 2), 1, Fraction(5, 4))


def test_zero_periodic_map_matches_equation():
    assert zero_periodic_map((1, 2, 2, 3)).fixed_point_equation() == (7, 19, -17)


def test_purely_periodic():
    assert evaluate_purely_periodic((1,)) == make_quad_irr(Fraction(1, 2), 1, Fraction(5, 4))
    assert evaluate_purely_periodic((2,)) == make_quad_irr(1, 1, 2)


def test_general():
    assert evaluate_general(CFExpansion(initial=(1,), repeating=(2,))) == make_quad_irr(0, 1, 2)
    assert evaluate_general(CFExpansion(initial=(0, 1), repeating=SECOND_EXAMPLE)) == \
        make_quad_irr(0, 1, Fraction(39, 44))
    assert evaluate_general(CFExpansion(repeating=(1,))) == evaluate_purely_periodic((1,))
    assert evaluate_general(CFExpansion(initial=(-2, 1, 1), repeating=(2,))) == make_quad_irr(0, -1, 2)


def test_finite_expansion_has_no_quadratic_value():
    with pytest.raises(EmptyPeriod):
        evaluate_general(CFExpansion(initial=(5,)))


def test_fixed_point_errors():
    with pytest.raises(RationalFixedPoint):
        mobius_fixed_point(MobiusMap(1, 1, 0, 1), UNIT_INTERVAL)
    with pytest.raises(RationalFixedPoint):
        mobius_fixed_point(MobiusMap(1, 2, 1, 0), ABOVE_ONE)
    with pytest.raises(NoRootInWindow):
        mobius_fixed_point(zero_periodic_map((1,)), ABOVE_ONE)
    with pytest.raises(TwoRootsInWindow):
        mobius_fixed_point(zero_periodic_map((1,)), (None, None))
