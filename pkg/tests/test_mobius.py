from fractions import Fraction

import pytest

from arith import IDENTITY, RECIPROCAL, MobiusMap, compose, make_quad_irr, mobius_apply
from utils.exceptions import SingularMap


def test_compose_with_identity():
    m = MobiusMap(7, 17, 24, 5)
    assert compose(IDENTITY, m) == m
    assert compose(m, IDENTITY) == m
    assert compose(RECIPROCAL, RECIPROCAL) == IDENTITY


def test_singular_map():
    with pytest.raises(SingularMap):
        MobiusMap(1, 2, 2, 4)


def test_apply():
    one_plus = make_quad_irr(1, 1, 2)
    assert mobius_apply(RECIPROCAL, one_plus) == make_quad_irr(-1, 1, 2)
    assert mobius_apply(MobiusMap(1, 1, 0, 1), one_plus) == make_quad_irr(2, 1, 2)
    x = make_quad_irr(Fraction(1, 3), -1, 5)
    m, n = MobiusMap(2, 1, 1, 1), MobiusMap(3, 1, 1, 0)
    assert mobius_apply(compose(m, n), x) == mobius_apply(m, mobius_apply(n, x))


def test_fixed_point_equation():
    # t -> (5t + 17) / (7t + 24)
    assert MobiusMap(5, 17, 7, 24).fixed_point_equation() == (7, 19, -17)
