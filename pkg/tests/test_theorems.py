from fractions import Fraction

import pytest

from cf import (
    congruence_check,
    discriminant,
    discriminant_poly_in_cn,
    epsilon,
    fractional_part_2a,
    is_palindromic_prefix,
    quadratic_equation,
    theorem1_report,
    theorem2_report,
)
from models import CaseFlag
from utils.exceptions import EmptyPeriod, InvalidDigit


def test_first_example():
    report = theorem1_report((1, 2, 2, 3))
    assert report.epsilon == Fraction(2, 7)
    assert report.two_a == Fraction(-19, 7)
    assert report.frac_two_a == Fraction(2, 7)
    assert report.case_flag is CaseFlag.p_ge_q
    assert not report.palindromic
    assert not report.congruence_holds
    assert not report.epsilon_zero
    assert quadratic_equation((1, 2, 2, 3)) == (7, 19, -17)


def test_epsilon_ignores_last_digit():
    assert epsilon((1, 2, 2, 5)) == Fraction(2, 7)
    assert theorem1_report((1, 2, 2, 5)).two_a == Fraction(-33, 7)
    assert discriminant((1, 2, 2, 5)) == 1845


def test_second_example():
    report = theorem1_report((2, 3, 1, 3, 2, 1))
    assert report.epsilon == 0
    assert report.two_a == -1
    assert report.congruence_holds
    assert theorem2_report((2, 3, 1, 3, 2, 1)) == (True, True, True)
    assert quadratic_equation((2, 3, 1, 3, 2, 1)) == (77, 77, -49)
    assert discriminant((2, 3, 1, 3, 2, 1)) == 21021


def test_fractional_part_lower_case():
    frac, case = fractional_part_2a((2, 1, 1))
    assert (frac, case) == (Fraction(2, 3), CaseFlag.p_lt_q)
    report = theorem1_report((2, 1, 1))
    assert report.epsilon == Fraction(-1, 3)
    assert report.two_a == Fraction(-4, 3)


def test_length_one_blocks():
    for c in range(1, 8):
        report = theorem1_report((c,))
        assert report.epsilon == 0
        assert report.two_a == -c
        assert report.palindromic and report.congruence_holds


def test_palindrome_and_congruence_agree():
    blocks = [(1, 2, 1, 4), (3, 3, 2), (1, 2, 3, 2, 1, 9), (4, 1, 1, 5, 2)]
    for block in blocks:
        assert is_palindromic_prefix(block) == congruence_check(block) == (epsilon(block) == 0)


def test_discriminant_polynomial():
    assert discriminant_poly_in_cn((1, 2, 2)) == (49, 112, 60)
    assert discriminant_poly_in_cn(()) == (1, 0, 4)
    A, B, C = discriminant_poly_in_cn((2, 3, 1, 3, 2))
    for c in range(1, 10):
        assert A * c * c + B * c + C == discriminant((2, 3, 1, 3, 2, c))


def test_block_errors():
    with pytest.raises(EmptyPeriod):
        theorem1_report(())
    with pytest.raises(InvalidDigit):
        theorem1_report((1, 0, 2))
    with pytest.raises(EmptyPeriod):
        is_palindromic_prefix(())
