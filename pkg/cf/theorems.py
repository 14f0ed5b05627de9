from fractions import Fraction
from typing import Sequence, Tuple

from arith import fractional_part
from cf.convergents import build_convergents, check_digits
from models import CaseFlag, ConvergentTable, TheoremReport
from utils.exceptions import EmptyPeriod, InvalidDigit


def _check_block(repeating: Sequence[int]) -> Tuple[int, ...]:
    if not repeating:
        raise EmptyPeriod("repeating block is empty")
    block = tuple(repeating)
    if min(block) < 1:
        raise InvalidDigit(f"repeating digits must be >= 1, got {list(block)}")
    return block


# [0, c_1, ..., c_n] 의 점근분수
def zero_periodic_table(repeating: Sequence[int]) -> ConvergentTable:
    return build_convergents((0,) + _check_block(repeating))


def epsilon(repeating: Sequence[int]) -> Fraction:
    table = zero_periodic_table(repeating)
    n = len(table.digits) - 1
    return Fraction(table.p_at(n - 1) - table.q_at(n - 2), table.q_at(n - 1))


def fractional_part_2a(repeating: Sequence[int]) -> Tuple[Fraction, CaseFlag]:
    """{2 x_Q}: p_{n-1} >= q_{n-2} 이면 eps, 아니면 eps + 1"""
    table = zero_periodic_table(repeating)
    n = len(table.digits) - 1
    eps = Fraction(table.p_at(n - 1) - table.q_at(n - 2), table.q_at(n - 1))
    if table.p_at(n - 1) >= table.q_at(n - 2):
        return eps, CaseFlag.p_ge_q
    return eps + 1, CaseFlag.p_lt_q


def is_palindromic_prefix(repeating: Sequence[int]) -> bool:
    if not repeating:
        raise EmptyPeriod("repeating block is empty")
    prefix = tuple(repeating[:-1])
    return prefix == prefix[::-1]


def congruence_check(repeating: Sequence[int]) -> bool:
    # p_{n-1}^2 = (-1)^n (mod q_{n-1}), 나머지는 [0, q_{n-1}) 로 정규화
    table = zero_periodic_table(repeating)
    n = len(table.digits) - 1
    modulus = table.q_at(n - 1)
    return pow(table.p_at(n - 1), 2, modulus) == (-1) ** n % modulus


def determinant_congruence(table: ConvergentTable) -> bool:
    """p_{n-1} q_{n-2} = (-1)^n (mod q_{n-1})"""
    n = len(table.digits) - 1
    modulus = table.q_at(n - 1)
    return (table.p_at(n - 1) * table.q_at(n - 2) - (-1) ** n) % modulus == 0


def theorem1_report(repeating: Sequence[int]) -> TheoremReport:
    block = _check_block(repeating)
    eps = epsilon(block)
    frac, case_flag = fractional_part_2a(block)
    return TheoremReport(
        block=block,
        epsilon=eps,
        two_a=eps - block[-1],
        frac_two_a=frac,
        case_flag=case_flag,
        palindromic=is_palindromic_prefix(block),
        congruence_holds=congruence_check(block),
        epsilon_zero=eps == 0,
    )


def theorem2_report(repeating: Sequence[int]) -> Tuple[bool, bool, bool]:
    report = theorem1_report(repeating)
    two_a = report.two_a
    return two_a.denominator == 1, two_a == -report.block[-1], report.palindromic


def quadratic_equation(repeating: Sequence[int]) -> Tuple[int, int, int]:
    """q_{n-1} x^2 + (q_n - p_{n-1}) x - p_n = 0 의 계수"""
    table = zero_periodic_table(repeating)
    n = len(table.digits) - 1
    return table.q_at(n - 1), table.q_at(n) - table.p_at(n - 1), -table.p_at(n)


def discriminant(repeating: Sequence[int]) -> int:
    a2, a1, a0 = quadratic_equation(repeating)
    return a1 * a1 - 4 * a2 * a0


def discriminant_poly_in_cn(prefix: Sequence[int]) -> Tuple[int, int, int]:
    """
    판별식을 c_n 의 이차식 A c_n^2 + B c_n + C 로 표현.

    q_n = c_n q_{n-1} + q_{n-2}, p_n = c_n p_{n-1} + p_{n-2} 를 대입해서 전개한 결과.
    x 의 무리수 부분은 sqrt(A c_n^2 + B c_n + C) / (2 q_{n-1}).
    """
    check_digits(tuple(prefix), first_position=1)
    table = build_convergents((0,) + tuple(prefix))
    k = len(prefix)
    p1, p2 = table.p_at(k), table.p_at(k - 1)
    q1, q2 = table.q_at(k), table.q_at(k - 1)
    return q1 * q1, 2 * q1 * (q2 + p1), (q2 - p1) ** 2 + 4 * q1 * p2


def fractional_check(report: TheoremReport) -> bool:
    frac = report.frac_two_a
    if not 0 <= frac < 1 or (report.two_a - frac).denominator != 1:
        return False
    if frac != fractional_part(report.two_a):
        return False
    if report.case_flag is CaseFlag.p_ge_q:
        return frac == report.epsilon
    return frac == report.epsilon + 1
