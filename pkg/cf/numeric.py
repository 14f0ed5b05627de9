from fractions import Fraction
from typing import Optional

from mpmath import mp

from arith import QuadIrr
from cf.convergents import build_convergents
from models import CFExpansion
from utils.config import variables


def quad_to_mpf(x: QuadIrr):
    """현재 mp 정밀도에서 a + s*sqrt(r)"""
    rat = mp.mpf(x.rat.numerator) / x.rat.denominator
    root = mp.sqrt(mp.mpf(x.radicand.numerator) / x.radicand.denominator)
    return rat + x.sign * root


# 앞 k 자리로 자른 연분수의 정확한 값
def truncated_value(cf: CFExpansion, k: int) -> Fraction:
    table = build_convergents(list(cf.digits(k)))
    return table.convergent(table.last)


def numeric_gap(x: QuadIrr, cf: CFExpansion, digits: Optional[int] = None, dps: Optional[int] = None):
    digits = digits or variables.NUMERIC_DIGITS
    dps = max(dps or variables.NUMERIC_DPS, 64)
    approx = truncated_value(cf, digits)
    with mp.workdps(dps):
        return abs(quad_to_mpf(x) - mp.mpf(approx.numerator) / approx.denominator)


def numeric_agreement(x: QuadIrr, cf: CFExpansion, digits: Optional[int] = None,
                      dps: Optional[int] = None, tolerance: Optional[str] = None) -> bool:
    tolerance = tolerance or variables.NUMERIC_TOLERANCE
    gap = numeric_gap(x, cf, digits, dps)
    with mp.workdps(max(dps or variables.NUMERIC_DPS, 64)):
        return gap < mp.mpf(tolerance)
