import logging
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from arith import MobiusMap, QuadIrr, in_window, isqrt, make_quad_irr, mobius_apply
from cf.convergents import build_convergents
from cf.theorems import _check_block, zero_periodic_table
from models import CFExpansion
from utils.exceptions import EmptyPeriod, NoRootInWindow, RationalFixedPoint, TwoRootsInWindow

logger = logging.getLogger(__name__)

# 열린 구간 (lo, hi), None 은 무한대
Window = Tuple[Optional[Fraction], Optional[Fraction]]
UNIT_INTERVAL: Window = (Fraction(0), Fraction(1))
ABOVE_ONE: Window = (Fraction(1), None)


def mobius_fixed_point(m: MobiusMap, window: Window) -> QuadIrr:
    a2, a1, a0 = m.fixed_point_equation()
    if a2 == 0:
        raise RationalFixedPoint(f"fixed-point equation of {m.as_tuple()} is not quadratic")
    disc = a1 * a1 - 4 * a2 * a0
    if disc < 0:
        raise NoRootInWindow(f"fixed-point equation {a2}t^2 + {a1}t + {a0} = 0 has no real root")
    _, exact = isqrt(disc)
    if exact:
        raise RationalFixedPoint(f"discriminant {disc} is a perfect square")

    center = Fraction(-a1, 2 * a2)
    radicand = Fraction(disc, 4 * a2 * a2)
    # 구간 안의 근을 선택 (0 < x < 1 이면 양의 근)
    roots = [make_quad_irr(center, s, radicand) for s in (1, -1)]
    inside = [root for root in roots if in_window(root, *window)]
    if not inside:
        raise NoRootInWindow(f"no fixed point of {m.as_tuple()} in {window}")
    if len(inside) > 1:
        raise TwoRootsInWindow(f"both fixed points of {m.as_tuple()} lie in {window}")
    return inside[0]


# x = [0, c_1..c_n, 1/x] -> (p_{n-1} x + p_n) / (q_{n-1} x + q_n)
def zero_periodic_map(repeating: Sequence[int]) -> MobiusMap:
    table = zero_periodic_table(repeating)
    n = len(table.digits) - 1
    return MobiusMap(table.p_at(n - 1), table.p_at(n), table.q_at(n - 1), table.q_at(n))


# y = [c_1..c_n, y], c_1 이 0 번 위치
def purely_periodic_map(repeating: Sequence[int]) -> MobiusMap:
    table = build_convergents(_check_block(repeating))
    last = table.last
    return MobiusMap(table.p_at(last), table.p_at(last - 1), table.q_at(last), table.q_at(last - 1))


def evaluate_zero_periodic(repeating: Sequence[int]) -> QuadIrr:
    return mobius_fixed_point(zero_periodic_map(repeating), UNIT_INTERVAL)


def evaluate_purely_periodic(repeating: Sequence[int]) -> QuadIrr:
    return mobius_fixed_point(purely_periodic_map(repeating), ABOVE_ONE)


def evaluate_general(cf: CFExpansion) -> QuadIrr:
    if not cf.repeating:
        raise EmptyPeriod("expansion has no repeating block; finite continued fractions are rational")
    y = evaluate_purely_periodic(cf.repeating)
    if not cf.initial:
        return y
    table = build_convergents(cf.initial)
    last = table.last
    head = MobiusMap(table.p_at(last), table.p_at(last - 1), table.q_at(last), table.q_at(last - 1))
    logger.debug("initial block %s maps by %s", cf.initial, head.as_tuple())
    return mobius_apply(head, y)
