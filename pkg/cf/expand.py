import logging
from dataclasses import dataclass
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from arith import QuadIrr, isqrt
from models import CFExpansion
from utils.config import variables
from utils.exceptions import DegenerateRadicand, EmptyPeriod, PeriodTooLong

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurdState:
    """(P + sqrt(D)) / Q, Q | D - P^2"""
    P: int
    Q: int
    D: int

    def __post_init__(self):
        if self.Q == 0:
            raise ValueError("Q must be nonzero")
        if self.D <= 0 or isqrt(self.D)[1]:
            raise DegenerateRadicand(f"D = {self.D} must be a positive non-square")
        if (self.D - self.P * self.P) % self.Q:
            raise ValueError(f"Q = {self.Q} does not divide D - P^2 = {self.D - self.P * self.P}")


def to_surd_state(x: QuadIrr) -> SurdState:
    # a + s*sqrt(u/w) = (P0 + s*sqrt(D0)) / L
    a, r = x.rat, x.radicand
    L = lcm(a.denominator, r.denominator)
    P = a.numerator * (L // a.denominator)
    D = (L // r.denominator) ** 2 * r.numerator * r.denominator
    Q = L
    if x.sign < 0:
        P, Q = -P, -Q
    if (D - P * P) % Q:
        P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
    return SurdState(P, Q, D)


def exact_floor(s: SurdState) -> int:
    """floor((P + sqrt(D)) / Q), sqrt(D) 는 무리수"""
    t, _ = isqrt(s.D)
    if s.Q > 0:
        return (s.P + t) // s.Q
    return (s.P + t + 1) // s.Q


def advance(s: SurdState) -> Tuple[int, SurdState]:
    digit = exact_floor(s)
    P = digit * s.Q - s.P
    Q = (s.D - P * P) // s.Q
    return digit, SurdState(P, Q, s.D)


def minimal_period(block: Sequence[int]) -> int:
    n = len(block)
    for d in range(1, n + 1):
        if n % d == 0 and tuple(block[:d]) * (n // d) == tuple(block):
            return d
    return n


def canonicalize(cf: CFExpansion) -> CFExpansion:
    if not cf.repeating:
        raise EmptyPeriod("cannot canonicalize an expansion without a repeating block")
    initial = list(cf.initial)
    repeating = list(cf.repeating[:minimal_period(cf.repeating)])
    # 초기 블록 끝자리가 반복 블록 끝자리와 같으면 반복 블록으로 흡수
    while initial and initial[-1] == repeating[-1]:
        initial.pop()
        repeating = repeating[-1:] + repeating[:-1]
    return CFExpansion(initial=tuple(initial), repeating=tuple(repeating))


def expand(x: QuadIrr, max_steps: Optional[int] = None) -> CFExpansion:
    max_steps = max_steps or variables.MAX_STEPS
    state = to_surd_state(x)
    seen: Dict[Tuple[int, int], int] = {}
    digits: List[int] = []
    # max_steps 번째 전진 후의 상태까지 반복 여부를 확인
    for step in range(max_steps + 1):
        key = (state.P, state.Q)
        if key in seen:
            start = seen[key]
            logger.debug("cycle of %s found: preperiod %d, period %d", x, start, step - start)
            return canonicalize(CFExpansion(initial=tuple(digits[:start]), repeating=tuple(digits[start:])))
        seen[key] = step
        if step < max_steps:
            digit, state = advance(state)
            digits.append(digit)
    raise PeriodTooLong(f"no period found for {x} within {max_steps} steps")


def digit_stream(cf: CFExpansion, k: int) -> List[int]:
    return list(cf.digits(k))
