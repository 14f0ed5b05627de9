from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from arith.quad import QuadIrr, from_coefficient
from utils.exceptions import DegenerateRadicand, SingularMap


@dataclass(frozen=True)
class MobiusMap:
    """t -> (p*t + p_prev) / (q*t + q_prev)"""
    p: int
    p_prev: int
    q: int
    q_prev: int

    def __post_init__(self):
        if self.determinant == 0:
            raise SingularMap(f"map {self.as_tuple()} has zero determinant")

    @property
    def determinant(self) -> int:
        return self.p * self.q_prev - self.q * self.p_prev

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.p, self.p_prev, self.q, self.q_prev

    # 고정점 방정식 q t^2 + (q_prev - p) t - p_prev = 0 의 계수
    def fixed_point_equation(self) -> Tuple[int, int, int]:
        return self.q, self.q_prev - self.p, -self.p_prev


IDENTITY = MobiusMap(1, 0, 0, 1)
RECIPROCAL = MobiusMap(0, 1, 1, 0)


def compose(outer: MobiusMap, inner: MobiusMap) -> MobiusMap:
    """outer(inner(t)) 에 해당하는 행렬곱"""
    return MobiusMap(
        outer.p * inner.p + outer.p_prev * inner.q,
        outer.p * inner.p_prev + outer.p_prev * inner.q_prev,
        outer.q * inner.p + outer.q_prev * inner.q,
        outer.q * inner.p_prev + outer.q_prev * inner.q_prev,
    )


def mobius_apply(m: MobiusMap, x: QuadIrr) -> QuadIrr:
    # 분모를 유리화: N/M = N * conj(M) / (M * conj(M))
    num_rat = m.p * x.rat + m.p_prev
    num_irr = m.p * x.sign
    den_rat = m.q * x.rat + m.q_prev
    den_irr = m.q * x.sign
    norm = den_rat * den_rat - den_irr * den_irr * x.radicand
    rat = (num_rat * den_rat - num_irr * den_irr * x.radicand) / norm
    coefficient = Fraction(num_irr * den_rat - num_rat * den_irr) / norm
    try:
        return from_coefficient(rat, coefficient, x.radicand)
    except DegenerateRadicand as e:
        raise SingularMap(f"image of {x} under {m.as_tuple()} is rational: {e.detail}")
