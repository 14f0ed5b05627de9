from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from arith.rational import RationalLike, render_rational, sqrt_rational
from utils.exceptions import DegenerateRadicand, FieldMismatch, NonPositiveRadicand

Number = Union[Fraction, "QuadIrr"]


@dataclass(frozen=True)
class QuadIrr:
    """
    a + sign*sqrt(radicand)

    radicand 는 무리수 부분의 제곱 (기약분수), 값이 같으면 세 필드가 모두 같다.
    생성은 make_quad_irr 를 통해서만 할 것.
    """
    rat: Fraction
    radicand: Fraction
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def __neg__(self) -> "QuadIrr":
        return QuadIrr(-self.rat, self.radicand, -self.sign)

    def __add__(self, other: RationalLike) -> "QuadIrr":
        if isinstance(other, (int, Fraction)):
            return QuadIrr(self.rat + other, self.radicand, self.sign)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: RationalLike) -> "QuadIrr":
        if isinstance(other, (int, Fraction)):
            return QuadIrr(self.rat - other, self.radicand, self.sign)
        return NotImplemented

    def __str__(self) -> str:
        root = f"sqrt({render_rational(self.radicand)})"
        if self.rat == 0:
            return root if self.sign > 0 else f"-{root}"
        op = "+" if self.sign > 0 else "-"
        return f"{render_rational(self.rat)} {op} {root}"


def make_quad_irr(a: RationalLike, s: int, r: RationalLike) -> QuadIrr:
    a, r = Fraction(a), Fraction(r)
    if r <= 0:
        raise NonPositiveRadicand(f"radicand {render_rational(r)} is not positive")
    if sqrt_rational(r) is not None:
        raise DegenerateRadicand(f"radicand {render_rational(r)} is a rational square; the value is rational")
    return QuadIrr(a, r, 1 if s > 0 else -1)


def from_coefficient(a: RationalLike, c: RationalLike, r: RationalLike) -> QuadIrr:
    """a + c*sqrt(r) -> 정규형"""
    c = Fraction(c)
    if c == 0:
        raise DegenerateRadicand("irrational part vanished; the value is rational")
    return make_quad_irr(a, 1 if c > 0 else -1, c * c * Fraction(r))


def conjugate(x: QuadIrr) -> QuadIrr:
    return QuadIrr(x.rat, x.radicand, -x.sign)


def sign_of(x: QuadIrr) -> int:
    # 0 은 나올 수 없음 (x 는 무리수)
    if x.rat == 0 or (x.rat > 0) == (x.sign > 0):
        return x.sign
    if x.rat * x.rat > x.radicand:
        return 1 if x.rat > 0 else -1
    return x.sign


def compare_to_rational(x: QuadIrr, t: RationalLike) -> int:
    """-1: x < t, +1: x > t"""
    return sign_of(x - Fraction(t))


def in_window(x: QuadIrr, lo: Optional[RationalLike], hi: Optional[RationalLike]) -> bool:
    """열린 구간 (lo, hi) 포함 여부, None 은 무한대"""
    if lo is not None and compare_to_rational(x, lo) < 0:
        return False
    if hi is not None and compare_to_rational(x, hi) > 0:
        return False
    return True


def _coefficient_over(x: QuadIrr, base: Fraction) -> Fraction:
    ratio = sqrt_rational(x.radicand / base)
    if ratio is None:
        raise FieldMismatch(f"sqrt({render_rational(x.radicand)}) and sqrt({render_rational(base)}) "
                            "lie in different quadratic fields")
    return x.sign * ratio


def same_field(x: QuadIrr, y: QuadIrr) -> bool:
    return sqrt_rational(x.radicand / y.radicand) is not None


def _collapse(a: Fraction, c: Fraction, base: Fraction) -> Number:
    if c == 0:
        return a
    return from_coefficient(a, c, base)


def add(x: QuadIrr, y: Number) -> Number:
    if not isinstance(y, QuadIrr):
        return x + Fraction(y)
    base = x.radicand
    return _collapse(x.rat + y.rat, x.sign + _coefficient_over(y, base), base)


def multiply(x: QuadIrr, y: Number) -> Number:
    if not isinstance(y, QuadIrr):
        y = Fraction(y)
        if y == 0:
            return Fraction(0)
        return from_coefficient(x.rat * y, x.sign * y, x.radicand)
    base = x.radicand
    c1, c2 = Fraction(x.sign), _coefficient_over(y, base)
    return _collapse(x.rat * y.rat + c1 * c2 * base, x.rat * c2 + y.rat * c1, base)


def reciprocal(x: QuadIrr) -> QuadIrr:
    # 1/(a + c*sqrt(r)) = (a - c*sqrt(r)) / (a^2 - c^2 r)
    norm = x.rat * x.rat - x.radicand
    return from_coefficient(x.rat / norm, Fraction(-x.sign) / norm, x.radicand)
