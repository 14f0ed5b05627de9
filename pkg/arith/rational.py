import math
from fractions import Fraction
from typing import Optional, Tuple, Union

from utils.exceptions import DivisionByZero

# 정확한 유리수: 항상 기약분수, 부호는 분자에
Rational = Fraction
RationalLike = Union[Fraction, int]

_OPS = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": lambda a, b: a * b,
    "/": lambda a, b: a / b,
}


def rational_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    if op not in _OPS:
        raise ValueError(f"unknown operator {op!r}")
    a, b = Fraction(a), Fraction(b)
    if op == "/" and b == 0:
        raise DivisionByZero(f"division of {render_rational(a)} by zero")
    return _OPS[op](a, b)


def isqrt(n: int) -> Tuple[int, bool]:
    """floor(sqrt(n)) 와 n 이 완전제곱수인지 여부"""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    root = math.isqrt(n)
    return root, root * root == n


def sqrt_rational(r: RationalLike) -> Optional[Fraction]:
    """r 이 유리수의 제곱이면 그 (음이 아닌) 제곱근, 아니면 None"""
    r = Fraction(r)
    if r < 0:
        return None
    num_root, num_exact = isqrt(r.numerator)
    den_root, den_exact = isqrt(r.denominator)
    if num_exact and den_exact:
        return Fraction(num_root, den_root)
    return None


def is_rational_square(r: RationalLike) -> bool:
    return sqrt_rational(r) is not None


# {a}: a - {a} 는 정수, 0 <= {a} < 1
def fractional_part(a: RationalLike) -> Fraction:
    a = Fraction(a)
    return a - math.floor(a)


def render_rational(r: RationalLike) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"
