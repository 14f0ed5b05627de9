from math import lcm
from typing import Sequence

from arith import QuadIrr, isqrt, render_rational
from models import CFExpansion
from utils.config import variables


def render_cf(cf: CFExpansion) -> str:
    period = f"({','.join(map(str, cf.repeating))})" if cf.repeating else ""
    if not cf.initial:
        return f"[{period}]"
    body = [str(digit) for digit in cf.initial[1:]]
    if period:
        body.append(period)
    if not body:
        return f"[{cf.initial[0]}]"
    return f"[{cf.initial[0]}; {', '.join(body)}]"


def _root_scale(n: int) -> int:
    """n | s^2 을 만족하는 작은 s (작은 소수로만 시도 분할)"""
    limit = variables.RENDER_TRIAL_LIMIT
    s, p = 1, 2
    while p <= limit and p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** ((e + 1) // 2)
        p += 1
    if n > 1:
        root, exact = isqrt(n)
        s *= root if exact else n
    return s


def render_quad(x: QuadIrr) -> str:
    # 유리수 부분이 0 이면 "sqrt(r)", 아니면 정수형 "(P + sqrt(D))/Q"
    if x.rat == 0:
        return str(x)
    Q = lcm(x.rat.denominator, _root_scale(x.radicand.denominator))
    P = x.rat * Q
    D = x.radicand * Q * Q
    op = "+" if x.sign > 0 else "-"
    if Q == 1:
        return f"{render_rational(P)} {op} sqrt({render_rational(D)})"
    return f"({render_rational(P)} {op} sqrt({render_rational(D)}))/{Q}"


def _term(coefficient: int, var: str, first: bool) -> str:
    if coefficient == 0:
        return ""
    sign = "-" if coefficient < 0 else ("" if first else "+")
    magnitude = abs(coefficient)
    body = var if (magnitude == 1 and var) else f"{magnitude}{var}"
    return f"{sign}{body}"


def render_equation(coefficients: Sequence[int]) -> str:
    """(a2, a1, a0) -> "7x^2+19x-17=0" """
    a2, a1, a0 = coefficients
    text = ""
    for coefficient, var in ((a2, "x^2"), (a1, "x"), (a0, "")):
        text += _term(coefficient, var, not text)
    return f"{text or '0'}=0"
