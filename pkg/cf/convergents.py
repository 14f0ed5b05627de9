from typing import Sequence

from models import ConvergentTable
from utils.exceptions import InvalidDigit


def check_digits(digits: Sequence[int], first_position: int = 0) -> None:
    """0 번 위치 이후의 숫자는 1 이상"""
    for offset, digit in enumerate(digits):
        position = first_position + offset
        if position > 0 and digit < 1:
            raise InvalidDigit(f"digit {digit} at position {position} must be >= 1")


def build_convergents(digits: Sequence[int]) -> ConvergentTable:
    if not digits:
        raise InvalidDigit("digit list is empty")
    check_digits(digits)
    # p_{-1} = 1, q_{-1} = 0, p_0 = c_0, q_0 = 1
    p = [1, digits[0]]
    q = [0, 1]
    for digit in digits[1:]:
        p.append(digit * p[-1] + p[-2])
        q.append(digit * q[-1] + q[-2])
    return ConvergentTable(digits=tuple(digits), p=tuple(p), q=tuple(q))
