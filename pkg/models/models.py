from enum import Enum
from fractions import Fraction
from itertools import chain, cycle, islice
from typing import Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from arith import QuadIrr, render_rational
from utils.exceptions import InvalidDigit


# 입력 문자열 내 위치 [start, end)
class SourceSpan(BaseModel):
    model_config = ConfigDict(frozen=True)

    start: int
    end: int

    @model_validator(mode="after")
    def check_order(self):
        if not 0 <= self.start <= self.end:
            raise ValueError(f"invalid span [{self.start}, {self.end})")
        return self


# 연분수 전개: 초기 블록 + 반복 블록
class CFExpansion(BaseModel):
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"initial": [0, 1], "repeating": [16, 11, 1, 3, 2, 3, 1, 11, 16, 2]}},
    )

    initial: Tuple[int, ...] = ()
    repeating: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def check_digits(self):
        if not self.initial and not self.repeating:
            raise InvalidDigit("expansion has no digits")
        for position, digit in enumerate(chain(self.initial, self.repeating)):
            if position > 0 and digit < 1:
                raise InvalidDigit(f"digit {digit} at position {position} must be >= 1")
        if any(digit < 1 for digit in self.repeating):
            raise InvalidDigit("repeating digits must be >= 1")
        return self

    @property
    def period(self) -> int:
        return len(self.repeating)

    def is_zero_periodic(self) -> bool:
        return self.initial == (0,) and bool(self.repeating)

    def digits(self, k: int) -> Iterator[int]:
        """앞에서부터 k 개의 숫자 (반복 블록은 순환)"""
        tail = cycle(self.repeating) if self.repeating else iter(())
        return islice(chain(self.initial, tail), k)


# 점근분수 표. p[0], q[0] 은 p_{-1}, q_{-1}
class ConvergentTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    digits: Tuple[int, ...]
    p: Tuple[int, ...]
    q: Tuple[int, ...]

    @property
    def last(self) -> int:
        return len(self.digits) - 1

    def p_at(self, k: int) -> int:
        return self.p[k + 1]

    def q_at(self, k: int) -> int:
        return self.q[k + 1]

    def convergent(self, k: int) -> Fraction:
        return Fraction(self.p_at(k), self.q_at(k))

    def determinant(self, k: int) -> int:
        # p_k q_{k-1} - q_k p_{k-1} = (-1)^{k+1}
        return self.p_at(k) * self.q_at(k - 1) - self.q_at(k) * self.p_at(k - 1)

    def is_monotone(self) -> bool:
        """digit_0 = 0 일 때: q 증가, 0 <= p_k <= q_k"""
        q = self.q
        if any(q[i] > q[i + 1] for i in range(len(q) - 1)):
            return False
        if any(q[i] >= q[i + 1] for i in range(2, len(q) - 1)):
            return False
        return all(0 <= self.p_at(k) <= self.q_at(k) for k in range(len(self.digits)))

    def pairs(self) -> List[str]:
        return [f"{self.p_at(k)}/{self.q_at(k)}" for k in range(len(self.digits))]


class CaseFlag(str, Enum):
    p_ge_q = "p_ge_q"
    p_lt_q = "p_lt_q"


class TheoremReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    block: Tuple[int, ...]
    epsilon: Fraction
    two_a: Fraction
    frac_two_a: Fraction
    case_flag: CaseFlag
    palindromic: bool
    congruence_holds: bool
    epsilon_zero: bool


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    block: Tuple[int, ...]
    property: str


class EnumerationReport(BaseModel):
    max_len: int
    max_digit: int
    blocks_checked: int = 0
    violations: List[Violation] = []
    epsilon_zero_count: int = 0
    palindromic_prefix_count: int = 0
    expected_palindromic_count: int = 0
    purely_periodic_integer_two_a_count: int = 0
    numeric_checked: int = 0
    elapsed: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.violations


### JSON 응답 스키마 (정확한 수는 모두 "n/d" 문자열) ###

class QuadValue(BaseModel):
    rational_part: str
    radicand: str
    sign: int

    @classmethod
    def from_quad(cls, x: QuadIrr) -> "QuadValue":
        return cls(rational_part=render_rational(x.rat), radicand=render_rational(x.radicand), sign=x.sign)


class Equation(BaseModel):
    a2: str
    a1: str
    a0: str


class Theorem2Flags(BaseModel):
    int_two_a: bool
    neg_cn: bool
    palindrome: bool


class EvalResponse(BaseModel):
    input: str
    value: QuadValue
    rendered: str
    two_a: Optional[str] = None
    epsilon: Optional[str] = None
    frac_two_a: Optional[str] = None
    case: Optional[CaseFlag] = None
    equation: Optional[Equation] = None
    theorem2: Optional[Theorem2Flags] = None
    congruence: Optional[bool] = None
    convergents: List[str] = []

    model_config = ConfigDict(json_schema_extra={
            "example": {
                "input": "[0; (1,2,2,3)]",
                "value": {"rational_part": "-19/14", "radicand": "837/196", "sign": 1},
                "rendered": "(-19 + sqrt(837))/14",
                "two_a": "-19/7",
                "epsilon": "2/7",
                "frac_two_a": "2/7",
                "case": "p_ge_q",
                "equation": {"a2": "7", "a1": "19", "a0": "-17"},
                "theorem2": {"int_two_a": False, "neg_cn": False, "palindrome": False},
                "congruence": False,
                "convergents": ["0/1", "1/1", "2/3", "5/7", "17/24"],
            }
    })


class EpsilonResponse(BaseModel):
    input: str
    block: List[str]
    epsilon: str
    two_a: str
    frac_two_a: str
    case: CaseFlag
    theorem2: Theorem2Flags
    congruence: bool


class ExpandResponse(BaseModel):
    input: str
    value: QuadValue
    expansion: str
    initial: List[str]
    repeating: List[str]
    period: int

    model_config = ConfigDict(json_schema_extra={
            "example": {
                "input": "sqrt(39/44)",
                "value": {"rational_part": "0", "radicand": "39/44", "sign": 1},
                "expansion": "[0; 1, (16,11,1,3,2,3,1,11,16,2)]",
                "initial": ["0", "1"],
                "repeating": ["16", "11", "1", "3", "2", "3", "1", "11", "16", "2"],
                "period": 10,
            }
    })


class RoundtripResponse(BaseModel):
    input: str
    canonical: str
    reduced: bool
    value: QuadValue
    rendered: str
    expansion: str
    digits: int
    status: str
