from fractions import Fraction
from typing import List, Optional, Tuple

from arith import QuadIrr, make_quad_irr
from models import CFExpansion
from notation.lexer import DESCRIPTIONS, Token, tokenize
from utils.exceptions import DegenerateRadicand, InvalidDigit, NonPositiveRadicand, ParseError


class Parser:
    """
    재귀 하강 파서

        cf       := "[" ( period | integer ( (";" | ",") body )? ) "]"
        body     := terms? period?          (둘 중 하나는 필수, terms 와 period 사이는 ",")
        terms    := integer ("," integer)*
        period   := "(" integer ("," integer)* ")"

        quad     := "(" plain ")" "/" integer | plain
        plain    := rational ("+" | "-") root | ("+" | "-")? root
        root     := "sqrt" "(" rational ")"
        rational := "-"? INT ("/" INT)?
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        if token.kind != "EOF":
            self.pos += 1
        return token

    def error(self, expected: List[str], token: Optional[Token] = None) -> ParseError:
        token = token or self.peek()
        if token.kind == "ERROR":
            message = f"unexpected character {token.text!r}, expected {' or '.join(expected)}"
        else:
            found = "end of input" if token.kind == "EOF" else repr(token.text)
            message = f"expected {' or '.join(expected)}, found {found}"
        return ParseError(message,
                          token.start, token.end, expected, text=self.text)

    def expect(self, kind: str) -> Token:
        if self.peek().kind != kind:
            raise self.error([DESCRIPTIONS[kind]])
        return self.advance()

    def to_int(self, token: Token) -> int:
        try:
            return int(token.text)
        except ValueError:
            raise ParseError("integer literal too long", token.start, token.end, ["shorter integer"], text=self.text)

    # 부호 있는 정수와 그 span
    def integer(self) -> Tuple[int, int, int]:
        start = self.peek().start
        negative = self.peek().kind == "MINUS"
        if negative:
            self.advance()
        return self.unsigned(negative, start)

    def unsigned(self, negative: bool, start: int) -> Tuple[int, int, int]:
        token = self.expect("INT")
        value = self.to_int(token)
        return (-value if negative else value), start, token.end

    def digit(self, position: int, repeating: bool = False) -> int:
        value, start, end = self.integer()
        if (position > 0 or repeating) and value < 1:
            raise InvalidDigit(f"digit {value} at position {position} must be >= 1", start, end, text=self.text)
        return value

    def period(self, position: int) -> List[int]:
        self.expect("LPAREN")
        digits = [self.digit(position, repeating=True)]
        while self.peek().kind == "COMMA":
            self.advance()
            digits.append(self.digit(position + len(digits), repeating=True))
        self.expect("RPAREN")
        return digits

    def cf(self) -> CFExpansion:
        self.expect("LBRACK")
        initial: List[int] = []
        repeating: List[int] = []
        if self.peek().kind == "LPAREN":
            repeating = self.period(0)
        else:
            initial.append(self.digit(0))
            if self.peek().kind in ("SEMI", "COMMA"):
                self.advance()
                if self.peek().kind == "LPAREN":
                    repeating = self.period(1)
                elif self.peek().kind in ("INT", "MINUS"):
                    initial.append(self.digit(1))
                    while self.peek().kind == "COMMA":
                        self.advance()
                        if self.peek().kind == "LPAREN":
                            repeating = self.period(len(initial))
                            break
                        initial.append(self.digit(len(initial)))
                else:
                    raise self.error(["integer", "'('"])
        self.expect("RBRACK")
        self.expect("EOF")
        return CFExpansion(initial=tuple(initial), repeating=tuple(repeating))

    def rational(self, numerator: Optional[Tuple[int, int, int]] = None) -> Tuple[Fraction, int, int]:
        numerator, start, end = numerator or self.integer()
        if self.peek().kind != "SLASH":
            return Fraction(numerator), start, end
        self.advance()
        token = self.expect("INT")
        denominator = self.to_int(token)
        if denominator == 0:
            raise ParseError("zero denominator", token.start, token.end, ["nonzero integer"], text=self.text)
        return Fraction(numerator, denominator), start, token.end

    def root(self) -> Tuple[Fraction, int, int]:
        self.expect("SQRT")
        self.expect("LPAREN")
        radicand = self.rational()
        self.expect("RPAREN")
        return radicand

    def plain(self) -> QuadIrr:
        # 한 토큰만 보고 분기
        rat, sign = Fraction(0), 1
        kind = self.peek().kind
        if kind == "PLUS":
            self.advance()
        elif kind == "MINUS":
            start = self.advance().start
            if self.peek().kind == "SQRT":
                sign = -1
            else:
                rat, _, _ = self.rational(self.unsigned(True, start))
                sign = self.operator()
        elif kind == "INT":
            rat, _, _ = self.rational()
            sign = self.operator()
        elif kind != "SQRT":
            raise self.error(["rational", "'+'", "'-'", "'sqrt'"])
        radicand, start, end = self.root()
        try:
            return make_quad_irr(rat, sign, radicand)
        except (DegenerateRadicand, NonPositiveRadicand) as e:
            raise type(e)(e.detail, start, end, text=self.text)

    def operator(self) -> int:
        if self.peek().kind not in ("PLUS", "MINUS"):
            raise self.error(["'+'", "'-'"])
        return -1 if self.advance().kind == "MINUS" else 1

    def quad(self) -> QuadIrr:
        if self.peek().kind == "LPAREN":
            self.advance()
            inner = self.plain()
            self.expect("RPAREN")
            self.expect("SLASH")
            scale, start, end = self.integer()
            if scale == 0:
                raise ParseError("zero denominator", start, end, ["nonzero integer"], text=self.text)
            sign = inner.sign if scale > 0 else -inner.sign
            value = make_quad_irr(inner.rat / scale, sign, inner.radicand / (scale * scale))
        else:
            value = self.plain()
        self.expect("EOF")
        return value


def parse_cf(text: str) -> CFExpansion:
    return Parser(text).cf()


def parse_quad(text: str) -> QuadIrr:
    return Parser(text).quad()
