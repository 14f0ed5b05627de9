from dataclasses import dataclass
from string import digits
from typing import Iterator, List

# 한 글자 토큰
PUNCTUATION = {
    "[": "LBRACK",
    "]": "RBRACK",
    "(": "LPAREN",
    ")": "RPAREN",
    ";": "SEMI",
    ",": "COMMA",
    "+": "PLUS",
    "-": "MINUS",
    "/": "SLASH",
}

DESCRIPTIONS = {
    "LBRACK": "'['",
    "RBRACK": "']'",
    "LPAREN": "'('",
    "RPAREN": "')'",
    "SEMI": "';'",
    "COMMA": "','",
    "PLUS": "'+'",
    "MINUS": "'-'",
    "SLASH": "'/'",
    "INT": "integer",
    "SQRT": "'sqrt'",
    "EOF": "end of input",
}

# ASCII 공백만 허용
WHITESPACE = " \t\r\n"
KEYWORD = "sqrt"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int
    end: int


def iter_tokens(text: str) -> Iterator[Token]:
    """
    토큰 스트림. 인식할 수 없는 문자는 한 글자짜리 ERROR 토큰이 되고
    파서가 받아들일 수 없는 첫 토큰에서 ParseError 를 냄.
    ERROR 앞의 토큰은 모두 ASCII 이므로 문자 위치가 곧 바이트 위치.
    """
    i, length = 0, len(text)
    while i < length:
        ch = text[i]
        if ch in WHITESPACE:
            i += 1
        elif ch in PUNCTUATION:
            yield Token(PUNCTUATION[ch], ch, i, i + 1)
            i += 1
        elif ch in digits:
            j = i
            while j < length and text[j] in digits:
                j += 1
            yield Token("INT", text[i:j], i, j)
            i = j
        elif text.startswith(KEYWORD, i):
            yield Token("SQRT", KEYWORD, i, i + len(KEYWORD))
            i += len(KEYWORD)
        else:
            yield Token("ERROR", ch, i, i + 1)
            i += 1
    yield Token("EOF", "", length, length)


def tokenize(text: str) -> List[Token]:
    return list(iter_tokens(text))
