import functools
import logging
import sys
from typing import List, Optional

logger = logging.getLogger(__name__)

# 종료 코드 (문서화된 값, 변경 금지)
EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_PERIOD = 4
EXIT_VIOLATION = 5
EXIT_CONTRACT = 70


class SurdError(Exception):
    exit_code = EXIT_INTERNAL

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class _SpannedError(SurdError):
    def __init__(self, detail: str, start: Optional[int] = None, end: Optional[int] = None,
                 text: Optional[str] = None):
        super().__init__(detail)
        self.start = start
        self.end = end
        self.text = text

    @property
    def span(self):
        from models import SourceSpan
        if self.start is None:
            return None
        return SourceSpan(start=self.start, end=self.end)

    def caret(self) -> Optional[str]:
        """입력 한 줄과 span 아래 ^^^ 표시"""
        if self.text is None or self.start is None:
            return None
        width = max(self.end - self.start, 1)
        return f"  {self.text}\n  {' ' * self.start}{'^' * width}"


class ParseError(_SpannedError):
    exit_code = EXIT_PARSE

    def __init__(self, detail: str, start: int, end: int, expected: Optional[List[str]] = None,
                 text: Optional[str] = None):
        super().__init__(detail, start, end, text)
        self.expected = list(expected or [])


class InvalidDigit(_SpannedError):
    exit_code = EXIT_INVALID


class EmptyPeriod(SurdError):
    exit_code = EXIT_INVALID


class DegenerateRadicand(_SpannedError):
    exit_code = EXIT_INVALID


class NonPositiveRadicand(_SpannedError):
    exit_code = EXIT_INVALID


class DivisionByZero(SurdError, ZeroDivisionError):
    exit_code = EXIT_INVALID


class FieldMismatch(SurdError):
    exit_code = EXIT_INVALID


class PeriodTooLong(SurdError):
    exit_code = EXIT_PERIOD


class PropertyViolation(SurdError):
    exit_code = EXIT_VIOLATION


class RationalFixedPoint(SurdError):
    exit_code = EXIT_CONTRACT


class NoRootInWindow(SurdError):
    exit_code = EXIT_CONTRACT


class TwoRootsInWindow(SurdError):
    exit_code = EXIT_CONTRACT


class SingularMap(SurdError):
    exit_code = EXIT_CONTRACT


def handle_exceptions(func):
    """커맨드 핸들러의 예외를 종료 코드로 변환"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except SurdError as e:
            print(f"error: {e.detail}", file=sys.stderr)
            if isinstance(e, ParseError) and e.expected:
                print(f"  expected: {', '.join(e.expected)}", file=sys.stderr)
            if isinstance(e, _SpannedError) and e.caret():
                print(e.caret(), file=sys.stderr)
            return e.exit_code
        except Exception as e:
            logger.exception("unexpected failure: %s", e)
            print(f"error: unexpected failure: {e}", file=sys.stderr)
            return EXIT_INTERNAL
    return wrapper
