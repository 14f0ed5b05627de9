from .config import variables
from .exceptions import (
    SurdError,
    ParseError,
    InvalidDigit,
    EmptyPeriod,
    DegenerateRadicand,
    NonPositiveRadicand,
    DivisionByZero,
    FieldMismatch,
    PeriodTooLong,
    PropertyViolation,
    RationalFixedPoint,
    NoRootInWindow,
    TwoRootsInWindow,
    SingularMap,
    handle_exceptions,
)
from .logger import setup_logging
