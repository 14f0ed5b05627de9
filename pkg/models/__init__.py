from .models import (
    SourceSpan,
    CFExpansion,
    ConvergentTable,
    CaseFlag,
    TheoremReport,
    Violation,
    EnumerationReport,
    QuadValue,
    Equation,
    Theorem2Flags,
    EvalResponse,
    EpsilonResponse,
    ExpandResponse,
    RoundtripResponse,
)
