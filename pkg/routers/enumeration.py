import sys

from cf import render_block, run_enumeration, smoke_checks
from models import EnumerationReport, Violation
from routers.output import JSON_ARG, OUT_ARG, emit
from routers.router import CommandRouter, arg, non_negative_int, positive_int
from utils.exceptions import PropertyViolation, handle_exceptions

router = CommandRouter()


def enumeration_lines(report: EnumerationReport, timing: bool = False):
    yield f"max_len: {report.max_len}"
    yield f"max_digit: {report.max_digit}"
    yield f"blocks_checked: {report.blocks_checked}"
    yield f"epsilon_zero_count: {report.epsilon_zero_count}"
    yield f"palindromic_prefix_count: {report.palindromic_prefix_count}"
    yield f"expected_palindromic_count: {report.expected_palindromic_count}"
    yield f"purely_periodic_integer_two_a_count: {report.purely_periodic_integer_two_a_count}"
    yield f"numeric_checked: {report.numeric_checked}"
    yield f"violations: {len(report.violations)}"
    for violation in report.violations:
        yield f"  {violation.property} [{','.join(map(str, violation.block))}]"
    if timing:
        yield f"elapsed: {report.elapsed:.3f}s"
    yield "status: OK" if report.ok else "status: VIOLATION"


@router.command("enumerate", help="check the block properties over every repeating block up to a size",
                arguments=[
                    arg("--max-len", type=positive_int, required=True, help="longest repeating block"),
                    arg("--max-digit", type=positive_int, required=True, help="largest digit"),
                    arg("--workers", type=positive_int, default=None, help="worker processes"),
                    arg("--numeric-sample", type=non_negative_int, default=0,
                        help="also compare this many random blocks against a high-precision numeric value"),
                    arg("--seed", type=non_negative_int, default=0, help="seed for --numeric-sample"),
                    arg("--timing", action="store_true", help="include elapsed time in the report"),
                    JSON_ARG,
                    OUT_ARG,
                ])
@handle_exceptions
def cmd_enumerate(args) -> int:
    # 전체 탐색 전에 기준 예제 결과를 먼저 보여줌
    smoke = []
    for block, summary, ok in smoke_checks():
        print(f"smoke {render_block(block)}: {summary} -> {'ok' if ok else 'FAIL'}", file=sys.stderr)
        if not ok:
            smoke.append(Violation(block=block, property="smoke"))
    report = run_enumeration(args.max_len, args.max_digit, args.workers, args.numeric_sample, args.seed, smoke)
    exclude = None if args.timing else {"elapsed"}
    emit(report, enumeration_lines(report, args.timing), args.json, args.out, exclude=exclude)
    if not report.ok:
        raise PropertyViolation(f"{len(report.violations)} property violations, first: "
                                f"{report.violations[0].property} on {list(report.violations[0].block)}")
    return 0
