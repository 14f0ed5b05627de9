import logging

from arith import render_rational
from cf import theorem1_report, theorem2_report
from models import EpsilonResponse, Theorem2Flags
from notation import parse_cf
from routers.output import JSON_ARG, OUT_ARG, emit, flag
from routers.router import CommandRouter, arg
from utils.exceptions import EmptyPeriod, handle_exceptions

logger = logging.getLogger(__name__)
router = CommandRouter()


@router.command("epsilon", help="report epsilon, 2*x_Q and the palindrome criterion of a repeating block",
                arguments=[arg("cf", help='expansion such as "[0; (2,3,1,3,2,1)]"'), JSON_ARG, OUT_ARG])
@handle_exceptions
def cmd_epsilon(args) -> int:
    cf = parse_cf(args.cf)
    if not cf.repeating:
        raise EmptyPeriod("expansion has no repeating block")
    if not cf.is_zero_periodic():
        logger.warning("initial block %s ignored; reporting [0; (%s)]", list(cf.initial),
                       ",".join(map(str, cf.repeating)))
    report = theorem1_report(cf.repeating)
    int_two_a, neg_cn, palindrome = theorem2_report(cf.repeating)
    response = EpsilonResponse(
        input=args.cf,
        block=[str(digit) for digit in report.block],
        epsilon=render_rational(report.epsilon),
        two_a=render_rational(report.two_a),
        frac_two_a=render_rational(report.frac_two_a),
        case=report.case_flag,
        theorem2=Theorem2Flags(int_two_a=int_two_a, neg_cn=neg_cn, palindrome=palindrome),
        congruence=report.congruence_holds,
    )
    lines = [
        f"block: {','.join(response.block)}",
        f"epsilon: {response.epsilon}",
        f"two_a: {response.two_a}",
        f"frac_two_a: {response.frac_two_a}",
        f"case: {response.case.value}",
        f"theorem2: int_two_a={flag(int_two_a)} neg_cn={flag(neg_cn)} palindrome={flag(palindrome)}",
        f"congruence: {flag(response.congruence)}",
    ]
    emit(response, lines, args.json, args.out)
    return 0
