import logging

from arith import QuadIrr, render_rational
from cf import build_convergents, evaluate_general, quadratic_equation, theorem1_report, theorem2_report
from cf import zero_periodic_table
from models import CFExpansion, Equation, EvalResponse, QuadValue, Theorem2Flags
from notation import parse_cf, render_equation, render_quad
from routers.output import JSON_ARG, OUT_ARG, emit, flag
from routers.router import CommandRouter, arg
from utils.exceptions import handle_exceptions

logger = logging.getLogger(__name__)
router = CommandRouter()


def build_eval_response(text: str, cf: CFExpansion, x: QuadIrr) -> EvalResponse:
    response = EvalResponse(input=text, value=QuadValue.from_quad(x), rendered=render_quad(x))
    if not cf.is_zero_periodic():
        # 정리 1, 2 는 [0; (c_1..c_n)] 형태에만 해당
        response.convergents = build_convergents(cf.initial + cf.repeating).pairs()
        return response

    block = cf.repeating
    report = theorem1_report(block)
    int_two_a, neg_cn, palindrome = theorem2_report(block)
    a2, a1, a0 = quadratic_equation(block)
    response.two_a = render_rational(report.two_a)
    response.epsilon = render_rational(report.epsilon)
    response.frac_two_a = render_rational(report.frac_two_a)
    response.case = report.case_flag
    response.equation = Equation(a2=str(a2), a1=str(a1), a0=str(a0))
    response.theorem2 = Theorem2Flags(int_two_a=int_two_a, neg_cn=neg_cn, palindrome=palindrome)
    response.congruence = report.congruence_holds
    response.convergents = zero_periodic_table(block).pairs()
    return response


def eval_lines(response: EvalResponse):
    yield f"input: {response.input}"
    yield f"value: {response.rendered}"
    yield f"rational_part: {response.value.rational_part}"
    yield f"radicand: {response.value.radicand}"
    yield f"sign: {'+1' if response.value.sign > 0 else '-1'}"
    if response.two_a is not None:
        equation = response.equation
        flags = response.theorem2
        yield f"two_a: {response.two_a}"
        yield f"epsilon: {response.epsilon}"
        yield f"frac_two_a: {response.frac_two_a}"
        yield f"case: {response.case.value}"
        yield f"equation: {render_equation((int(equation.a2), int(equation.a1), int(equation.a0)))}"
        yield (f"theorem2: int_two_a={flag(flags.int_two_a)} neg_cn={flag(flags.neg_cn)} "
               f"palindrome={flag(flags.palindrome)}")
        yield f"congruence: {flag(response.congruence)}"
    yield f"convergents: {' '.join(response.convergents)}"


@router.command("eval", help="evaluate a periodic continued fraction exactly",
                arguments=[arg("cf", help='expansion such as "[0; (1,2,2,3)]"'), JSON_ARG, OUT_ARG])
@handle_exceptions
def cmd_eval(args) -> int:
    cf = parse_cf(args.cf)
    x = evaluate_general(cf)
    logger.info("%s = %s", args.cf, x)
    response = build_eval_response(args.cf, cf, x)
    emit(response, eval_lines(response), args.json, args.out)
    return 0
