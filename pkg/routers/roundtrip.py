import logging

from cf import canonicalize, digit_stream, evaluate_general, expand
from models import QuadValue, RoundtripResponse
from notation import parse_cf, render_cf, render_quad
from routers.output import JSON_ARG, OUT_ARG, emit
from routers.router import CommandRouter, arg, positive_int
from utils.config import variables
from utils.exceptions import PropertyViolation, handle_exceptions

logger = logging.getLogger(__name__)
router = CommandRouter()


# 평가 -> 재전개 후 앞 K 자리 비교
@router.command("roundtrip", help="evaluate an expansion, expand the value again and compare digit streams",
                arguments=[
                    arg("cf", help='expansion such as "[0; (1,2,2,5)]"'),
                    arg("--digits", type=positive_int, default=None, help="number of digits to compare"),
                    JSON_ARG,
                    OUT_ARG,
                ])
@handle_exceptions
def cmd_roundtrip(args) -> int:
    k = args.digits or variables.ROUNDTRIP_DIGITS
    cf = parse_cf(args.cf)
    canonical = canonicalize(cf)
    x = evaluate_general(cf)
    expansion = expand(x)
    passed = digit_stream(cf, k) == digit_stream(expansion, k)
    logger.info("roundtrip %s -> %s over %d digits: %s", args.cf, render_cf(expansion), k, passed)

    response = RoundtripResponse(
        input=args.cf,
        canonical=render_cf(canonical),
        reduced=canonical != cf,
        value=QuadValue.from_quad(x),
        rendered=render_quad(x),
        expansion=render_cf(expansion),
        digits=k,
        status="PASS" if passed else "FAIL",
    )
    lines = [f"input: {response.input}"]
    if response.reduced:
        lines.append(f"canonical: {response.canonical}")
    lines += [
        f"value: {response.rendered}",
        f"expansion: {response.expansion}",
        f"digits: {k}",
        response.status,
    ]
    emit(response, lines, args.json, args.out)
    if not passed:
        raise PropertyViolation(f"re-expansion of {args.cf} differs within the first {k} digits")
    return 0
