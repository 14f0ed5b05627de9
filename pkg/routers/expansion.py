from cf import expand
from models import ExpandResponse, QuadValue
from notation import parse_quad, render_cf
from routers.output import JSON_ARG, OUT_ARG, emit
from routers.router import CommandRouter, arg, positive_int
from utils.config import variables
from utils.exceptions import handle_exceptions

router = CommandRouter()


@router.command("expand", help="expand a quadratic irrational into its periodic continued fraction",
                arguments=[
                    arg("quad", help='value such as "sqrt(39/44)" or "(-19 + sqrt(837))/14"'),
                    arg("--steps", type=positive_int, default=None, help="cycle-detection step limit"),
                    JSON_ARG,
                    OUT_ARG,
                ])
@handle_exceptions
def cmd_expand(args) -> int:
    x = parse_quad(args.quad)
    cf = expand(x, args.steps or variables.MAX_STEPS)
    response = ExpandResponse(
        input=args.quad,
        value=QuadValue.from_quad(x),
        expansion=render_cf(cf),
        initial=[str(digit) for digit in cf.initial],
        repeating=[str(digit) for digit in cf.repeating],
        period=cf.period,
    )
    emit(response, [response.expansion], args.json, args.out)
    return 0
