from .rational import (
    Rational,
    rational_arith,
    isqrt,
    sqrt_rational,
    is_rational_square,
    fractional_part,
    render_rational,
)
from .quad import (
    QuadIrr,
    make_quad_irr,
    from_coefficient,
    conjugate,
    sign_of,
    compare_to_rational,
    in_window,
    same_field,
    add,
    multiply,
    reciprocal,
)
from .mobius import (
    MobiusMap,
    IDENTITY,
    RECIPROCAL,
    compose,
    mobius_apply,
)
