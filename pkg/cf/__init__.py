from .convergents import (
    build_convergents,
    check_digits,
)
from .theorems import (
    epsilon,
    fractional_part_2a,
    theorem1_report,
    theorem2_report,
    is_palindromic_prefix,
    congruence_check,
    determinant_congruence,
    quadratic_equation,
    discriminant,
    discriminant_poly_in_cn,
    zero_periodic_table,
)
from .evaluate import (
    Window,
    UNIT_INTERVAL,
    ABOVE_ONE,
    mobius_fixed_point,
    zero_periodic_map,
    purely_periodic_map,
    evaluate_zero_periodic,
    evaluate_purely_periodic,
    evaluate_general,
)
from .expand import (
    SurdState,
    to_surd_state,
    exact_floor,
    advance,
    minimal_period,
    canonicalize,
    expand,
    digit_stream,
)
from .numeric import (
    numeric_agreement,
    numeric_gap,
    truncated_value,
)
from .harness import (
    run_enumeration,
    check_block,
    iter_blocks,
    expected_palindromic_count,
    smoke_test,
    smoke_checks,
    render_block,
)
