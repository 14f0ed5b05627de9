import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial, reduce
from itertools import product
from math import gcd
from typing import Iterator, List, Optional, Sequence, Tuple

from arith import compare_to_rational, conjugate, in_window, make_quad_irr, multiply
from cf.evaluate import evaluate_general, evaluate_purely_periodic, evaluate_zero_periodic
from cf.expand import canonicalize, expand
from cf.numeric import numeric_agreement
from cf.theorems import (
    determinant_congruence,
    discriminant_poly_in_cn,
    fractional_check,
    quadratic_equation,
    theorem1_report,
    theorem2_report,
    zero_periodic_table,
)
from models import CFExpansion, EnumerationReport, Violation
from utils.config import variables

logger = logging.getLogger(__name__)


def iter_prefixes(max_len: int, max_digit: int) -> Iterator[Tuple[int, ...]]:
    """길이 순, 같은 길이는 사전순. 각 prefix 뒤에 c_n = 1..max_digit 이 붙음"""
    for n in range(1, max_len + 1):
        yield from product(range(1, max_digit + 1), repeat=n - 1)


def iter_blocks(max_len: int, max_digit: int) -> Iterator[Tuple[int, ...]]:
    for prefix in iter_prefixes(max_len, max_digit):
        for last in range(1, max_digit + 1):
            yield prefix + (last,)


def expected_palindromic_count(max_len: int, max_digit: int) -> int:
    # 길이 n-1 회문 개수 D^ceil((n-1)/2), c_n 은 자유
    return sum(max_digit ** (n // 2) * max_digit for n in range(1, max_len + 1))


def check_block(block: Sequence[int]) -> Tuple[List[str], Fraction, dict]:
    """블록 하나에 대한 성질 검사. (실패한 성질, 값에서 얻은 epsilon, 집계용 값)"""
    block = tuple(block)
    n, last = len(block), block[-1]
    failed = []

    table = zero_periodic_table(block)
    report = theorem1_report(block)
    x = evaluate_zero_periodic(block)
    y = evaluate_purely_periodic(block)
    eps_from_value = 2 * x.rat + last

    if not abs(report.epsilon) < 1:
        failed.append("epsilon_bound")
    if 2 * x.rat != report.two_a:
        failed.append("two_a_identity")
    flags = set(theorem2_report(block)) | {report.congruence_holds, report.epsilon_zero}
    if len(flags) != 1:
        failed.append("palindrome_equivalence")
    if not determinant_congruence(table):
        failed.append("determinant_congruence")
    if not (all(table.determinant(k) == (-1) ** (k + 1) for k in range(n + 1))
            and all(gcd(table.p_at(k), table.q_at(k)) == 1 for k in range(n + 1))
            and table.is_monotone()):
        failed.append("convergent_table")

    expansion = expand(x)
    if expansion != canonicalize(CFExpansion(initial=(0,), repeating=block)) or evaluate_general(expansion) != x:
        failed.append("expansion_roundtrip")
    if multiply(y, x) != 1:
        failed.append("reciprocal")
    if not (in_window(x, 0, 1) and compare_to_rational(y, 1) > 0 and in_window(conjugate(y), -1, 0)):
        failed.append("galois_range")
    if not fractional_check(report):
        failed.append("fractional_part")

    A, B, C = discriminant_poly_in_cn(block[:-1])
    a2, a1, a0 = quadratic_equation(block)
    direct = a1 * a1 - 4 * a2 * a0
    if A * last * last + B * last + C != direct or x.radicand != Fraction(direct, 4 * a2 * a2):
        failed.append("discriminant_poly")

    facts = {
        "epsilon_zero": report.epsilon_zero,
        "palindromic": report.palindromic,
        "purely_integer": (2 * y.rat).denominator == 1,
    }
    return failed, eps_from_value, facts


def check_prefix(prefix: Tuple[int, ...], max_digit: int, max_len: int = 0) -> EnumerationReport:
    """prefix 하나 (c_n = 1..max_digit) 에 대한 부분 리포트"""
    partial_report = EnumerationReport(max_len=max_len, max_digit=max_digit)
    violations = []
    epsilons = []
    for last in range(1, max_digit + 1):
        block = prefix + (last,)
        failed, eps_from_value, facts = check_block(block)
        violations.extend(Violation(block=block, property=name) for name in failed)
        epsilons.append(eps_from_value)
        partial_report.blocks_checked += 1
        partial_report.epsilon_zero_count += facts["epsilon_zero"]
        partial_report.palindromic_prefix_count += facts["palindromic"]
        partial_report.purely_periodic_integer_two_a_count += facts["purely_integer"]
    # epsilon 은 c_n 과 무관해야 함
    if len(set(epsilons)) > 1:
        violations.extend(Violation(block=prefix + (last,), property="epsilon_depends_on_last_digit")
                          for last in range(1, max_digit + 1))
    partial_report.violations = violations
    logger.debug("prefix %s: %d blocks, %d violations", list(prefix), max_digit, len(violations))
    return partial_report


def _violation_key(v: Violation):
    return len(v.block), v.block, v.property


# 교환/결합 법칙을 만족하는 병합
def merge_reports(a: EnumerationReport, b: EnumerationReport) -> EnumerationReport:
    return EnumerationReport(
        max_len=max(a.max_len, b.max_len),
        max_digit=max(a.max_digit, b.max_digit),
        blocks_checked=a.blocks_checked + b.blocks_checked,
        violations=sorted(a.violations + b.violations, key=_violation_key),
        epsilon_zero_count=a.epsilon_zero_count + b.epsilon_zero_count,
        palindromic_prefix_count=a.palindromic_prefix_count + b.palindromic_prefix_count,
        purely_periodic_integer_two_a_count=a.purely_periodic_integer_two_a_count
        + b.purely_periodic_integer_two_a_count,
        numeric_checked=a.numeric_checked + b.numeric_checked,
    )


def smoke_checks() -> List[Tuple[Tuple[int, ...], str, bool]]:
    """기준 예제 두 개 확인. (블록, 요약, 통과 여부)"""
    first = theorem1_report((1, 2, 2, 3))
    first_ok = (first.two_a == Fraction(-19, 7) and first.epsilon == Fraction(2, 7)
                and evaluate_zero_periodic((1, 2, 2, 3)) == make_quad_irr(Fraction(-19, 14), 1, Fraction(837, 196)))

    second = theorem1_report((2, 3, 1, 3, 2, 1))
    root = make_quad_irr(0, 1, Fraction(39, 44))
    second_ok = (second.two_a == -1 and second.epsilon == 0
                 and evaluate_zero_periodic((2, 3, 1, 3, 2, 1)) == make_quad_irr(Fraction(-1, 2), 1, Fraction(39, 44))
                 and expand(root) == CFExpansion(initial=(0, 1), repeating=(16, 11, 1, 3, 2, 3, 1, 11, 16, 2)))

    return [
        (first.block, f"two_a={first.two_a} epsilon={first.epsilon}", first_ok),
        (second.block, f"two_a={second.two_a} epsilon={second.epsilon}", second_ok),
    ]


def smoke_test() -> List[Violation]:
    failures = []
    for block, summary, ok in smoke_checks():
        logger.info("smoke %s: %s -> %s", render_block(block), summary, ok)
        if not ok:
            failures.append(Violation(block=block, property="smoke"))
    return failures


def render_block(block: Sequence[int]) -> str:
    return f"[0; ({','.join(map(str, block))})]"


def numeric_sample_check(max_len: int, max_digit: int, sample: int, seed: int = 0) -> EnumerationReport:
    """추출한 블록의 정확한 값과 잘린 연분수의 수치값 비교"""
    blocks = list(iter_blocks(max_len, max_digit))
    chosen = random.Random(seed).sample(blocks, min(sample, len(blocks)))
    violations = [
        Violation(block=block, property="numeric_agreement")
        for block in chosen
        if not numeric_agreement(evaluate_zero_periodic(block), CFExpansion(initial=(0,), repeating=block))
    ]
    return EnumerationReport(max_len=max_len, max_digit=max_digit, numeric_checked=len(chosen),
                             violations=violations)


def run_enumeration(max_len: int, max_digit: int, workers: int = None, numeric_sample: int = 0,
                    seed: int = 0, smoke: Optional[List[Violation]] = None) -> EnumerationReport:
    if max_len < 1 or max_digit < 1:
        raise ValueError("max_len and max_digit must be >= 1")
    workers = workers or variables.WORKERS
    started = time.perf_counter()

    if smoke is None:
        smoke = smoke_test()
    report = EnumerationReport(max_len=max_len, max_digit=max_digit, violations=smoke)
    task = partial(check_prefix, max_digit=max_digit, max_len=max_len)
    prefixes = iter_prefixes(max_len, max_digit)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            partials = list(executor.map(task, prefixes, chunksize=64))
    else:
        partials = [task(prefix) for prefix in prefixes]
    report = reduce(merge_reports, partials, report)

    if numeric_sample:
        report = merge_reports(report, numeric_sample_check(max_len, max_digit, numeric_sample, seed))

    report.expected_palindromic_count = expected_palindromic_count(max_len, max_digit)
    if report.epsilon_zero_count != report.palindromic_prefix_count \
            or report.palindromic_prefix_count != report.expected_palindromic_count:
        report.violations = report.violations + [Violation(block=(), property="palindrome_count")]
    report.elapsed = time.perf_counter() - started
    logger.info("checked %d blocks (len <= %d, digits <= %d) in %.2fs, %d violations",
                report.blocks_checked, max_len, max_digit, report.elapsed, len(report.violations))
    return report
