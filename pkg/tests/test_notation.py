import random
from fractions import Fraction

import pytest

from arith import make_quad_irr
from cf import evaluate_zero_periodic, iter_blocks
from models import CFExpansion
from notation import parse_cf, parse_quad, render_cf, render_equation, render_quad, tokenize
from utils.exceptions import DegenerateRadicand, InvalidDigit, NonPositiveRadicand, ParseError


def test_tokenize_offsets():
    kinds = [(t.kind, t.start, t.end) for t in tokenize("sqrt(39/44)")]
    assert kinds == [("SQRT", 0, 4), ("LPAREN", 4, 5), ("INT", 5, 7), ("SLASH", 7, 8), ("INT", 8, 10),
                     ("RPAREN", 10, 11), ("EOF", 11, 11)]


def test_parse_cf():
    assert parse_cf("[0; (1,2,2,3)]") == CFExpansion(initial=(0,), repeating=(1, 2, 2, 3))
    assert parse_cf("[0; 1, (16,11,1,3,2,3,1,11,16,2)]") == \
        CFExpansion(initial=(0, 1), repeating=(16, 11, 1, 3, 2, 3, 1, 11, 16, 2))
    assert parse_cf("[1; (2)]") == CFExpansion(initial=(1,), repeating=(2,))
    assert parse_cf("[(1)]") == CFExpansion(repeating=(1,))
    assert parse_cf("[5]") == CFExpansion(initial=(5,))
    assert parse_cf("[-3; 1, 2]") == CFExpansion(initial=(-3, 1, 2))
    assert parse_cf("  [ 0 ,(1 , 2) ]  ") == CFExpansion(initial=(0,), repeating=(1, 2))


def test_invalid_digit_span():
    with pytest.raises(InvalidDigit) as info:
        parse_cf("[0; (1,0,2)]")
    assert (info.value.start, info.value.end) == (7, 8)
    with pytest.raises(InvalidDigit):
        parse_cf("[0; -1, (2)]")
    with pytest.raises(InvalidDigit):
        CFExpansion()


def test_parse_errors():
    with pytest.raises(ParseError) as info:
        parse_cf("[0; (1,2")
    assert info.value.expected == ["')'"]
    assert (info.value.start, info.value.end) == (8, 8)

    with pytest.raises(ParseError) as info:
        parse_cf("[0; x]")
    assert info.value.start == 4

    with pytest.raises(ParseError) as info:
        parse_cf("[0; (1)] 5")
    assert info.value.expected == ["end of input"]

    with pytest.raises(ParseError):
        parse_cf("[0;]")
    with pytest.raises(ParseError):
        parse_cf("[0; (1)!")


def test_parse_quad():
    assert parse_quad("(-19 + sqrt(837))/14") == make_quad_irr(Fraction(-19, 14), 1, Fraction(837, 196))
    assert parse_quad("sqrt(39/44)") == make_quad_irr(0, 1, Fraction(39, 44))
    assert parse_quad("-sqrt(2)") == make_quad_irr(0, -1, 2)
    assert parse_quad("1/2 - sqrt(5/4)") == make_quad_irr(Fraction(1, 2), -1, Fraction(5, 4))
    assert parse_quad("(1 + sqrt(2))/-2") == make_quad_irr(Fraction(-1, 2), -1, Fraction(1, 2))


def test_parse_quad_errors():
    with pytest.raises(DegenerateRadicand) as info:
        parse_quad("sqrt(4)")
    assert (info.value.start, info.value.end) == (5, 6)
    with pytest.raises(NonPositiveRadicand):
        parse_quad("1 + sqrt(-2)")
    with pytest.raises(ParseError):
        parse_quad("sqrt(1/0)")
    with pytest.raises(ParseError):
        parse_quad("(1 + sqrt(2))/0")
    with pytest.raises(ParseError):
        parse_quad("1 sqrt(2)")


def test_render_cf():
    assert render_cf(CFExpansion(initial=(0,), repeating=(1, 2, 2, 3))) == "[0; (1,2,2,3)]"
    assert render_cf(CFExpansion(initial=(0, 1), repeating=(16, 11, 1, 3, 2, 3, 1, 11, 16, 2))) == \
        "[0; 1, (16,11,1,3,2,3,1,11,16,2)]"
    assert render_cf(CFExpansion(repeating=(1,))) == "[(1)]"
    assert render_cf(CFExpansion(initial=(5,))) == "[5]"
    assert render_cf(CFExpansion(initial=(0, 1, 2))) == "[0; 1, 2]"


RENDERED = [
    (make_quad_irr(Fraction(-19, 14), 1, Fraction(837, 196)), "(-19 + sqrt(837))/14"),
    (make_quad_irr(0, 1, 2), "sqrt(2)"),
    (make_quad_irr(Fraction(-1, 2), 1, Fraction(39, 44)), "(-11 + sqrt(429))/22"),
    (make_quad_irr(Fraction(-1, 2), 1, Fraction(5, 4)), "(-1 + sqrt(5))/2"),
    (make_quad_irr(1, -1, 2), "1 - sqrt(2)"),
    (make_quad_irr(0, 1, Fraction(39, 44)), "sqrt(39/44)"),
]


@pytest.mark.parametrize("x, text", RENDERED)
def test_render_quad(x, text):
    assert render_quad(x) == text
    assert parse_quad(text) == x


def test_render_equation():
    assert render_equation((7, 19, -17)) == "7x^2+19x-17=0"
    assert render_equation((77, 77, -49)) == "77x^2+77x-49=0"
    assert render_equation((1, -1, -1)) == "x^2-x-1=0"
    assert render_equation((2, 0, -3)) == "2x^2-3=0"


def test_render_parse_round_trip():
    for block in iter_blocks(3, 4):
        x = evaluate_zero_periodic(block)
        assert parse_quad(render_quad(x)) == x
        cf = CFExpansion(initial=(0,), repeating=block)
        assert parse_cf(render_cf(cf)) == cf


NON_ASCII = [
    (parse_cf, "[0;\u00a0(1)]", 3),
    (parse_cf, "[0; (1,\u00e9)]", 7),
    (parse_cf, "[\u00a02]", 1),
    (parse_quad, "sqrt(2)\u00a0", 7),
    (parse_quad, "1 +\u00a0sqrt(2)", 3),
]


@pytest.mark.parametrize("parse, text, offset", NON_ASCII)
def test_non_ascii_is_rejected_at_its_byte_offset(parse, text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.start, info.value.end) == (offset, offset + 1)
    assert offset == len(text[:offset].encode("utf-8"))


def test_letters_other_than_sqrt():
    with pytest.raises(ParseError) as info:
        parse_quad("sqrtx(2)")
    assert (info.value.start, info.value.end) == (4, 5)
    with pytest.raises(ParseError) as info:
        parse_cf("[0; (1)]sqrt")
    assert info.value.start == 8


def _random_expansion(rng: random.Random) -> CFExpansion:
    initial = ()
    if rng.random() < 0.8:
        head = rng.randint(-10 ** 6, 10 ** 6)
        initial = (head,) + tuple(rng.randint(1, 10 ** 6) for _ in range(rng.randint(0, 10)))
    repeating = tuple(rng.randint(1, 10 ** 6) for _ in range(rng.randint(0 if initial else 1, 50)))
    return CFExpansion(initial=initial, repeating=repeating)


def _check_render_round_trip(count: int, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        cf = _random_expansion(rng)
        assert parse_cf(render_cf(cf)) == cf


def test_render_cf_round_trip_sample():
    _check_render_round_trip(2000, seed=11)


@pytest.mark.slow
def test_render_cf_round_trip_full():
    _check_render_round_trip(100_000, seed=12)


SPANNED = (ParseError, InvalidDigit, DegenerateRadicand, NonPositiveRadicand)
FUZZ_ALPHABET = list("[]();,-+/ 0123456789") + ["sqrt", "sqrt(", "sq", "x", "\u00a0", "\u00e9"]


def _spanned_error(parse, text):
    try:
        parse(text)
    except SPANNED as e:
        return e
    return None


def test_malformed_input_errors_have_valid_spans():
    rng = random.Random(20240601)
    for _ in range(5000):
        text = "".join(rng.choice(FUZZ_ALPHABET) for _ in range(rng.randint(0, 14)))
        for parse in (parse_cf, parse_quad):
            error = _spanned_error(parse, text)
            if error is None:
                continue
            assert 0 <= error.start <= error.end <= len(text)
            assert error.start == len(text[:error.start].encode("utf-8"))
            if not isinstance(error, ParseError) or error.start == error.end:
                continue
            # 문제 글자를 지우고 다시 파싱하면 성공하거나 더 뒤에서 실패
            shorter = text[:error.start] + text[error.start + 1:]
            again = _spanned_error(parse, shorter)
            if isinstance(again, ParseError):
                assert again.start >= error.start, (text, shorter)
