import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussphi.core import GaussianInt, div_one_plus_i, mul_one_plus_i
from gaussphi.errors import ContractViolation, DigitError, RangeOverflow
from gaussphi.expansion import (
    Digit,
    Expansion,
    _expand_reference,
    digits_to_text,
    eval_expansion,
    leading_term,
    minimal_expansion,
    text_to_digits,
)
from gaussphi.phi import phi

coord = st.integers(min_value=-(2**61), max_value=2**61)
gaussians = st.builds(GaussianInt, coord, coord)


def power(n):
    g = GaussianInt(1, 0)
    for _ in range(n):
        g = mul_one_plus_i(g)
    return g


def test_leading_term_worked_example():
    sub, d = leading_term(GaussianInt(90, 44), 11)
    assert sub == GaussianInt(32, 32) and d is Digit.NEG_I
    sub, d = leading_term(GaussianInt(42, -4), 8)
    assert sub == GaussianInt(16, 0) and d is Digit.ONE


def test_leading_term_negative_axis():
    g = GaussianInt(-5, 0)
    sub, d = leading_term(g, 3)
    assert sub == GaussianInt(-2, -2) and d is Digit.I
    # -2-2i divided by (1+i)^3 three times exactly gives i
    u = sub
    for _ in range(3):
        u = div_one_plus_i(u)
    assert u == GaussianInt(0, 1)
    assert phi(g - sub) < 3 and g - sub == GaussianInt(-3, 2)


def test_leading_term_contract():
    with pytest.raises(ContractViolation):
        leading_term(GaussianInt(90, 44), 10)


def test_worked_example_steps():
    # each remainder and subtrahend of the step-by-step example
    steps = [
        ((90, 44), 11, (32, 32)),
        ((58, 12), 9, (16, 16)),
        ((42, -4), 8, (16, 0)),
        ((26, -4), 7, (8, -8)),
        ((18, 4), 6, (8, 0)),
        ((10, 4), 5, (4, 4)),
        ((6, 0), 4, (4, 0)),
        ((2, 0), 2, (2, 0)),
    ]
    for g, n, sub in steps:
        g = GaussianInt(*g)
        assert phi(g) == n
        assert leading_term(g, n)[0] == GaussianInt(*sub)


def test_minimal_expansion_examples():
    assert minimal_expansion(GaussianInt(5, 0)).text == "mmmm"
    assert minimal_expansion(GaussianInt(0, 0)).text == "0"
    assert minimal_expansion(GaussianInt(1, 0)).text == "1"
    e = minimal_expansion(GaussianInt(90, 44))
    assert e.text == "m0111inn0m00"
    assert e.digit_at(11) is Digit.NEG_I and e.digit_at(6) is Digit.I and e.digit_at(2) is Digit.NEG_I
    assert all(e.digit_at(p) is Digit.ONE for p in (9, 8, 7))
    assert all(e.digit_at(p) is Digit.ZERO for p in (10, 3, 1, 0))


def test_five_identity():
    # 5 = -i((1+i)^3 + (1+i)^2 + (1+i) + 1)
    total = power(3) + power(2) + power(1) + power(0)
    assert GaussianInt(total.im, -total.re) == GaussianInt(5, 0)
    assert eval_expansion(text_to_digits("mmmm")) == GaussianInt(5, 0)


@pytest.mark.parametrize(
    "text, value",
    [("100", (0, 2)), ("mmmm", (5, 0)), ("1n", (0, 1)), ("", (0, 0)), ("n0001", (5, 0)), ("0", (0, 0))],
)
def test_eval(text, value):
    assert eval_expansion(text_to_digits(text)) == GaussianInt(*value)


def test_eval_overflow():
    with pytest.raises(RangeOverflow):
        eval_expansion(text_to_digits("1" + "0" * 200))


def test_codec():
    e = text_to_digits("mmmm")
    assert e.digits == (Digit.NEG_I,) * 4
    assert digits_to_text(e) == "mmmm"
    assert text_to_digits("100").digits == (Digit.ONE, Digit.ZERO, Digit.ZERO)
    assert Expansion.from_text("1nim0").text == "1nim0"
    with pytest.raises(DigitError):
        text_to_digits("x1")
    for d in Digit:
        assert Digit.from_gaussian(d.gaussian) is d


@given(gaussians)
def test_round_trip_and_length(g):
    e = minimal_expansion(g)
    assert eval_expansion(e) == g
    if g:
        assert len(e) == phi(g) + 1
        assert e.digits[0] is not Digit.ZERO
    assert set(e.text) <= set("01nim")


@given(st.builds(GaussianInt, st.integers(-(2**40), 2**40), st.integers(-(2**40), 2**40)))
def test_kernel_matches_reference_loop(g):
    assert minimal_expansion(g) == _expand_reference(g)


@given(gaussians.filter(bool))
def test_top_term_shape(g):
    n = phi(g)
    top = minimal_expansion(g).digits[0].gaussian
    k = n // 2
    term = power(n)
    term = GaussianInt(top.re * term.re - top.im * term.im, top.re * term.im + top.im * term.re)
    if n % 2 == 0:
        assert term in {GaussianInt(2**k, 0), GaussianInt(-(2**k), 0), GaussianInt(0, 2**k), GaussianInt(0, -(2**k))}
    else:
        assert term in {GaussianInt(s * 2**k, t * 2**k) for s in (1, -1) for t in (1, -1)}


@given(st.builds(GaussianInt, st.integers(-(2**30), 2**30), st.integers(-(2**30), 2**30)).filter(bool))
def test_descent(g):
    # walk the expansion top-down: each remainder has phi below the position just consumed
    e = minimal_expansion(g)
    top = len(e) - 1
    rest = g
    for pos in range(top, -1, -1):
        d = e.digit_at(pos)
        if d is Digit.ZERO:
            continue
        p = power(pos)
        rest = rest - GaussianInt(d.gaussian.re * p.re - d.gaussian.im * p.im, d.gaussian.re * p.im + d.gaussian.im * p.re)
        if rest:
            assert phi(rest) < pos
            assert e.digit_at(phi(rest)) is not Digit.ZERO


def test_small_box_is_minimal(digit_sum_levels):
    for (a, b), level in digit_sum_levels.items():
        e = minimal_expansion(GaussianInt(a, b))
        assert len(e) - 1 == level
