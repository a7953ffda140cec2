import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussphi.core import (
    LIMIT,
    GaussianInt,
    Unit,
    UnitTransform,
    conj,
    div_one_plus_i,
    format_gaussian,
    mul_one_plus_i,
    mul_unit,
    octant_normalize,
    one_plus_i_valuation,
    parse_gaussian,
    two_valuation,
)
from gaussphi.errors import NotDivisible, ParseError, RangeOverflow, ZeroInput

coord = st.integers(min_value=-(2**60), max_value=2**60)
gaussians = st.builds(GaussianInt, coord, coord)
nonzero = gaussians.filter(bool)
units = st.sampled_from(list(Unit))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("90+44i", (90, 44)),
        ("-i", (0, -1)),
        ("5", (5, 0)),
        ("i", (0, 1)),
        ("3-2i", (3, -2)),
        ("-7", (-7, 0)),
        ("+4i", (0, 4)),
        ("-12-i", (-12, -1)),
        ("  2i ", (0, 2)),
        ("0", (0, 0)),
    ],
)
def test_parse(text, expected):
    assert parse_gaussian(text).astuple() == expected


@pytest.mark.parametrize("text", ["", "i5", "1+", "1 + 2i", "2.5", "1+2j", "--1", "ii", "1+2i3"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_gaussian(text)


def test_parse_out_of_range():
    with pytest.raises(RangeOverflow):
        parse_gaussian(str(2**62))
    assert parse_gaussian(str(2**62 - 1)).re == 2**62 - 1


@pytest.mark.parametrize(
    "g, text",
    [((90, 44), "90+44i"), ((0, -1), "-i"), ((0, 0), "0"), ((0, 1), "i"), ((3, -1), "3-i"), ((0, -5), "-5i"), ((-2, 0), "-2")],
)
def test_format(g, text):
    assert format_gaussian(GaussianInt(*g)) == text


@given(gaussians)
def test_format_parse_round_trip(g):
    assert parse_gaussian(format_gaussian(g)) == g


def test_range_is_checked():
    with pytest.raises(RangeOverflow):
        GaussianInt(LIMIT, 0)
    with pytest.raises(RangeOverflow):
        GaussianInt(0, -LIMIT)
    big = GaussianInt(LIMIT - 1, LIMIT - 1)
    with pytest.raises(RangeOverflow):
        mul_one_plus_i(big)
    with pytest.raises(TypeError):
        GaussianInt(1.5, 0)


@pytest.mark.parametrize(
    "g, u, expected",
    [((1, 0), Unit.I, (0, 1)), ((2, 1), Unit.NEG_ONE, (-2, -1)), ((3, -2), Unit.NEG_I, (-2, -3)), ((3, -2), Unit.ONE, (3, -2))],
)
def test_mul_unit(g, u, expected):
    assert mul_unit(GaussianInt(*g), u).astuple() == expected


@pytest.mark.parametrize("g, expected", [((3, 4), (3, -4)), ((5, 0), (5, 0)), ((0, -1), (0, 1))])
def test_conj(g, expected):
    assert conj(GaussianInt(*g)).astuple() == expected


@pytest.mark.parametrize("g, expected", [((2, 1), (1, 3)), ((1, 0), (1, 1)), ((0, 0), (0, 0))])
def test_mul_one_plus_i(g, expected):
    assert mul_one_plus_i(GaussianInt(*g)).astuple() == expected


@pytest.mark.parametrize("g, expected", [((1, 3), (2, 1)), ((1, 1), (1, 0))])
def test_div_one_plus_i(g, expected):
    assert div_one_plus_i(GaussianInt(*g)).astuple() == expected


def test_div_one_plus_i_not_divisible():
    with pytest.raises(NotDivisible):
        div_one_plus_i(GaussianInt(1, 0))


@pytest.mark.parametrize("g, j", [((90, 44), 1), ((4, 0), 2), ((3, 5), 0), ((0, -8), 3), ((-12, 20), 2)])
def test_two_valuation(g, j):
    assert two_valuation(GaussianInt(*g)) == j


def test_two_valuation_zero():
    with pytest.raises(ZeroInput):
        two_valuation(GaussianInt(0, 0))


@given(gaussians)
def test_one_plus_i_algebra(g):
    assert div_one_plus_i(mul_one_plus_i(g)) == g
    # (1+i)^2 = 2i
    assert mul_one_plus_i(mul_one_plus_i(g)) == mul_unit(g.scale(2), Unit.I)


@given(gaussians)
def test_one_plus_i_divides_iff_sum_even(g):
    if (g.re + g.im) % 2 == 0:
        assert mul_one_plus_i(div_one_plus_i(g)) == g
    else:
        with pytest.raises(NotDivisible):
            div_one_plus_i(g)


@given(nonzero, units)
def test_valuation_laws(g, u):
    assert two_valuation(g.scale(2)) == two_valuation(g) + 1
    assert two_valuation(mul_unit(g, u)) == two_valuation(g)
    assert one_plus_i_valuation(mul_one_plus_i(g)) == one_plus_i_valuation(g) + 1


def test_one_plus_i_valuation_by_division():
    for re in range(-20, 21):
        for im in range(-20, 21):
            g = GaussianInt(re, im)
            if not g:
                continue
            count, h = 0, g
            while (h.re + h.im) % 2 == 0:
                h = div_one_plus_i(h)
                count += 1
            assert one_plus_i_valuation(g) == count


def test_octant_normalize_examples():
    g = GaussianInt(-44, 90)
    h, t = octant_normalize(g)
    assert h == GaussianInt(90, 44)
    assert t.apply(g) == h
    assert t.inverse.apply(h) == g

    h, t = octant_normalize(GaussianInt(3, 3))
    assert h == GaussianInt(3, 3) and t.is_identity

    g = GaussianInt(0, -7)
    h, t = octant_normalize(g)
    assert h == GaussianInt(7, 0) and not t.conjugated and t.apply(g) == h


@given(gaussians)
def test_octant_normalize_property(g):
    h, t = octant_normalize(g)
    assert h.re >= h.im >= 0
    assert t.apply(g) == h
    assert t.inverse.apply(h) == g
    assert bool(h) == bool(g)


@given(gaussians, units, st.booleans())
def test_transform_inverse(g, u, c):
    t = UnitTransform(u, c)
    assert t.inverse.apply(t.apply(g)) == g
    assert t.apply(t.inverse.apply(g)) == g
