from fractions import Fraction

import pytest

from octacat.poly import ONE, PolyQ, T, ZERO


def test_basic_arithmetic():
    p = T * T - 3 * T + 1
    q = T + 2
    assert p + q == T * T - 2 * T + 3
    assert (T + 1) * (T - 1) == T * T - 1
    assert (2 * T) ** 3 == PolyQ.t(8, 3)
    assert -(T - 1) == 1 - T


def test_zero_handling():
    assert (T - T).is_zero()
    assert ZERO.degree == -1
    assert str(T - T) == "0"
    assert PolyQ({2: 0, 0: 5}) == PolyQ.const(5)


def test_evaluation():
    p = 2 * T * T - PolyQ.const(Fraction(1, 2))
    assert p(Fraction(3)) == Fraction(35, 2)
    assert p(Fraction(1, 2)) == 0


def test_constant_value():
    assert PolyQ.const(Fraction(7, 3)).constant_value() == Fraction(7, 3)
    assert ZERO.constant_value() == 0
    with pytest.raises(ValueError):
        T.constant_value()


@pytest.mark.parametrize(
    "poly",
    [
        ZERO,
        ONE,
        T,
        -T,
        2 * T,
        PolyQ.const(Fraction(-1, 2)),
        T * T - PolyQ.const(Fraction(3, 2)) * T + 1,
        PolyQ.t(Fraction(1, 7), 5) - T,
    ],
)
def test_string_round_trip(poly):
    assert PolyQ.parse(str(poly)) == poly


def test_parse_compact_forms():
    assert PolyQ.parse("2t") == 2 * T
    assert PolyQ.parse("-t^2+1/2") == -T * T + PolyQ.const(Fraction(1, 2))
    assert PolyQ.parse("0") == ZERO
    with pytest.raises(ValueError):
        PolyQ.parse("t+")
    with pytest.raises(ValueError):
        PolyQ.parse("spam")
