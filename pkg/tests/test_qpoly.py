from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckewalk.qpoly import QPoly, parse_rational, q_int, rational_from_json, rational_to_json

polys = st.lists(st.integers(-9, 9), max_size=6).map(QPoly)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def test_q_int_examples():
    assert q_int(1).coeffs == (1,)
    assert q_int(3).coeffs == (1, 1, 1)
    assert q_int(2).coeffs == (1, 1)


def test_q_int_rejects_zero():
    with pytest.raises(ValueError):
        q_int(0)


def test_add_identity():
    assert q_int(2) + QPoly() == q_int(2)


def test_mul_example():
    # (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3, by schoolbook convolution by hand
    assert (q_int(2) * q_int(3)).coeffs == (1, 2, 2, 1)


def test_pow_zero_is_one():
    assert q_int(2) ** 0 == QPoly((1,))
    with pytest.raises(ValueError):
        q_int(2) ** -1


def test_eval_examples():
    assert q_int(3).eval(1) == 3
    assert q_int(2).eval(Fraction(1, 2)) == Fraction(3, 2)
    assert QPoly().eval(Fraction(7, 3)) == 0


def test_eval_returns_fraction():
    assert isinstance(q_int(3).eval(1), Fraction)


@pytest.mark.parametrize("i", range(1, 51))
def test_q_int_at_one_counts_terms(i):
    assert q_int(i).eval(1) == i


def test_no_trailing_zeros():
    assert QPoly((0, 1, 0, 0)).coeffs == (0, 1)
    assert QPoly((0, 0)).coeffs == ()
    assert not QPoly()
    assert QPoly((1,))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + QPoly() == a
    assert a * QPoly((1,)) == a
    assert a - a == QPoly()


@given(polys, polys, rationals)
def test_eval_is_ring_homomorphism(a, b, x):
    assert (a * b).eval(x) == a.eval(x) * b.eval(x)
    assert (a + b).eval(x) == a.eval(x) + b.eval(x)


@given(polys, st.integers(0, 5))
def test_pow_matches_repeated_mul(a, e):
    expected = QPoly((1,))
    for _ in range(e):
        expected = expected * a
    assert a ** e == expected


@given(polys)
def test_json_round_trip(a):
    assert QPoly.from_json(a.to_json()) == a


def test_json_uses_decimal_strings():
    assert (q_int(2) ** 2).to_json() == ["1", "2", "1"]


def test_str_rendering():
    assert str(QPoly()) == "0"
    assert str(q_int(2)) == "1 + q"
    assert str(QPoly((0, 1))) == "q"
    assert str(QPoly((-1, 1))) == "-1 + q"
    assert str(QPoly((1, 2, 2, 1))) == "1 + 2q + 2q^2 + q^3"


def test_rational_json_round_trip():
    x = Fraction(-3, 7)
    assert rational_from_json(rational_to_json(x)) == x


def test_parse_rational():
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("3") == 3
    assert parse_rational("0.25") == Fraction(1, 4)
    with pytest.raises(ValueError):
        parse_rational("one half")
