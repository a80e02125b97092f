import pytest
from hypothesis import given, strategies as st

from satake_fl.localfield import GF, LSeries, LiteralError, format_series, parse_series


def test_mixed_coefficient_literal():
    x = parse_series("pi^-1 + 1 + 2*pi^3 (mod p=3, deg=1)")
    assert x.field == GF(3)
    assert x.digits() == {-1: 1, 0: 1, 3: 2}
    assert x.prec is None


def test_extension_coefficients():
    f = GF(2, 2)
    x = parse_series("(g+1)*pi^-2 + g*pi + g^2 (mod p=2, deg=2)")
    assert x.digits() == {-2: f.add(f.gen, 1), 0: f.mul(f.gen, f.gen), 1: f.gen}
    assert parse_series("g", f).digits() == {0: f.gen}
    assert parse_series("2*g*pi", GF(3, 2)).digits() == {1: GF(3, 2).mul(2, GF(3, 2).gen)}


def test_signs_and_precision():
    f = GF(3)
    x = parse_series("1 - pi + O(pi^4)", f)
    assert x.digits() == {0: 1, 1: 2} and x.prec == 4
    y = parse_series("-pi^-1 + pi^5 + O(pi^3)", f)
    assert y.digits() == {-1: 2} and y.prec == 3


def test_errors():
    with pytest.raises(LiteralError):
        parse_series("1 + pi")
    with pytest.raises(LiteralError):
        parse_series("1 + x (mod p=3)")
    with pytest.raises(LiteralError):
        parse_series("1 (mod p=3, deg=1)", GF(3, 2))


@given(st.dictionaries(st.integers(-4, 6), st.integers(0, 8), max_size=5), st.one_of(st.none(), st.integers(7, 9)))
def test_round_trip(digits, prec):
    f = GF(3, 2)
    x = LSeries.from_dict(f, {e: c for e, c in digits.items()}, prec)
    assert parse_series(format_series(x)) == x
