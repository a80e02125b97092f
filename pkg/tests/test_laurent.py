from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from satake_fl.laurent import LaurentPoly, parse_vcoeff_json, render_vcoeff, vcoeff_json

polys = st.dictionaries(st.integers(-6, 6), st.integers(-4, 4), max_size=5).map(LaurentPoly)


def test_no_stored_zeros():
    p = LaurentPoly({0: 1, 2: 0})
    assert p.terms == {0: 1}
    assert not (p - p)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys.filter(lambda p: bool(p) and abs(p.terms[p.max_exp()]) == 1))
def test_exact_division(a, b):
    assert (a * b).exact_div(b) == a


def test_evaluate_q_rejects_odd_powers():
    assert LaurentPoly({2: 1, 0: -1}).evaluate_q(3) == 2
    assert LaurentPoly({-2: 1}).evaluate_q(3) == Fraction(1, 3)
    with pytest.raises(ValueError):
        LaurentPoly({1: 1}).evaluate_q(4)


def test_rendering():
    assert render_vcoeff(LaurentPoly({0: 1, 2: -1})) == "1-q"
    assert render_vcoeff(LaurentPoly({4: 1, 2: -1})) == "q^2-q"
    assert render_vcoeff(LaurentPoly({2: 1, 0: -1})) == "q-1"
    assert render_vcoeff(LaurentPoly({-2: 1})) == "q^-1"


@given(polys)
def test_json_round_trip(p):
    assert parse_vcoeff_json(vcoeff_json(p)) == p
