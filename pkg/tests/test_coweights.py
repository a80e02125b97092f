import itertools

import pytest
from hypothesis import given, strategies as st

from satake_fl.coweights import (
    Coweight,
    dominance_leq,
    dominant_coweights,
    enumerate_below,
    rho2,
    split_plus_minus,
    sup_norm,
    weight,
)
from satake_fl.errors import DimensionMismatch, NotDominant
from satake_fl.oracles import enumerate_below_bruteforce

from strategies import coweights, coweights_of

C = Coweight


def test_constructor_rejects_unsorted():
    with pytest.raises(NotDominant):
        C((0, 1))
    with pytest.raises(ValueError):
        C(())


def test_parse_and_render():
    a = C.parse("2,0,-1")
    assert a.parts == (2, 0, -1)
    assert str(a) == "2,0,-1"
    assert C.parse(str(a)) == a


@pytest.mark.parametrize(
    "a,b,want",
    [((1, 1), (2, 0), True), ((1, 0), (1, 0), True), ((1, -1), (2, -2), True), ((2, 0), (1, 1), False), ((1, 0), (1, 1), False)],
)
def test_dominance_examples(a, b, want):
    assert dominance_leq(C(a), C(b)) is want


def test_dominance_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        dominance_leq(C((1, 0)), C((1, 0, 0)))


def test_weight_and_rho2():
    assert weight(C((1, -1))) == 0
    assert weight(C((2, 0))) == 2
    assert weight(C.zero(4)) == 0
    assert rho2(C((1, -1))) == 2
    assert rho2(C.zero(3)) == 0
    for d in range(1, 7):
        assert rho2(C.minuscule(d)) == d - 1
        assert rho2(C.minuscule_dual(d)) == d - 1


def test_split_and_norm_examples():
    assert split_plus_minus(C((2, 0, -1))) == (C((2, 0, 0)), C((0, 0, -1)))
    assert split_plus_minus(C((1, 1))) == (C((1, 1)), C((0, 0)))
    assert split_plus_minus(C((-1, -2))) == (C((0, 0)), C((-1, -2)))
    assert sup_norm(C((1, -1))) == 1
    assert sup_norm(C((2, 0, -1))) == 2
    assert sup_norm(C((0, 0))) == 0


def test_enumerate_below_examples():
    assert enumerate_below(C((1, 0, 0))) == {C((1, 0, 0))}
    assert enumerate_below(C((2, 0))) == {C((2, 0)), C((1, 1))}
    assert enumerate_below(C((2, -2))) == {C((2, -2)), C((1, -1)), C((0, 0))}


def test_partial_order_exhaustive():
    for d in range(1, 5):
        ws = dominant_coweights(d, -3, 3) if d < 4 else dominant_coweights(d, -2, 2)
        by_weight = {}
        for w in ws:
            by_weight.setdefault(weight(w), []).append(w)
        for cls in by_weight.values():
            for a in cls:
                assert dominance_leq(a, a)
            for a, b in itertools.permutations(cls, 2):
                if dominance_leq(a, b):
                    assert not dominance_leq(b, a)
                    assert rho2(a) <= rho2(b)
            for a, b, c in itertools.product(cls[:12], repeat=3):
                if dominance_leq(a, b) and dominance_leq(b, c):
                    assert dominance_leq(a, c)


@given(coweights())
def test_split_reconstructs(lam):
    plus, minus = split_plus_minus(lam)
    assert tuple(x + y for x, y in zip(plus.parts, minus.parts)) == lam.parts
    assert all(x >= 0 for x in plus.parts)
    assert all(x <= 0 for x in minus.parts)
    assert all(x == 0 or y == 0 for x, y in zip(plus.parts, minus.parts))
    neg_rev = [-x for x in reversed(minus.parts)]
    assert neg_rev == sorted(neg_rev, reverse=True)
    assert sup_norm(lam) == max(sum(plus.parts), -sum(minus.parts))


@given(coweights(d_max=4, lo=-2, hi=2))
def test_enumerate_below_matches_bruteforce(lam):
    assert enumerate_below(lam) == enumerate_below_bruteforce(lam)
    assert lam in enumerate_below(lam)


@given(coweights(d_max=3, lo=-2, hi=2), st.integers(-3, 3))
def test_enumerate_below_shift_covariant(lam, n):
    assert enumerate_below(lam.shift(n)) == {a.shift(n) for a in enumerate_below(lam)}
