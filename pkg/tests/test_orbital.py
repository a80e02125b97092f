import os
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from satake_fl.coweights import Coweight
from satake_fl.errors import HypothesisViolated, NotRegular, WindowUnstable
from satake_fl.hecke import HeckeElement, base_change, phi
from satake_fl.localfield import GF, LSeries, parse_series
from satake_fl.orbital import (
    OrbitalProblem,
    conductor,
    cyclic_tensor_operator,
    cyclic_tensor_trace,
    fl_check,
    invariant_counts,
    norm_map,
    orbital_integral,
    saito_shintani_check,
    saito_shintani_sides,
    twisted_orbital_integral,
)
from satake_fl.selftest import random_rational_matrix

C = Coweight
Z2 = C.zero(2)


def el(field, *lits):
    return tuple(parse_series(s, field) for s in lits)


def test_norm_map_examples():
    f4 = GF(2, 2)
    w = LSeries.constant(f4, f4.gen)
    assert norm_map((w,), 2, 2) == (LSeries.one(f4),)
    x = el(GF(3, 2), "1 + pi", "pi^-1")
    assert norm_map(x, 1, 3) == x
    assert norm_map(x, 3, 3) == tuple(y * y * y for y in x)
    u = el(GF(3, 2), "g + pi")[0]
    n = norm_map((u,), 2, 3)[0]
    assert n.coefficients_in_subfield(1)


def test_conductor():
    f = GF(3)
    assert conductor(el(f, "1", "2")) == 0
    assert conductor(el(f, "1", "1+pi^2")) == 2
    assert conductor(el(f, "pi", "pi^-1")) == 0
    assert conductor(el(f, "1+pi", "1+2*pi")) == 1
    with pytest.raises(NotRegular):
        conductor(el(f, "1", "1"))
    with pytest.raises(NotRegular):
        conductor(el(f, "1+O(pi^2)", "1+pi^3"))


def test_q2_has_no_unit_pair_with_conductor_zero():
    # Every unit of F_2[[pi]] is 1 mod pi, so two units always differ by a multiple of pi.
    f = GF(2)
    assert f.subfield_elements(1) == [0, 1]
    for a in (1, 3, 5, 7):
        for b in (1, 3, 5, 7):
            if a != b:
                x = LSeries.from_dict(f, {i: (a >> i) & 1 for i in range(3)})
                y = LSeries.from_dict(f, {i: (b >> i) & 1 for i in range(3)})
                assert conductor((x, y)) >= 1


@pytest.mark.parametrize(
    "p,lits,want",
    [
        (3, ("1", "2"), 1),
        (3, ("1", "1+pi"), 3),
        (3, ("1", "1+pi^2"), 9),
        (2, ("1", "1+pi"), 2),
        (2, ("1", "1+pi^2"), 4),
        (5, ("1", "3+pi"), 1),
    ],
)
def test_unit_orbital_is_q_to_kappa(p, lits, want):
    g = el(GF(p), *lits)
    v = orbital_integral(OrbitalProblem(2, p, 1, 1, g, phi(Z2)))
    assert v.value == want
    assert v.stable and v.counts == {Z2: want}


def test_rank_one():
    f = GF(3)
    v = orbital_integral(OrbitalProblem(1, 3, 1, 1, el(f, "2+pi"), phi(C((0,)))))
    assert v.value == 1
    f9 = GF(3, 2)
    tv = twisted_orbital_integral(OrbitalProblem(1, 3, 1, 2, el(f9, "g"), phi(C((0,)))))
    assert tv.value == 1


def test_twisted_unit_case_q2():
    f4 = GF(2, 2)
    # Units u, u' with N u - N u' a unit do not exist over F_2; take conductor 1.
    d = el(f4, "1", "1+g*pi")
    tv = twisted_orbital_integral(OrbitalProblem(2, 2, 1, 2, d, phi(Z2)))
    ov = orbital_integral(OrbitalProblem(2, 2, 1, 1, norm_map(d, 2, 2), phi(Z2)))
    assert tv.value == ov.value == 2


def test_twisted_unit_case_q3():
    f9 = GF(3, 2)
    d = el(f9, "1", "g")
    tv = twisted_orbital_integral(OrbitalProblem(2, 3, 1, 2, d, phi(Z2)))
    assert tv.value == 1


def test_shifted_pair_twisted_value():
    f9 = GF(3, 2)
    d = el(f9, "g*pi", "pi^-1")
    tv3 = twisted_orbital_integral(OrbitalProblem(2, 3, 1, 2, d, phi(C((1, -1))), window=3))
    tv4 = twisted_orbital_integral(OrbitalProblem(2, 3, 1, 2, d, phi(C((1, -1))), window=4))
    assert tv3.value == tv4.value == 1


def test_weyl_and_scaling_invariance():
    f = GF(3)
    g = el(f, "1", "1+pi")
    f_test = HeckeElement(2, {C((1, -1)): 1, Z2: 2})
    base = orbital_integral(OrbitalProblem(2, 3, 1, 1, g, f_test)).value
    swapped = orbital_integral(OrbitalProblem(2, 3, 1, 1, g[::-1], f_test)).value
    assert base == swapped
    unit = LSeries.from_dict(f, {0: 2, 1: 1})
    scaled = tuple(x * unit for x in g)
    assert orbital_integral(OrbitalProblem(2, 3, 1, 1, scaled, f_test)).value == base
    pig = tuple(x.shift(1) for x in g)
    shifted = HeckeElement(2, {C((2, 0)): 1, C((1, 1)): 2})
    assert orbital_integral(OrbitalProblem(2, 3, 1, 1, pig, shifted)).value == base


def test_twisted_with_r1_matches_untwisted():
    f = GF(2)
    g = el(f, "1", "1+pi+pi^2")
    fn = HeckeElement(2, {C((1, -1)): 1, C((2, -2)): 3})
    a = orbital_integral(OrbitalProblem(2, 2, 1, 1, g, fn))
    b = twisted_orbital_integral(OrbitalProblem(2, 2, 1, 1, g, fn))
    assert a.value == b.value and a.counts == b.counts


def test_counts_are_nonnegative_and_cover_window():
    f = GF(2, 2)
    d = el(f, "1", "1+g*pi")
    counts = invariant_counts(d, 3, f.subfield_elements(2), q_sigma=2)
    assert sum(counts.values()) == 4 ** 3
    assert all(v > 0 for v in counts.values())


def test_rank_three_orbital():
    f = GF(2)
    g = el(f, "1", "1+pi", "1+pi+pi^2")
    v = orbital_integral(OrbitalProblem(3, 2, 1, 1, g, phi(C.zero(3)), window=3))
    # Unit value q^(sum_{i<j} val(g_i - g_j)) with differences of valuation 1, 1, 2.
    assert v.value == 2 ** (1 + 1 + 2)


def test_parallel_counts_match(monkeypatch):
    f = GF(3, 2)
    d = el(f, "1", "g")
    serial = invariant_counts(d, 3, f.subfield_elements(2), q_sigma=3, workers=1)
    parallel = invariant_counts(d, 3, f.subfield_elements(2), q_sigma=3, workers=3)
    assert serial == parallel
    monkeypatch.setenv("SATAKE_FL_THREADS", "2")
    assert invariant_counts(d, 3, f.subfield_elements(2), q_sigma=3) == serial


def test_window_unstable_is_raised():
    f = GF(3)
    g = el(f, "1", "1+pi^2")
    with pytest.raises(WindowUnstable) as exc:
        orbital_integral(OrbitalProblem(2, 3, 1, 1, g, phi(Z2), window=1))
    assert exc.value.window == 1


def test_fl_examples():
    f9 = GF(3, 2)
    rep = fl_check(el(f9, "1", "g"), C((1, -1)), 3, 1, 2)
    assert rep.equal and rep.stable
    assert rep.lhs.value == rep.rhs.value == 8
    unit = fl_check(el(f9, "1", "g"), Z2, 3, 1, 2)
    assert unit.lhs.value == unit.rhs.value == 1
    one = fl_check(el(f9, "g+pi"), C((0,)), 3, 1, 2)
    assert one.lhs.value == one.rhs.value == 1
    obj = rep.to_json()
    assert obj["equal"] is True and obj["lhs"]["value"] == "8/1"
    assert set(obj) == {"instance", "lhs", "rhs", "gamma", "b_of_f", "equal", "window", "stable"}


def test_fl_hypotheses():
    f4 = GF(2, 2)
    with pytest.raises(HypothesisViolated):
        fl_check(el(f4, "1", "1+g*pi"), C((1, 0)), 2, 1, 2)
    with pytest.raises(NotRegular):
        fl_check(el(f4, "1", "g"), C((1, -1)), 2, 1, 2)


def test_saito_shintani_examples():
    assert saito_shintani_check([[[Fraction(3), 1], [2, 5]]])
    ident = [[1, 0], [0, 1]]
    lhs, rhs = saito_shintani_sides([ident, ident])
    assert lhs == rhs == 2
    rng = random.Random(3)
    mats = [random_rational_matrix(rng, 3) for _ in range(3)]
    assert saito_shintani_check(mats)


def test_cyclic_operator_is_permutation_for_identities():
    ident = [[Fraction(int(i == j)) for j in range(2)] for i in range(2)]
    big = cyclic_tensor_operator([ident] * 3)
    assert all(sum(row) == 1 for row in big)
    assert sum(big[i][i] for i in range(8)) == 2


@pytest.mark.parametrize("n,r", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_cyclic_trace_matches_full_operator(n, r):
    rng = random.Random(n * 10 + r)
    mats = [random_rational_matrix(rng, n) for _ in range(r)]
    big = cyclic_tensor_operator(mats)
    assert cyclic_tensor_trace(mats) == sum(big[i][i] for i in range(len(big)))


@settings(max_examples=100)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10 ** 9))
def test_saito_shintani_property(n, r, seed):
    rng = random.Random(seed)
    mats = [random_rational_matrix(rng, n) for _ in range(r)]
    assert saito_shintani_check(mats)
