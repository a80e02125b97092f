"""Orbital and twisted orbital integrals of split diagonal elements by lattice counting.

Counting convention
-------------------
For diagonal regular ``gamma`` the centralizer is the diagonal torus ``T``.  With
``vol(G(O)) = 1`` and ``vol(T(O)) = 1``,

    O_gamma(phi_l) = sum over T(F)-orbits of lattices L with inv(L, gamma L) = l
                     of 1 / vol(Stab_T(F)(L)).

Every ``T(F)``-orbit is a union of ``pi^Z^d``-classes, and the ``T(O)``-orbit sizes
cancel the stabilizer volumes, so the sum is the number of lattices modulo the
translation action of ``pi^Z^d``.  Each class has exactly one Hermite representative
with all pivots equal to 0, i.e. ``B O^d`` with ``B`` unipotent upper triangular and
entries carrying only negative digits.  The twisted side is the same count over
``O_E``-lattices with ``inv(L, delta sigma(L))``.

A class with representative ``B`` has ``inv(L, delta sigma(L)) = inv(B^-1 delta sigma(B))``.
The sum is truncated to the window ``pi^N O^d <= B O^d <= pi^-N O^d`` and the
truncation is certified by recomputing at ``N + 1``.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .coweights import Coweight, sup_norm, weight
from .errors import (
    DimensionMismatch,
    DivisionByZero,
    HypothesisViolated,
    InsufficientPrecision,
    NotRegular,
    WindowUnstable,
)
from .hecke import HeckeElement, base_change, phi
from .localfield.fields import GF, FiniteField
from .localfield.lattices import upper_unitriangular_like_inverse
from .localfield.literals import format_series
from .localfield.matrices import diag, matmul, smith_invariants
from .localfield.series import LSeries

THREADS_ENV = "SATAKE_FL_THREADS"


# Element-level maps.


def norm_map(delta: Sequence[LSeries], r: int, q: int) -> tuple[LSeries, ...]:
    """``N delta = delta sigma(delta) ... sigma^(r-1)(delta)`` for diagonal ``delta``."""
    if r < 1:
        raise ValueError("r must be positive")
    out = []
    for x in delta:
        if x.is_certified_zero:
            raise DivisionByZero("diagonal entries must be invertible")
        acc = x
        y = x
        for _ in range(r - 1):
            y = y.frobenius(q)
            acc = acc * y
        out.append(acc)
    return tuple(out)


def conductor(gamma: Sequence[LSeries]) -> int:
    """Regularity conductor of a diagonal element.

    ``max_{i<j} val(g_i - g_j) - min(val g_i, val g_j)``; for unit entries this is the
    largest valuation of an eigenvalue difference.  Raises ``NotRegular`` when a
    difference vanishes or cannot be certified nonzero.
    """
    k = 0
    for x in gamma:
        if not x.coeffs:
            raise NotRegular("diagonal entry is not certifiably invertible")
    for x, y in combinations(gamma, 2):
        diff = x - y
        if not diff.coeffs:
            how = "equal" if diff.prec is None else f"equal modulo pi^{diff.prec}"
            raise NotRegular(f"eigenvalues {x} and {y} are {how}")
        k = max(k, diff.val - min(x.val, y.val))
    return k


# Counting kernel.


def _series_entries(field: FiniteField, d: int, slots, digits) -> list[list[LSeries]]:
    per_entry: dict[tuple[int, int], dict[int, int]] = {}
    for (pos, e), c in zip(slots, digits):
        if c:
            per_entry.setdefault(pos, {})[e] = c
    one, zero = LSeries.one(field), LSeries.zero(field)
    b = [[one if i == j else zero for j in range(d)] for i in range(d)]
    for pos, dg in per_entry.items():
        b[pos[0]][pos[1]] = LSeries.from_dict(field, dg)
    return b


def _invariant_d2(elem, q_sigma, x: LSeries) -> Coweight:
    # B^-1 delta sigma(B) = [[d1, d1 sigma(x) - x d2], [0, d2]].
    d1, d2 = elem
    sx = x.frobenius(q_sigma) if q_sigma else x
    off = d1 * sx - x * d2
    z = LSeries.zero(d1.field)
    return smith_invariants([[d1, off], [z, d2]])


def _window_ok(binv, n: int) -> bool:
    return all(not y.coeffs or y.val >= -n for row in binv for y in row)


def _count_chunk(args) -> Counter:
    p, a_field, elem_digits, q_sigma, n, residues, d, first_values = args
    field = GF(p, a_field)
    elem = [LSeries(field, cs, v, pr) for cs, v, pr in elem_digits]
    return _count(field, elem, q_sigma, n, residues, d, first_values)


def _count(field, elem, q_sigma, n, residues, d, first_values=None) -> Counter:
    positions = [(i, j) for i in range(d) for j in range(i + 1, d)]
    slots = [(pos, e) for pos in positions for e in range(-n, 0)]
    counts: Counter = Counter()
    if not slots:
        counts[_invariant_generic(elem, q_sigma, [[LSeries.one(field)]])] += 1
        return counts
    heads = residues if first_values is None else first_values
    delta = diag(list(elem))
    for head in heads:
        for rest in product(residues, repeat=len(slots) - 1):
            digits = (head,) + rest
            if d == 2:
                dg = {e: c for (_, e), c in zip(slots, digits) if c}
                counts[_invariant_d2(elem, q_sigma, LSeries.from_dict(field, dg))] += 1
                continue
            b = _series_entries(field, d, slots, digits)
            binv = upper_unitriangular_like_inverse(b)
            if not _window_ok(binv, n):
                continue
            sb = [[y.frobenius(q_sigma) for y in row] for row in b] if q_sigma else b
            counts[smith_invariants(matmul(matmul(binv, delta), sb))] += 1
    return counts


def _invariant_generic(elem, q_sigma, b) -> Coweight:
    delta = diag(list(elem))
    binv = upper_unitriangular_like_inverse(b)
    sb = [[y.frobenius(q_sigma) for y in row] for row in b] if q_sigma else b
    return smith_invariants(matmul(matmul(binv, delta), sb), method="elimination")


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def invariant_counts(
    elem: Sequence[LSeries],
    n: int,
    residues: Sequence[int],
    q_sigma: int | None = None,
    workers: int | None = None,
) -> Counter:
    """Histogram of ``inv(L, elem sigma(L))`` over translation classes in the window.

    ``q_sigma=None`` means ``sigma`` is the identity.  The work is split on the
    first digit slot; partial histograms are added, so the result does not depend
    on scheduling.
    """
    d = len(elem)
    field = elem[0].field
    workers = thread_count() if workers is None else workers
    res = list(residues)
    if workers <= 1 or d < 2 or n == 0:
        return _count(field, elem, q_sigma, n, res, d)
    packed = [(x.coeffs, x.val, x.prec) for x in elem]
    chunks = [res[k::workers] for k in range(workers)]
    jobs = [(field.p, field.a, packed, q_sigma, n, res, d, c) for c in chunks if c]
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=len(jobs)) as ex:
        for part in ex.map(_count_chunk, jobs):
            total.update(part)
    return total


# Problems and values.


@dataclass(frozen=True)
class OrbitalProblem:
    """Data of an (twisted) orbital integral of a diagonal element.

    ``element`` holds the diagonal entries over ``F_{q^r}((pi))`` with ``q = p^a``.
    For ``r = 1`` the entries must have coefficients in ``F_q``.  ``window`` and
    ``prec`` default to values derived from the support and the conductor.
    """

    d: int
    p: int
    a: int
    r: int
    element: tuple[LSeries, ...]
    test_function: HeckeElement
    window: int | None = None
    prec: int | None = None

    @property
    def q(self) -> int:
        return self.p ** self.a

    def __post_init__(self):
        if len(self.element) != self.d or self.test_function.d != self.d:
            raise DimensionMismatch("element, test function and d disagree")
        if self.r < 1:
            raise ValueError("r must be positive")
        f = self.element[0].field
        if f.p != self.p or f.a % (self.a * self.r):
            raise ValueError(f"entries over {f!r} do not contain F_{self.p}^{self.a * self.r}")
        if any(x.field != f for x in self.element):
            raise ValueError("entries over different fields")


@dataclass
class OrbitalValue:
    value: Fraction
    counts: dict[Coweight, int]
    window: int
    stable: bool
    counts_next: dict[Coweight, int] = field(default_factory=dict)
    conductor: int = 0
    precision: int | None = None

    def to_json(self) -> dict:
        return {
            "value": _frac_str(self.value),
            "counts": {str(k): v for k, v in sorted(self.counts.items(), reverse=True)},
            "window": self.window,
            "stable": self.stable,
        }


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def default_window(support_norm: int, kappa: int) -> int:
    return support_norm + kappa + 2


def default_precision(n: int, support_norm: int, kappa: int) -> int:
    return 2 * n + support_norm + kappa + 4


def _prepare(prob: OrbitalProblem, twisted: bool):
    f = prob.element[0].field
    q = prob.q
    if twisted:
        gamma = norm_map(prob.element, prob.r, q)
    else:
        if prob.r != 1:
            raise ValueError("untwisted integrals take r = 1")
        gamma = prob.element
        if not all(x.coefficients_in_subfield(prob.a) for x in gamma):
            raise ValueError("entries of gamma must have coefficients in F_q")
    kappa = conductor(gamma)
    norm = prob.test_function.max_norm()
    n = prob.window if prob.window is not None else default_window(norm, kappa)
    if n < 0:
        raise ValueError("window must be nonnegative")
    m = prob.prec if prob.prec is not None else default_precision(n + 1, norm, kappa)
    elem = tuple(x.truncate(m) if x.prec is None and x.top_exponent() is not None and x.top_exponent() >= m else x for x in prob.element)
    residues = f.subfield_elements(prob.a * prob.r)
    return elem, kappa, n, m, residues


def _evaluate(h: HeckeElement, counts: dict[Coweight, int], q_value: int) -> Fraction:
    total = Fraction(0)
    for lam, c in h.terms.items():
        k = counts.get(lam, 0)
        if k:
            total += c.evaluate_q(q_value) * k
    return total


def _integral(prob: OrbitalProblem, twisted: bool, check_stability: bool = True) -> OrbitalValue:
    elem, kappa, n, m, residues = _prepare(prob, twisted)
    q_sigma = prob.q if (twisted and prob.r > 1) else None
    support = prob.test_function.support()
    full = invariant_counts(elem, n, residues, q_sigma)
    counts = {lam: full.get(lam, 0) for lam in support}
    q_value = prob.q ** prob.r if twisted else prob.q
    value = _evaluate(prob.test_function, counts, q_value)
    stable = True
    counts_next: dict[Coweight, int] = {}
    if check_stability:
        full_next = invariant_counts(elem, n + 1, residues, q_sigma)
        counts_next = {lam: full_next.get(lam, 0) for lam in support}
        if counts_next != counts:
            raise WindowUnstable(
                f"support counts changed from window {n} to {n + 1}: {_fmt(counts)} vs {_fmt(counts_next)}",
                counts, counts_next, n,
            )
    return OrbitalValue(value, counts, n, stable, counts_next, kappa, m)


def _fmt(c: dict) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(c.items(), reverse=True)) + "}"


def orbital_integral(prob: OrbitalProblem, check_stability: bool = True) -> OrbitalValue:
    """``O_gamma(f)`` for diagonal regular ``gamma`` over ``F_q((pi))``."""
    return _integral(prob, twisted=False, check_stability=check_stability)


def twisted_orbital_integral(prob: OrbitalProblem, check_stability: bool = True) -> OrbitalValue:
    """``TO_delta(f)`` over ``E = F_{q^r}((pi))`` with ``f`` in the Hecke algebra of ``E``.

    Coefficients of ``f`` are evaluated at ``q_E = q^r``.  With ``r = 1`` this agrees
    with ``orbital_integral``.
    """
    return _integral(prob, twisted=True, check_stability=check_stability)


# The fundamental lemma check.


@dataclass
class FLReport:
    instance: dict
    lhs: OrbitalValue
    rhs: OrbitalValue
    gamma: tuple[LSeries, ...]
    b_of_f: HeckeElement
    window: int

    @property
    def equal(self) -> bool:
        return self.lhs.value == self.rhs.value

    @property
    def stable(self) -> bool:
        return self.lhs.stable and self.rhs.stable

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "lhs": {"value": _frac_str(self.lhs.value), "counts": self.lhs.to_json()["counts"]},
            "rhs": {"value": _frac_str(self.rhs.value), "counts": self.rhs.to_json()["counts"]},
            "gamma": [format_series(x) for x in self.gamma],
            "b_of_f": self.b_of_f.to_json(),
            "equal": self.equal,
            "window": self.window,
            "stable": self.stable,
        }


def fl_window(lam: Coweight, r: int, kappa: int) -> int:
    """Common window for both sides: covers ``||l||`` on E and ``r ||l||`` on F."""
    s = sup_norm(lam)
    return max(s + kappa + 2, r * s + kappa + 1)


def fl_check(
    delta: Sequence[LSeries],
    lam: Coweight,
    p: int,
    a: int,
    r: int,
    window: int | None = None,
    prec: int | None = None,
) -> FLReport:
    """Compare ``TO_delta(phi_lam)`` with ``O_{N delta}(b(phi_lam))``."""
    d = len(delta)
    if lam.d != d:
        raise DimensionMismatch("coweight and element have different rank")
    if weight(lam) != 0:
        raise HypothesisViolated(f"the identity is checked only for |lambda| = 0, got {lam}")
    q = p ** a
    gamma = norm_map(delta, r, q)
    try:
        kappa = conductor(gamma)
    except NotRegular as e:
        raise NotRegular(f"norm is not regular: {e}") from e
    f_e = phi(lam)
    g = base_change(f_e, r)
    n = window if window is not None else fl_window(lam, r, kappa)
    m = prec if prec is not None else default_precision(n + 1, r * sup_norm(lam), kappa)
    lhs = twisted_orbital_integral(OrbitalProblem(d, p, a, r, tuple(delta), f_e, n, m))
    rhs = orbital_integral(OrbitalProblem(d, p, a, 1, gamma, g, n, m))
    instance = {
        "d": d,
        "p": p,
        "a": a,
        "r": r,
        "lambda": list(lam.parts),
        "delta": [format_series(x) for x in delta],
    }
    return FLReport(instance, lhs, rhs, gamma, g, n)


# Saito-Shintani.


def cyclic_tensor_operator(mats: Sequence[Sequence[Sequence[Fraction]]]) -> list[list[Fraction]]:
    """Matrix of ``(f_1 x ... x f_r) o tau`` on ``V^(x r)``.

    ``tau(v_1 x ... x v_r) = v_r x v_1 x ... x v_(r-1)``.  Basis tensors are indexed by
    tuples in lexicographic order.
    """
    r = len(mats)
    n = len(mats[0])
    idx = list(product(range(n), repeat=r))
    out = []
    for row in idx:
        line = []
        for col in idx:
            # tau sends e_col to e_(col_r, col_1, ..., col_(r-1)).
            img = (col[-1],) + col[:-1]
            x = Fraction(1)
            for k in range(r):
                x *= mats[k][row[k]][img[k]]
                if not x:
                    break
            line.append(x)
        out.append(line)
    return out


def cyclic_tensor_trace(mats: Sequence[Sequence[Sequence[Fraction]]]) -> Fraction:
    """Trace of :func:`cyclic_tensor_operator`, summing only its diagonal entries."""
    r = len(mats)
    n = len(mats[0])
    total = Fraction(0)
    for row in product(range(n), repeat=r):
        img = (row[-1],) + row[:-1]
        x = Fraction(1)
        for k in range(r):
            x *= mats[k][row[k]][img[k]]
            if not x:
                break
        total += x
    return total


def _matmul_q(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def saito_shintani_sides(mats: Sequence[Sequence[Sequence]]) -> tuple[Fraction, Fraction]:
    """``(Tr(f_r ... f_1), Tr((f_1 x ... x f_r) tau))``.

    The left side is the composite ``f_1 f_2 ... f_r`` read as the diagram
    ``V -f_1-> V -f_2-> ...``, i.e. the matrix product ``M_r ... M_1``.
    """
    if not mats:
        raise DimensionMismatch("need at least one matrix")
    n = len(mats[0])
    ms = []
    for m in mats:
        if len(m) != n or any(len(row) != n for row in m):
            raise DimensionMismatch("all matrices must be square of the same size")
        ms.append([[Fraction(x) for x in row] for row in m])
    prod_m = ms[0]
    for m in ms[1:]:
        prod_m = _matmul_q(m, prod_m)
    lhs = sum((prod_m[i][i] for i in range(n)), Fraction(0))
    return lhs, cyclic_tensor_trace(ms)


def saito_shintani_check(mats: Sequence[Sequence[Sequence]]) -> bool:
    lhs, rhs = saito_shintani_sides(mats)
    return lhs == rhs


def unit_orbital_closed_form(q: int, kappa: int) -> int:
    """``O_gamma(phi_0) = q^kappa`` for split regular unit ``gamma`` in rank 2."""
    return q ** kappa


def element_from_literals(texts: Iterable[str], field: FiniteField | None = None) -> tuple[LSeries, ...]:
    from .localfield.literals import parse_series

    out = tuple(parse_series(t, field) for t in texts)
    if out and any(x.field != out[0].field for x in out):
        raise ValueError("entries over different fields")
    return out


__all__ = [
    "norm_map",
    "conductor",
    "invariant_counts",
    "OrbitalProblem",
    "OrbitalValue",
    "orbital_integral",
    "twisted_orbital_integral",
    "FLReport",
    "fl_check",
    "fl_window",
    "default_window",
    "default_precision",
    "saito_shintani_check",
    "saito_shintani_sides",
    "cyclic_tensor_operator",
    "cyclic_tensor_trace",
    "unit_orbital_closed_form",
    "element_from_literals",
    "InsufficientPrecision",
]
