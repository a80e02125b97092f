"""Square matrices of Laurent series and their elementary divisors."""

from __future__ import annotations

import math
from typing import Sequence

from ..coweights import Coweight
from ..errors import DimensionMismatch, DivisionByZero, InsufficientPrecision
from .fields import FiniteField
from .series import LSeries

MatLS = list[list[LSeries]]


def identity(field: FiniteField, d: int) -> MatLS:
    return [[LSeries.one(field) if i == j else LSeries.zero(field) for j in range(d)] for i in range(d)]


def diag(entries: Sequence[LSeries]) -> MatLS:
    d = len(entries)
    f = entries[0].field
    return [[entries[i] if i == j else LSeries.zero(f) for j in range(d)] for i in range(d)]


def monomial_diag(field: FiniteField, exps: Sequence[int]) -> MatLS:
    return diag([LSeries.uniformizer_power(field, k) for k in exps])


def matmul(a: MatLS, b: MatLS) -> MatLS:
    n, m, k = len(a), len(b), len(b[0])
    if len(a[0]) != m:
        raise DimensionMismatch("inner dimensions differ")
    f = a[0][0].field
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = LSeries.zero(f)
            for t in range(m):
                x, y = a[i][t], b[t][j]
                if x.is_certified_zero or y.is_certified_zero:
                    continue
                acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def frobenius_matrix(m: MatLS, q: int) -> MatLS:
    return [[x.frobenius(q) for x in row] for row in m]


def precision_floor(m: MatLS) -> int | None:
    """Smallest absolute precision among the entries (``None`` if all exact)."""
    precs = [x.prec for row in m for x in row if x.prec is not None]
    return min(precs) if precs else None


def is_exact(m: MatLS) -> bool:
    return all(x.prec is None for row in m for x in row)


def _check_square(m: MatLS) -> int:
    d = len(m)
    if d == 0 or any(len(row) != d for row in m):
        raise DimensionMismatch("matrix must be square and nonempty")
    return d


def _smith_once(m: MatLS) -> list[int]:
    """Elementary divisors (increasing) by pivoting on a minimal-valuation entry."""
    d = len(m)
    a = [list(row) for row in m]
    out: list[int] = []
    for s in range(d):
        best = None
        uncertain = math.inf
        for i in range(s, d):
            for j in range(s, d):
                x = a[i][j]
                if x.coeffs:
                    if best is None or x.val < a[best[0]][best[1]].val:
                        best = (i, j)
                elif x.prec is not None:
                    uncertain = min(uncertain, x.prec)
        if best is None:
            if uncertain == math.inf:
                raise DivisionByZero("matrix is singular")
            raise InsufficientPrecision("no entry of the remaining block can be certified nonzero")
        bi, bj = best
        piv = a[bi][bj]
        if piv.val > uncertain:
            raise InsufficientPrecision(
                f"pivot valuation {piv.val} exceeds an unresolved entry known only to pi^{uncertain}"
            )
        a[s], a[bi] = a[bi], a[s]
        for row in a:
            row[s], row[bj] = row[bj], row[s]
        out.append(piv.val)
        inv = piv.inverse()
        for i in range(s + 1, d):
            x = a[i][s]
            if x.is_certified_zero:
                continue
            factor = x * inv
            for j in range(s + 1, d):
                y = a[s][j]
                if y.is_certified_zero:
                    continue
                a[i][j] = a[i][j] - factor * y
    return out


def _smith_2x2(m: MatLS) -> list[int]:
    """``e1 = min entry valuation``, ``e2 = val det - e1``."""
    (a, b), (c, dd) = m
    entries = (a, b, c, dd)
    known = [x.val for x in entries if x.coeffs]
    unresolved = [x.prec for x in entries if not x.coeffs and x.prec is not None]
    if not known:
        if not unresolved:
            raise DivisionByZero("matrix is singular")
        raise InsufficientPrecision("no entry can be certified nonzero")
    e1 = min(known)
    if unresolved and e1 > min(unresolved):
        raise InsufficientPrecision("minimal valuation cannot be certified")
    det = a * dd - b * c
    if not det.coeffs:
        if det.prec is None:
            raise DivisionByZero("matrix is singular")
        raise InsufficientPrecision("determinant valuation cannot be certified")
    return [e1, det.val - e1]


def smith_invariants(m: MatLS, prec: int | None = None, method: str = "auto") -> Coweight:
    """Elementary divisors of ``m`` as a dominant coweight ``(l_1 >= ... >= l_d)``.

    ``m`` lies in ``K diag(pi^l) K``; the parts sum to ``val det m`` and the smallest
    part is the minimal entry valuation.  Exact input is worked at a finite
    precision, doubled on failure, so certified digits are never fabricated.
    ``method="elimination"`` skips the closed form used for ``2 x 2`` input.
    """
    d = _check_square(m)
    if d == 2 and method == "auto":
        return Coweight(sorted(_smith_2x2(m), reverse=True))
    lows = [x.val for row in m for x in row if x.coeffs]
    if not lows:
        if is_exact(m):
            raise DivisionByZero("zero matrix")
        raise InsufficientPrecision("no entry can be certified nonzero")
    lo = min(lows)
    highs = [x.top_exponent() for row in m for x in row if x.coeffs]
    cap = prec if prec is not None else max(highs) + (d + 1) * (max(highs) - lo + 2)
    if not is_exact(m):
        # Exact entries are cut just beyond the finite ones; that loses nothing
        # the finite entries could certify.
        floor = max(x.prec for row in m for x in row if x.prec is not None)
        cap = max(cap, floor + (d + 1) * (floor - lo + 2))
        trial = [[x.truncate(cap) if x.prec is None else x for x in row] for row in m]
        return Coweight(sorted(_smith_once(trial), reverse=True))
    for _ in range(8):
        trial = [[x.truncate(cap) for x in row] for row in m]
        try:
            return Coweight(sorted(_smith_once(trial), reverse=True))
        except InsufficientPrecision:
            cap = lo + 2 * (cap - lo) + 2
    raise InsufficientPrecision("exact matrix needed more precision than allowed; is it singular?")


def determinant(m: MatLS) -> LSeries:
    """Cofactor expansion; fine for the ``d <= 6`` desk-scale matrices used here."""
    d = _check_square(m)
    if d == 1:
        return m[0][0]
    f = m[0][0].field
    total = LSeries.zero(f)
    for j in range(d):
        if m[0][j].is_certified_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def cramer_inverse_bound(invariants: Coweight) -> int:
    """Entries of ``m^-1`` have valuation ``>= -l_1`` when ``m`` has invariants ``l``."""
    return -invariants.parts[0]
