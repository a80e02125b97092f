"""Full-rank O-lattices in F^d in column Hermite normal form.

A lattice is ``B O^d`` for an upper triangular ``B`` with ``B[i][i] = pi^(a_i)`` and
each entry ``B[i][j]`` (``j > i``) reduced modulo ``pi^(a_i)``, i.e. only digits of
order ``< a_i``.  This representative is unique, so equality of ``LatticeRep``
values is equality of lattices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from ..coweights import Coweight
from ..errors import InsufficientPrecision
from .fields import FiniteField
from .matrices import MatLS, matmul, smith_invariants
from .series import LSeries


@dataclass(frozen=True)
class LatticeRep:
    field: FiniteField
    pivots: tuple[int, ...]
    entries: tuple[LSeries, ...]  # (i, j) with i < j, row-major

    @property
    def d(self) -> int:
        return len(self.pivots)

    def entry(self, i: int, j: int) -> LSeries:
        if i == j:
            return LSeries.uniformizer_power(self.field, self.pivots[i])
        if i > j:
            return LSeries.zero(self.field)
        return self.entries[_slot(self.d, i, j)]

    def basis(self) -> MatLS:
        d = self.d
        return [[self.entry(i, j) for j in range(d)] for i in range(d)]

    def inverse_basis(self) -> MatLS:
        """Exact ``B^-1`` by back substitution (pivots are monomials)."""
        return upper_unitriangular_like_inverse(self.basis())

    def index_valuation(self) -> int:
        """``[O^d : L]`` is ``q^(sum a_i)`` (negative when ``L`` is larger)."""
        return sum(self.pivots)

    def normalized(self) -> "LatticeRep":
        """Representative of the orbit under diagonal ``pi^Z^d`` with all pivots 0."""
        d = self.d
        ents = []
        for i in range(d):
            for j in range(i + 1, d):
                ents.append(self.entry(i, j).shift(-self.pivots[i]))
        return LatticeRep(self.field, (0,) * d, tuple(ents))

    def scaled(self, k: int) -> "LatticeRep":
        """``pi^k L``."""
        ents = tuple(x.shift(k) for x in self.entries)
        return LatticeRep(self.field, tuple(a + k for a in self.pivots), ents)

    def __str__(self) -> str:
        return f"Lattice(pivots={self.pivots}, entries=[{', '.join(str(x) for x in self.entries)}])"


def _slot(d: int, i: int, j: int) -> int:
    # Row-major index of (i, j) among strictly-upper positions.
    return i * d - i * (i + 1) // 2 + (j - i - 1)


def upper_unitriangular_like_inverse(b: MatLS) -> MatLS:
    """Inverse of an upper triangular matrix with monomial diagonal."""
    d = len(b)
    f = b[0][0].field
    x = [[LSeries.zero(f) for _ in range(d)] for _ in range(d)]
    for j in range(d):
        for i in range(d - 1, -1, -1):
            acc = LSeries.one(f) if i == j else LSeries.zero(f)
            for k in range(i + 1, d):
                if b[i][k].is_certified_zero or x[k][j].is_certified_zero:
                    continue
                acc = acc - b[i][k] * x[k][j]
            piv = b[i][i]
            x[i][j] = acc * piv.inverse()
    return x


def lattice_from_digits(field: FiniteField, pivots: Sequence[int], entry_digits: Sequence[dict]) -> LatticeRep:
    return LatticeRep(field, tuple(pivots), tuple(LSeries.from_dict(field, dg) for dg in entry_digits))


def _contains_window_bottom(rep: LatticeRep, n: int) -> bool:
    """``pi^n O^d`` is contained in ``rep`` iff ``pi^n B^-1`` is integral."""
    for row in rep.inverse_basis():
        for x in row:
            if x.coeffs and x.val < -n:
                return False
    return True


def _entry_positions(d: int):
    return [(i, j) for i in range(d) for j in range(i + 1, d)]


def enumerate_lattices(d: int, field: FiniteField, n: int, residues: Sequence[int] | None = None) -> Iterator[LatticeRep]:
    """Every lattice ``L`` with ``pi^n O^d <= L <= pi^-n O^d``, once each.

    Order: pivot vectors lexicographically, then digit assignments in product order.
    ``residues`` restricts digits to a subfield (default: the whole field).
    """
    if n < 0:
        raise ValueError("window must be nonnegative")
    res = list(field.elements() if residues is None else residues)
    positions = _entry_positions(d)
    for pivots in product(range(-n, n + 1), repeat=d):
        slots = [(pos, e) for pos in positions for e in range(-n, pivots[pos[0]])]
        for digits in product(res, repeat=len(slots)):
            per_entry = [dict() for _ in positions]
            for (pos, e), c in zip(slots, digits):
                if c:
                    per_entry[positions.index(pos)][e] = c
            rep = lattice_from_digits(field, pivots, per_entry)
            if _contains_window_bottom(rep, n):
                yield rep


def translation_classes(d: int, field: FiniteField, n: int, residues: Sequence[int] | None = None) -> Iterator[LatticeRep]:
    """Pivot-zero representatives of diagonal-translation classes inside the window.

    These are ``B O^d`` with ``B`` unipotent upper triangular, entries with digits in
    ``[-n, 0)``, and ``pi^n O^d <= B O^d``.
    """
    res = list(field.elements() if residues is None else residues)
    positions = _entry_positions(d)
    slots = [(k, e) for k in range(len(positions)) for e in range(-n, 0)]
    for digits in product(res, repeat=len(slots)):
        per_entry = [dict() for _ in positions]
        for (k, e), c in zip(slots, digits):
            if c:
                per_entry[k][e] = c
        rep = lattice_from_digits(field, (0,) * d, per_entry)
        if d <= 2 or _contains_window_bottom(rep, n):
            yield rep


def lattice_pair_invariant(lat_l: LatticeRep, lat_m: LatticeRep) -> Coweight:
    """``inv(L, M)``: elementary divisors of ``B_L^-1 B_M``."""
    if lat_l.field != lat_m.field or lat_l.d != lat_m.d:
        raise ValueError("lattices over different fields or ranks")
    return smith_invariants(matmul(lat_l.inverse_basis(), lat_m.basis()))


def standard_lattice(field: FiniteField, d: int) -> LatticeRep:
    return LatticeRep(field, (0,) * d, tuple(LSeries.zero(field) for _ in _entry_positions(d)))


def diagonal_lattice(field: FiniteField, exps: Sequence[int]) -> LatticeRep:
    d = len(exps)
    return LatticeRep(field, tuple(exps), tuple(LSeries.zero(field) for _ in _entry_positions(d)))


def hermite(basis: MatLS, prec: int | None = None) -> LatticeRep:
    """Canonical form of the lattice spanned by the columns of ``basis``.

    Column operations over O bring the matrix to upper triangular form working from
    the bottom row up; pivots are then normalised to powers of ``pi`` and the
    entries above them reduced.  Exact input is processed at a finite working
    precision that is doubled until every needed digit is certified.
    """
    d = len(basis)
    exact = all(x.prec is None for row in basis for x in row)
    lows = [x.val for row in basis for x in row if x.coeffs]
    highs = [x.top_exponent() for row in basis for x in row if x.coeffs]
    lo, hi = min(lows), max(highs)
    cap = prec if prec is not None else hi + (d + 1) * (hi - lo + 2)
    for _ in range(8):
        trial = [[x.truncate(cap) if x.prec is None else x for x in row] for row in basis]
        try:
            return _hermite_once(trial)
        except InsufficientPrecision:
            if not exact:
                raise
            cap = lo + 2 * (cap - lo) + 2
    raise InsufficientPrecision("Hermite form needs more precision than allowed")


def _hermite_once(m: MatLS) -> LatticeRep:
    d = len(m)
    a = [list(row) for row in m]
    f = a[0][0].field

    def col_axpy(dst: int, src: int, factor: LSeries) -> None:
        for r in range(d):
            y = a[r][src]
            if not y.is_certified_zero:
                a[r][dst] = a[r][dst] - factor * y

    pivots = [0] * d
    for k in range(d - 1, -1, -1):
        best = None
        uncertain = None
        for j in range(k + 1):
            x = a[k][j]
            if x.coeffs:
                if best is None or x.val < a[k][best].val:
                    best = j
            elif x.prec is not None:
                uncertain = x.prec if uncertain is None else min(uncertain, x.prec)
        if best is None:
            raise InsufficientPrecision("cannot certify a pivot; basis may be degenerate")
        if uncertain is not None and a[k][best].val > uncertain:
            raise InsufficientPrecision("pivot choice cannot be certified")
        for r in range(d):
            a[r][k], a[r][best] = a[r][best], a[r][k]
        piv = a[k][k]
        inv = piv.inverse()
        for j in range(k):
            x = a[k][j]
            if x.is_certified_zero:
                continue
            col_axpy(j, k, x * inv)
            a[k][j] = LSeries.zero(f)
        unit_inv = inv.shift(piv.val)
        for r in range(d):
            a[r][k] = a[r][k] * unit_inv
        pivots[k] = piv.val
        a[k][k] = LSeries.uniformizer_power(f, piv.val)
    for j in range(d):
        for i in range(j - 1, -1, -1):
            x = a[i][j]
            head_digits = {e: c for e, c in x.digits().items() if e >= pivots[i]}
            if x.prec is not None and x.prec < pivots[i]:
                raise InsufficientPrecision("entry not known to its pivot's order")
            if head_digits:
                factor = LSeries.from_dict(f, head_digits).shift(-pivots[i])
                col_axpy(j, i, factor)
    ents = []
    for i in range(d):
        for j in range(i + 1, d):
            x = a[i][j]
            if x.prec is not None and x.prec < pivots[i]:
                raise InsufficientPrecision("entry not known to its pivot's order")
            ents.append(LSeries.from_dict(f, {e: c for e, c in x.digits().items() if e < pivots[i]}))
    return LatticeRep(f, tuple(pivots), tuple(ents))
