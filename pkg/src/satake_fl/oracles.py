"""Independent reference computations used to cross-check the main algorithms.

None of these share code paths with the routines they check beyond basic value
types: Kostka-Foulkes by the charge statistic on tableaux, Schur polynomials by the
bialternant, elementary divisors by minors, Satake transforms and convolution by
counting lattices.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations, product

from .coweights import Coweight, dominance_leq, weight
from .laurent import LaurentPoly
from .localfield.fields import GF
from .localfield.lattices import enumerate_lattices, lattice_pair_invariant, standard_lattice, diagonal_lattice
from .localfield.matrices import MatLS, determinant
from .symfunc import SymPoly, divide_by_vandermonde, from_monomials


# Tableaux and charge.


def ssyt(shape: tuple[int, ...], content: tuple[int, ...]):
    """Semistandard tableaux of ``shape`` with ``content[i]`` entries equal to ``i+1``."""
    shape = tuple(x for x in shape if x)
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    word_len = sum(content)
    if len(cells) != word_len:
        return
    letters = len(content)

    def rec(k: int, tab: dict, left: list[int]):
        if k == len(cells):
            yield [[tab[(i, j)] for j in range(shape[i])] for i in range(len(shape))]
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, tab[(i, j - 1)])
        if i > 0:
            lo = max(lo, tab[(i - 1, j)] + 1)
        for val in range(lo, letters + 1):
            if left[val - 1]:
                left[val - 1] -= 1
                tab[(i, j)] = val
                yield from rec(k + 1, tab, left)
                del tab[(i, j)]
                left[val - 1] += 1

    yield from rec(0, {}, list(content))


def reading_word(tab: list[list[int]]) -> list[int]:
    """Rows from bottom to top, each read left to right."""
    out: list[int] = []
    for row in reversed(tab):
        out.extend(row)
    return out


def charge(word: list[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content.

    Standard subwords are extracted by scanning leftwards cyclically for 1, 2, ...;
    the index rises by one each time the scan wraps around.
    """
    w = list(word)
    alive = [True] * len(w)
    total = 0
    while any(alive):
        present = sorted({w[i] for i in range(len(w)) if alive[i]})
        top = 0
        while top + 1 in present:
            top += 1
        if top == 0:
            raise ValueError("content is not a partition")
        pos = len(w)
        index = 0
        for letter in range(1, top + 1):
            found = None
            for k in range(pos - 1, -1, -1):
                if alive[k] and w[k] == letter:
                    found = k
                    break
            if found is None:
                if letter > 1:
                    index += 1
                for k in range(len(w) - 1, pos - 1, -1):
                    if alive[k] and w[k] == letter:
                        found = k
                        break
            if found is None:
                raise ValueError("content is not a partition")
            total += index
            alive[found] = False
            pos = found
    return total


def kostka_foulkes_charge(lam: Coweight, alf: Coweight) -> LaurentPoly:
    """``K_{lam,alf}(t) = sum_T t^charge(T)``, returned in the variable ``t``.

    Negative parts are handled by a common shift.
    """
    if lam.d != alf.d or weight(lam) != weight(alf):
        raise ValueError("incompatible coweights")
    low = min(lam.parts[-1], alf.parts[-1], 0)
    shape = tuple(x - low for x in lam.parts)
    content = tuple(x - low for x in alf.parts)
    out: dict[int, int] = {}
    for tab in ssyt(shape, content):
        c = charge(reading_word(tab))
        out[c] = out.get(c, 0) + 1
    return LaurentPoly(out)


# Schur polynomials by the bialternant.


def schur_bialternant(lam: Coweight) -> SymPoly:
    d = lam.d
    low = min(lam.parts[-1], 0)
    parts = [x - low for x in lam.parts]
    shifted = [parts[i] + d - 1 - i for i in range(d)]
    alt: dict[tuple[int, ...], LaurentPoly] = {}
    for w in permutations(range(d)):
        sign = _sign(w)
        mono = [0] * d
        for i in range(d):
            mono[w[i]] = shifted[i]
        key = tuple(mono)
        alt[key] = alt.get(key, LaurentPoly()) + LaurentPoly.const(sign)
    quot = divide_by_vandermonde({k: c for k, c in alt.items() if c}, d)
    return from_monomials(d, quot).shift(low)


def _sign(w) -> int:
    s = 1
    for i, j in combinations(range(len(w)), 2):
        if w[i] > w[j]:
            s = -s
    return s


# Elementary divisors by minors.


def smith_by_minors(m: MatLS) -> Coweight:
    """``e_1 + ... + e_k`` is the minimal valuation of a ``k x k`` minor (exact input)."""
    d = len(m)
    partial = [0]
    for k in range(1, d + 1):
        best = None
        for rows in combinations(range(d), k):
            for cols in combinations(range(d), k):
                sub = [[m[i][j] for j in cols] for i in rows]
                det = determinant(sub)
                if det.coeffs:
                    best = det.val if best is None else min(best, det.val)
        if best is None:
            raise ValueError("singular matrix")
        partial.append(best)
    divs = [partial[k] - partial[k - 1] for k in range(1, d + 1)]
    return Coweight(sorted(divs, reverse=True))


# Brute-force dominance ideal.


def enumerate_below_bruteforce(lam: Coweight) -> set[Coweight]:
    lo, hi = lam.parts[-1], lam.parts[0]
    out = set()
    for vec in product(range(lo, hi + 1), repeat=lam.d):
        if list(vec) != sorted(vec, reverse=True):
            continue
        a = Coweight(vec)
        if dominance_leq(a, lam):
            out.add(a)
    return out


# Lattice-counting models of the Hecke algebra.


def _window_for(*coweights: Coweight) -> int:
    return max(max(abs(x) for x in c.parts) for c in coweights)


def satake_by_cosets(lam: Coweight, p: int, a: int = 1) -> dict[Coweight | tuple, int]:
    """``{exponent: count}`` for the cosets ``x K`` in ``K pi^lam K``.

    Each lattice ``L = x O^d`` with ``inv(O^d, L) = lam`` has a Hermite basis with
    diagonal ``pi^e``; ``satake(phi_lam)`` has coefficient ``v^-2rho(e) * #{L}`` at the
    monomial ``t^e``.  The returned counts are per exponent vector ``e``.
    """
    f = GF(p, a)
    d = lam.d
    base = standard_lattice(f, d)
    n = _window_for(lam)
    out: Counter = Counter()
    for lat in enumerate_lattices(d, f, n):
        if lattice_pair_invariant(base, lat) == lam:
            out[lat.pivots] += 1
    return dict(out)


def satake_matches_cosets(poly: SymPoly, lam: Coweight, p: int, a: int = 1) -> bool:
    """Compare a Satake transform with the coset count at ``q = p^a``."""
    q = p ** a
    counts = satake_by_cosets(lam, p, a)
    mono = poly.monomials()
    keys = set(mono) | set(counts)
    for e in keys:
        c = mono.get(e, LaurentPoly())
        twist = sum((lam.d - 1 - 2 * i) * e[i] for i in range(lam.d))
        if c.shift(twist).evaluate_q(q) != counts.get(e, 0):
            return False
    return True


def convolution_by_lattices(lam: Coweight, mu: Coweight, p: int, a: int = 1) -> dict[Coweight, int]:
    """Structure constants ``(phi_lam * phi_mu)(pi^nu)`` by counting lattices.

    ``#{L : inv(O^d, L) = lam, inv(L, pi^nu O^d) = mu}`` for every dominant ``nu`` that
    occurs.
    """
    f = GF(p, a)
    d = lam.d
    base = standard_lattice(f, d)
    n = _window_for(lam)
    mids = [lat for lat in enumerate_lattices(d, f, n) if lattice_pair_invariant(base, lat) == lam]
    total = weight(lam) + weight(mu)
    lo = lam.parts[-1] + mu.parts[-1]
    hi = lam.parts[0] + mu.parts[0]
    out: dict[Coweight, int] = {}
    for vec in product(range(lo, hi + 1), repeat=d):
        if sum(vec) != total or list(vec) != sorted(vec, reverse=True):
            continue
        nu = Coweight(vec)
        target = diagonal_lattice(f, nu.parts)
        k = sum(1 for lat in mids if lattice_pair_invariant(lat, target) == mu)
        if k:
            out[nu] = k
    return out


def hecke_at_q(h, q: int) -> dict[Coweight, Fraction]:
    return {k: c.evaluate_q(q) for k, c in h.terms.items()}

