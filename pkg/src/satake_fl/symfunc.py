"""Symmetric Laurent polynomials in ``d`` variables, stored in the monomial basis.

Coefficients live in ``Z[v, 1/v]`` with ``q = v^2``.  The Hall-Littlewood family is
computed over an abstract parameter ring ``Z[t]`` and specialised to ``t = v^-2``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Mapping

from .coweights import Coweight, _check_dims, dominance_leq, enumerate_below, rho2, weight
from .errors import (
    DimensionMismatch,
    InternalInconsistency,
    NormalizationFailure,
    WeightMismatch,
)
from .laurent import ONE, LaurentPoly, render_vcoeff

Monomial = tuple[int, ...]


class SymPoly:
    """``sum_l coeffs[l] * m_l`` for dominant ``l`` of length ``d``."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: Mapping[Coweight, LaurentPoly] | None = None):
        self.d = d
        out: dict[Coweight, LaurentPoly] = {}
        for k, c in (coeffs or {}).items():
            if not isinstance(k, Coweight):
                k = Coweight(k)
            if k.d != d:
                raise DimensionMismatch(f"key {k} has length {k.d}, expected {d}")
            c = LaurentPoly.coerce(c)
            if c:
                out[k] = out[k] + c if k in out else c
        self.coeffs = {k: c for k, c in out.items() if c}

    @classmethod
    def one(cls, d: int) -> "SymPoly":
        return cls(d, {Coweight.zero(d): ONE})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.d == other.d and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.d, frozenset(self.coeffs.items())))

    def _same_d(self, other: "SymPoly") -> None:
        if self.d != other.d:
            raise DimensionMismatch(f"symmetric polynomials in {self.d} and {other.d} variables")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._same_d(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return SymPoly(self.d, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.d, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def scale(self, c) -> "SymPoly":
        c = LaurentPoly.coerce(c)
        return SymPoly(self.d, {k: c * x for k, x in self.coeffs.items()})

    def __mul__(self, other) -> "SymPoly":
        if isinstance(other, SymPoly):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def shift(self, n: int) -> "SymPoly":
        """Multiply by ``(t_1 ... t_d)^n``."""
        return SymPoly(self.d, {k.shift(n): c for k, c in self.coeffs.items()})

    def map_coeffs(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "SymPoly":
        return SymPoly(self.d, {k: fn(c) for k, c in self.coeffs.items()})

    def leading_key(self) -> Coweight:
        """Lexicographically largest key; it is maximal for dominance in the support."""
        return max(self.coeffs)

    def monomials(self) -> dict[Monomial, LaurentPoly]:
        out: dict[Monomial, LaurentPoly] = {}
        for k, c in self.coeffs.items():
            for e in orbit(k.parts):
                out[e] = c
        return out

    def __repr__(self) -> str:
        return f"SymPoly({self.d}, {render_sympoly(self)})"

    def __str__(self) -> str:
        return render_sympoly(self)


@lru_cache(maxsize=None)
def orbit(parts: tuple[int, ...]) -> tuple[Monomial, ...]:
    """Distinct permutations of ``parts``."""
    return tuple(sorted(set(permutations(parts)), reverse=True))


def from_monomials(d: int, poly: Mapping[Monomial, LaurentPoly], check: bool = True) -> SymPoly:
    """Read a symmetric polynomial off its dominant monomials."""
    coeffs = {}
    for e, c in poly.items():
        if c and all(e[i] >= e[i + 1] for i in range(d - 1)):
            coeffs[Coweight(e)] = c
    sp = SymPoly(d, coeffs)
    if check:
        full = {e: c for e, c in poly.items() if c}
        if full != sp.monomials():
            raise InternalInconsistency("polynomial is not symmetric")
    return sp


def msym(a: Coweight) -> SymPoly:
    return SymPoly(a.d, {a: ONE})


def mul(p: SymPoly, q: SymPoly) -> SymPoly:
    p._same_d(q)
    d = p.d
    if len(p.coeffs) > len(q.coeffs):
        p, q = q, p
    pm = p.monomials()
    out: dict[Coweight, LaurentPoly] = {}
    for lam, c in q.coeffs.items():
        for b in orbit(lam.parts):
            for a, ca in pm.items():
                s = tuple(x + y for x, y in zip(a, b))
                if all(s[i] >= s[i + 1] for i in range(d - 1)):
                    key = Coweight(s)
                    prod = ca * c
                    out[key] = out[key] + prod if key in out else prod
    return SymPoly(d, out)


# Schur polynomials: Kostka numbers by counting semistandard tableaux.


@lru_cache(maxsize=None)
def kostka_number(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of SSYT of partition ``shape`` and weak composition ``content``."""
    shape = tuple(x for x in shape if x)
    if sum(shape) != sum(content):
        return 0
    if not content:
        return 1 if not shape else 0
    if len(shape) > len(content):
        return 0
    *rest, last = content
    total = 0
    for inner in _horizontal_strips(shape, last):
        total += kostka_number(inner, tuple(rest))
    return total


def _horizontal_strips(shape: tuple[int, ...], k: int) -> Iterable[tuple[int, ...]]:
    """Partitions ``mu`` inside ``shape`` with ``shape / mu`` a horizontal strip of size ``k``."""
    n = len(shape)

    def rec(i: int, remaining: int, acc: list[int]):
        if i == n:
            if remaining == 0:
                yield tuple(acc)
            return
        nxt = shape[i + 1] if i + 1 < n else 0
        for take in range(0, min(remaining, shape[i] - nxt) + 1):
            acc.append(shape[i] - take)
            yield from rec(i + 1, remaining - take, acc)
            acc.pop()

    yield from rec(0, k, [])


def schur(a: Coweight) -> SymPoly:
    return _schur(a.parts)


@lru_cache(maxsize=None)
def _schur(parts: tuple[int, ...]) -> SymPoly:
    d = len(parts)
    n = max(0, -parts[-1])
    lam = tuple(x + n for x in parts)
    coeffs = {}
    for mu in enumerate_below(Coweight(lam)):
        k = kostka_number(lam, mu.parts)
        if k:
            coeffs[mu] = LaurentPoly.const(k)
    return SymPoly(d, coeffs).shift(-n)


# Hall-Littlewood polynomials by symmetrisation, over Z[t].


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = ca * cb
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
    return out


def _unit_vec(d: int, i: int) -> Monomial:
    return tuple(1 if k == i else 0 for k in range(d))


def divide_by_linear(poly: Mapping[Monomial, LaurentPoly], i: int, j: int) -> dict[Monomial, LaurentPoly]:
    """Exact quotient of ``poly`` by ``x_i - x_j`` (Horner in ``x_i``).

    Raises ``InternalInconsistency`` if the division leaves a remainder.
    """
    by_deg: dict[int, dict[Monomial, LaurentPoly]] = {}
    for e, c in poly.items():
        rest = e[:i] + (0,) + e[i + 1:]
        by_deg.setdefault(e[i], {})[rest] = c
    if not by_deg:
        return {}
    top = max(by_deg)

    def shift_j(f: dict) -> dict:
        return {e[:j] + (e[j] + 1,) + e[j + 1:]: c for e, c in f.items()}

    def add(f: dict, g: dict) -> dict:
        out = dict(f)
        for e, c in g.items():
            s = out[e] + c if e in out else c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return out

    quotient: dict[Monomial, LaurentPoly] = {}
    cur: dict = {}
    for k in range(top, 0, -1):
        cur = add(by_deg.get(k, {}), shift_j(cur))
        for e, c in cur.items():
            quotient[e[:i] + (k - 1,) + e[i + 1:]] = c
    remainder = add(by_deg.get(0, {}), shift_j(cur))
    if remainder:
        raise InternalInconsistency(f"division by x_{i} - x_{j} left a remainder")
    return quotient


def divide_by_vandermonde(poly: Mapping[Monomial, LaurentPoly], d: int) -> dict[Monomial, LaurentPoly]:
    out = dict(poly)
    for i in range(d):
        for j in range(i + 1, d):
            out = divide_by_linear(out, i, j)
    return out


def _perm_sign(w: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(w)
    for s in range(len(w)):
        if seen[s]:
            continue
        k, length = s, 0
        while not seen[k]:
            seen[k] = True
            k = w[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def antisymmetrize(poly: Mapping[Monomial, LaurentPoly], d: int) -> dict[Monomial, LaurentPoly]:
    """``sum_w sign(w) w(poly)`` with ``w`` acting by permuting variables."""
    out: dict[Monomial, LaurentPoly] = {}
    for w in permutations(range(d)):
        sgn = _perm_sign(w)
        for e, c in poly.items():
            ne = [0] * d
            for k in range(d):
                ne[w[k]] = e[k]
            ne = tuple(ne)
            val = c if sgn > 0 else -c
            s = out[ne] + val if ne in out else val
            if s:
                out[ne] = s
            else:
                out.pop(ne, None)
    return out


def _t_integer(n: int) -> LaurentPoly:
    """``[n]_t = 1 + t + ... + t^(n-1)``."""
    return LaurentPoly({k: 1 for k in range(n)})


def v_normalizer(parts: tuple[int, ...]) -> LaurentPoly:
    """``prod_i v_{m_i}(t)`` over the multiplicities ``m_i`` of the distinct parts."""
    out = ONE
    counts: dict[int, int] = {}
    for x in parts:
        counts[x] = counts.get(x, 0) + 1
    for m in counts.values():
        for k in range(1, m + 1):
            out = out * _t_integer(k)
    return out


T = LaurentPoly.monomial(1)


@lru_cache(maxsize=None)
def _vandermonde_t_factor(d: int) -> dict:
    """``prod_{i<j} (x_i - t x_j)`` as a monomial dictionary over ``Z[t]``."""
    out = {(0,) * d: ONE}
    for i in range(d):
        for j in range(i + 1, d):
            out = _poly_mul(out, {_unit_vec(d, i): ONE, _unit_vec(d, j): -T})
    return out


def symmetrize_weighted(parts: tuple[int, ...], weight_poly: dict) -> dict[Monomial, LaurentPoly]:
    """``sum_w w(x^parts * weight_poly / prod_{i<j}(x_i - x_j))`` as monomials."""
    d = len(parts)
    base = _poly_mul({parts: ONE}, weight_poly)
    return divide_by_vandermonde(antisymmetrize(base, d), d)


def hall_littlewood_t(a: Coweight) -> SymPoly:
    """``P_a(x; t)`` with ``t`` kept as an abstract variable (coefficients in ``Z[t]``)."""
    return _hl_t(a.parts)


@lru_cache(maxsize=None)
def _hl_t(parts: tuple[int, ...]) -> SymPoly:
    d = len(parts)
    n = max(0, -parts[-1])
    lam = tuple(x + n for x in parts)
    raw = symmetrize_weighted(lam, _vandermonde_t_factor(d))
    norm = v_normalizer(lam)
    try:
        scaled = {e: c.exact_div(norm) for e, c in raw.items()}
    except ArithmeticError as exc:
        raise InternalInconsistency(f"normaliser does not divide symmetrisation of {lam}") from exc
    return from_monomials(d, scaled).shift(-n)


def t_to_v(c: LaurentPoly) -> LaurentPoly:
    """Specialise ``t = v^-2``."""
    return c.substitute_t(-2)


def hall_littlewood(a: Coweight) -> SymPoly:
    """``P_a(x; q^-1)`` with ``q = v^2``."""
    return _hl_v(a.parts)


@lru_cache(maxsize=None)
def _hl_v(parts: tuple[int, ...]) -> SymPoly:
    return _hl_t(parts).map_coeffs(t_to_v)


def _check_pair(lam: Coweight, alf: Coweight) -> None:
    _check_dims(lam, alf)
    if weight(lam) != weight(alf):
        raise WeightMismatch(f"|{lam}| != |{alf}|")


@lru_cache(maxsize=None)
def _kostka_foulkes_row(parts: tuple[int, ...]) -> dict[Coweight, LaurentPoly]:
    """Expand ``s_parts`` in the Hall-Littlewood basis over ``Z[t]`` by peeling."""
    rem = _schur(parts)
    row: dict[Coweight, LaurentPoly] = {}
    while not rem.is_zero():
        top = rem.leading_key()
        c = rem.coeffs[top]
        row[top] = c
        rem = rem - _hl_t(top.parts).scale(c)
    return row


def kostka_foulkes_t(lam: Coweight, alf: Coweight) -> LaurentPoly:
    _check_pair(lam, alf)
    return _kostka_foulkes_row(lam.parts).get(alf, LaurentPoly())


def kostka_foulkes(lam: Coweight, alf: Coweight) -> LaurentPoly:
    """``K_{lam,alf}(t)`` specialised at ``t = v^-2``."""
    return t_to_v(kostka_foulkes_t(lam, alf))


def lusztig_kato_poly(lam: Coweight, alf: Coweight) -> LaurentPoly:
    """``P_{lam,alf}(q) = v^(2rho(lam) - 2rho(alf)) K_{lam,alf}(v^-2)``."""
    k = kostka_foulkes(lam, alf)
    if k.is_zero():
        return k
    p = k.shift(rho2(lam) - rho2(alf))
    if any(e % 2 or e < 0 for e in p.terms) or any(c < 0 for c in p.terms.values()):
        raise NormalizationFailure(f"P_{{{lam},{alf}}} = {p!r} is not a positive polynomial in q")
    return p


def substitute_power(p: SymPoly, r: int) -> SymPoly:
    """``t_i -> t_i^r`` together with ``v -> v^r``."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    if r == 1:
        return p
    out = SymPoly(p.d)
    for lam, c in p.coeffs.items():
        # m_lam(t^r) = m_{r lam}(t): scaling preserves distinct permutations.
        out.coeffs[lam.scale(r)] = c.scale_exponents(r)
    return out


def render_combination(
    items: Iterable[tuple[Coweight, LaurentPoly]], basis: str, bare_zero: bool
) -> str:
    """``c1*basis[l1] + c2*basis[l2] ...`` with keys in descending lexicographic order."""
    items = sorted(items, key=lambda kc: kc[0], reverse=True)
    if not items:
        return "0"
    pieces = []
    for k, c in items:
        label = f"{basis}[{k}]"
        is_unit_key = bare_zero and all(x == 0 for x in k.parts)
        rendered = render_vcoeff(c)
        negative = False
        if len(c.terms) == 1:
            if rendered.startswith("-"):
                negative = True
                rendered = rendered[1:]
            if is_unit_key:
                body = rendered
            elif rendered == "1":
                body = label
            else:
                body = f"{rendered}*{label}"
        elif is_unit_key:
            body = f"({rendered})" if len(items) > 1 else rendered
        else:
            body = f"({rendered})*{label}"
        pieces.append((negative, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out


def render_sympoly(p: SymPoly) -> str:
    """Text form ``c*m[l] + ...``; an overall odd power of ``v`` is factored out."""
    exps = [e for c in p.coeffs.values() for e in c.terms]
    if exps and all(e % 2 for e in exps):
        inner = p.map_coeffs(lambda c: c.shift(-1))
        return f"v*({render_combination(inner.coeffs.items(), 'm', True)})"
    return render_combination(p.coeffs.items(), "m", True)
