"""The spherical Hecke algebra of GL_d in the double-coset basis.

Everything is computed through the Satake transform, normalised as
``satake(phi_l) = v^(2 rho(l)) * P_l(t; v^-2)``.  With this choice the transform of
``psi_l`` is ``v^(2 rho(l)) * s_l``; the twist is carried explicitly and cancels in
base change because ``b`` is defined by substitution on the polynomial side.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Mapping

from .coweights import Coweight, enumerate_below, rho2, sup_norm, weight
from .errors import DimensionMismatch, NotInImage
from .laurent import ONE, LaurentPoly, parse_vcoeff_json, vcoeff_json
from .symfunc import SymPoly, hall_littlewood, lusztig_kato_poly, render_combination, substitute_power


class HeckeElement:
    """Finite combination ``sum_l c_l phi_l`` with ``c_l`` in ``Z[v, 1/v]``."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: Mapping[Coweight, LaurentPoly] | None = None):
        self.d = d
        out: dict[Coweight, LaurentPoly] = {}
        for k, c in (terms or {}).items():
            if not isinstance(k, Coweight):
                k = Coweight(k)
            if k.d != d:
                raise DimensionMismatch(f"coweight {k} in a rank-{d} Hecke algebra")
            c = LaurentPoly.coerce(c)
            out[k] = out[k] + c if k in out else c
        self.terms = {k: c for k, c in out.items() if c}

    @classmethod
    def unit(cls, d: int) -> "HeckeElement":
        return cls(d, {Coweight.zero(d): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def _same_d(self, other: "HeckeElement") -> None:
        if self.d != other.d:
            raise DimensionMismatch(f"Hecke algebras of rank {self.d} and {other.d}")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._same_d(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return HeckeElement(self.d, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.d, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = LaurentPoly.coerce(c)
        return HeckeElement(self.d, {k: c * x for k, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return convolve(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def support(self) -> list[Coweight]:
        return sorted(self.terms, reverse=True)

    def max_norm(self) -> int:
        return max((sup_norm(k) for k in self.terms), default=0)

    def __str__(self) -> str:
        return render_hecke(self)

    def __repr__(self) -> str:
        return f"HeckeElement({self.d}, {render_hecke(self)})"

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "terms": [
                {"coweight": list(k.parts), "coeff": vcoeff_json(self.terms[k])}
                for k in self.support()
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping | str) -> "HeckeElement":
        if isinstance(obj, str):
            obj = json.loads(obj)
        d = int(obj["d"])
        return cls(d, {Coweight(t["coweight"]): parse_vcoeff_json(t["coeff"]) for t in obj["terms"]})


def render_hecke(h: HeckeElement) -> str:
    return render_combination(h.terms.items(), "phi", False)


def phi(a: Coweight) -> HeckeElement:
    """Characteristic function of ``K diag(pi^a) K``."""
    return HeckeElement(a.d, {a: ONE})


@lru_cache(maxsize=None)
def _satake_phi(parts: tuple[int, ...]) -> SymPoly:
    a = Coweight(parts)
    return hall_littlewood(a).scale(LaurentPoly.monomial(rho2(a)))


def satake(h: HeckeElement) -> SymPoly:
    out = SymPoly(h.d)
    for lam, c in h.terms.items():
        out = out + _satake_phi(lam.parts).scale(c)
    return out


def satake_inv(p: SymPoly, max_steps: int | None = None) -> HeckeElement:
    """Invert the Satake transform by peeling off dominance-maximal terms.

    The leading term of ``satake(phi_a)`` is ``v^(2 rho(a)) m_a``, so each step kills
    the lexicographically largest monomial key.
    """
    rem = p
    out: dict[Coweight, LaurentPoly] = {}
    steps = 0
    limit = max_steps if max_steps is not None else 10 * (len(p.coeffs) + 1) ** 2 + 1000
    while not rem.is_zero():
        steps += 1
        if steps > limit:
            raise NotInImage("peeling did not terminate")
        top = rem.leading_key()
        c = rem.coeffs[top].shift(-rho2(top))
        out[top] = c
        nxt = rem - _satake_phi(top.parts).scale(c)
        if top in nxt.coeffs:
            raise NotInImage(f"could not eliminate leading key {top}")
        rem = nxt
    return HeckeElement(p.d, out)


def convolve(h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
    h1._same_d(h2)
    return satake_inv(satake(h1) * satake(h2))


@lru_cache(maxsize=None)
def _psi(parts: tuple[int, ...]) -> HeckeElement:
    lam = Coweight(parts)
    terms = {}
    for alf in enumerate_below(lam):
        p = lusztig_kato_poly(lam, alf)
        if p:
            terms[alf] = p
    return HeckeElement(lam.d, terms)


def psi(a: Coweight) -> HeckeElement:
    """``sum_{b <= a} P_{a,b}(q) phi_b``, whose Satake transform is ``v^(2 rho(a)) s_a``."""
    return _psi(a.parts)


def base_change(h: HeckeElement, r: int) -> HeckeElement:
    """``b: H_E -> H_F`` for ``E/F`` unramified of degree ``r``.

    The input's ``v`` is read as ``v_E = v^r``.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    if r == 1:
        return h
    return satake_inv(substitute_power(satake(h), r))


def total_weights(h: HeckeElement) -> set[int]:
    return {weight(k) for k in h.terms}


def combination(d: int, pairs: Iterable[tuple[Iterable[int], LaurentPoly | int]]) -> HeckeElement:
    return HeckeElement(d, {Coweight(k): LaurentPoly.coerce(c) for k, c in pairs})
