"""Laurent polynomials in one variable with integer coefficients.

The same class serves as the coefficient ring ``Z[v, 1/v]`` (with ``q = v^2``) and
as the abstract Hall-Littlewood parameter ring ``Z[t]``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


class LaurentPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms: dict[int, int] = {int(e): int(c) for e, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> "LaurentPoly":
        return cls({exp: c})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        other = LaurentPoly.coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials are invertible")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly({e * n: c ** (-n)})
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``x^k``."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def scale_exponents(self, r: int) -> "LaurentPoly":
        """``x -> x^r``."""
        return LaurentPoly({e * r: c for e, c in self.terms.items()})

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def divmod_poly(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division from the top by ``other``, whose leading coefficient is +-1.

        The quotient is restricted to exponents ``>= min(self) - min(other)``, so a
        remainder is left exactly when ``other`` does not divide ``self`` in the
        Laurent ring.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        top = other.max_exp()
        lead = other.terms[top]
        if lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        if not self.terms:
            return LaurentPoly(), LaurentPoly()
        floor = self.min_exp() - other.min_exp()
        rem = dict(self.terms)
        quo: dict[int, int] = {}
        while rem:
            m = max(rem)
            k = m - top
            if k < floor:
                break
            c = rem[m] * lead
            quo[k] = c
            for e, oc in other.terms.items():
                v = rem.get(e + k, 0) - c * oc
                if v:
                    rem[e + k] = v
                else:
                    rem.pop(e + k, None)
        return LaurentPoly(quo), LaurentPoly(rem)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod_poly(other)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def substitute_t(self, exp: int) -> "LaurentPoly":
        """Replace the variable ``t`` by ``v^exp`` (used for ``t = v^-2``)."""
        return self.scale_exponents(exp)

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((Fraction(c) * x ** e for e, c in self.terms.items()), Fraction(0))

    def evaluate_q(self, q) -> Fraction:
        """Evaluate a ``v``-polynomial at ``v^2 = q``; odd powers of ``v`` are rejected."""
        if any(e % 2 for e in self.terms):
            raise ValueError(f"{self!r} has odd powers of v; needs sqrt(q)")
        q = Fraction(q)
        return sum((Fraction(c) * q ** (e // 2) for e, c in self.terms.items()), Fraction(0))

    def at_zero(self) -> int:
        """Value of a genuine polynomial at 0."""
        if any(e < 0 for e in self.terms):
            raise ValueError("negative powers present; cannot evaluate at 0")
        return self.terms.get(0, 0)

    def coefficients(self) -> dict[int, int]:
        return dict(self.terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        return render_poly(self, "x")


def _monomial(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def render_poly(p: LaurentPoly, var: str) -> str:
    """Render with positive terms first, each group in descending degree."""
    if not p.terms:
        return "0"
    items = sorted(p.terms.items(), key=lambda ec: (ec[1] < 0, -ec[0]))
    return _join_terms([(c, _monomial(var, e)) for e, c in items])


def _join_terms(pieces: list[tuple[int, str]]) -> str:
    out = []
    for k, (c, mono) in enumerate(pieces):
        mag = abs(c)
        if mono == "":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out)


def render_vcoeff(p: LaurentPoly) -> str:
    """Render a ``v``-polynomial in terms of ``q = v^2``; odd powers carry a ``v``."""
    if not p.terms:
        return "0"
    items = sorted(p.terms.items(), key=lambda ec: (ec[1] < 0, -ec[0]))
    pieces = []
    for e, c in items:
        k, odd = divmod(e, 2)
        mono = _monomial("q", k)
        if odd:
            mono = "v" if not mono else f"v*{mono}"
        pieces.append((c, mono))
    return _join_terms(pieces)


def parse_vcoeff_json(obj: Mapping[str, int]) -> LaurentPoly:
    return LaurentPoly({int(e): int(c) for e, c in obj.items()})


def vcoeff_json(p: LaurentPoly) -> dict[str, int]:
    return {str(e): c for e, c in sorted(p.terms.items())}


ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()
V = LaurentPoly.monomial(1)
Q = LaurentPoly.monomial(2)
