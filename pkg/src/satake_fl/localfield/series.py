"""Truncated Laurent series over a finite field with certified absolute precision.

An ``LSeries`` stores the known digits ``coeffs[k]`` of ``pi^(val + k)`` and an
absolute precision ``prec``: digits of order ``>= prec`` are unknown.  ``prec=None``
means the series is exact (a Laurent polynomial in ``pi``).  Digits between the
last stored coefficient and ``prec`` are known to be zero.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

from ..errors import DivisionByZero, InsufficientPrecision
from .fields import FiniteField


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _add_prec(p, k):
    return None if p is None else p + k


class LSeries:
    __slots__ = ("field", "val", "coeffs", "prec")

    def __init__(self, field: FiniteField, coeffs: Iterable[int] = (), val: int = 0, prec: int | None = None):
        cs = list(coeffs)
        if prec is not None and val + len(cs) > prec:
            cs = cs[: max(0, prec - val)]
        start = 0
        while start < len(cs) and not cs[start]:
            start += 1
        end = len(cs)
        while end > start and not cs[end - 1]:
            end -= 1
        self.field = field
        self.coeffs = tuple(cs[start:end])
        if self.coeffs:
            self.val = val + start
        else:
            self.val = prec if prec is not None else 0
        self.prec = prec

    # Constructors.

    @classmethod
    def from_dict(cls, field: FiniteField, digits: Mapping[int, int], prec: int | None = None) -> "LSeries":
        digits = {e: c for e, c in digits.items() if c}
        if not digits:
            return cls(field, (), 0, prec)
        lo, hi = min(digits), max(digits)
        return cls(field, [digits.get(e, 0) for e in range(lo, hi + 1)], lo, prec)

    @classmethod
    def zero(cls, field: FiniteField, prec: int | None = None) -> "LSeries":
        return cls(field, (), 0, prec)

    @classmethod
    def constant(cls, field: FiniteField, c: int, prec: int | None = None) -> "LSeries":
        return cls(field, (c,), 0, prec)

    @classmethod
    def one(cls, field: FiniteField) -> "LSeries":
        return cls(field, (1,), 0, None)

    @classmethod
    def uniformizer_power(cls, field: FiniteField, k: int, c: int = 1) -> "LSeries":
        return cls(field, (c,), k, None)

    # Queries.

    @property
    def is_exact(self) -> bool:
        return self.prec is None

    @property
    def is_certified_zero(self) -> bool:
        return self.prec is None and not self.coeffs

    @property
    def has_known_leading_term(self) -> bool:
        return bool(self.coeffs)

    def lower_bound(self) -> float:
        """A certified lower bound for the valuation."""
        if self.coeffs:
            return self.val
        return math.inf if self.prec is None else self.prec

    def valuation(self) -> float:
        """Valuation; ``inf`` for the certified zero series."""
        if self.coeffs:
            return self.val
        if self.prec is None:
            return math.inf
        raise InsufficientPrecision(f"all digits below pi^{self.prec} vanish; valuation unknown")

    def digit(self, n: int) -> int:
        if self.prec is not None and n >= self.prec:
            raise InsufficientPrecision(f"digit {n} lies beyond precision {self.prec}")
        k = n - self.val
        if self.coeffs and 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def digits(self) -> dict[int, int]:
        return {self.val + k: c for k, c in enumerate(self.coeffs) if c}

    def top_exponent(self) -> int | None:
        """Largest exponent carrying a nonzero known digit."""
        return self.val + len(self.coeffs) - 1 if self.coeffs else None

    # Arithmetic.

    def _check(self, other: "LSeries") -> None:
        if self.field != other.field:
            raise ValueError(f"series over {self.field!r} and {other.field!r}")

    def __add__(self, other: "LSeries") -> "LSeries":
        self._check(other)
        prec = _min_prec(self.prec, other.prec)
        if not other.coeffs:
            return LSeries(self.field, self.coeffs, self.val, prec)
        if not self.coeffs:
            return LSeries(self.field, other.coeffs, other.val, prec)
        f = self.field
        lo = min(self.val, other.val)
        hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        out = [0] * (hi - lo)
        o = self.val - lo
        for k, c in enumerate(self.coeffs):
            out[o + k] = c
        o = other.val - lo
        add = f.add
        for k, c in enumerate(other.coeffs):
            out[o + k] = add(out[o + k], c)
        return LSeries(f, out, lo, prec)

    def __neg__(self) -> "LSeries":
        neg = self.field.neg
        return LSeries(self.field, [neg(c) for c in self.coeffs], self.val, self.prec)

    def __sub__(self, other: "LSeries") -> "LSeries":
        return self + (-other)

    def __mul__(self, other) -> "LSeries":
        if isinstance(other, int):
            return self.scalar(other)
        self._check(other)
        f = self.field
        va, vb = self.lower_bound(), other.lower_bound()
        pa = math.inf if self.prec is None else self.prec
        pb = math.inf if other.prec is None else other.prec
        p = min(pa + vb, pb + va)
        prec = None if p == math.inf else int(p)
        if not self.coeffs or not other.coeffs:
            return LSeries(f, (), 0, prec)
        a, b = self.coeffs, other.coeffs
        n = len(a) + len(b) - 1
        if prec is not None:
            n = min(n, max(0, prec - self.val - other.val))
        out = [0] * n
        mul, add = f.mul, f.add
        for i, x in enumerate(a):
            if not x or i >= n:
                continue
            for j in range(min(len(b), n - i)):
                y = b[j]
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
        return LSeries(f, out, self.val + other.val, prec)

    def scalar(self, c: int) -> "LSeries":
        """Multiply by the field element ``c``."""
        c = c % self.field.order if self.field.a == 1 else c
        if not c:
            return LSeries(self.field, (), 0, self.prec)
        mul = self.field.mul
        return LSeries(self.field, [mul(c, x) for x in self.coeffs], self.val, self.prec)

    def shift(self, k: int) -> "LSeries":
        """Multiply by ``pi^k``."""
        return LSeries(self.field, self.coeffs, self.val + k, _add_prec(self.prec, k))

    def truncate(self, prec: int) -> "LSeries":
        return LSeries(self.field, self.coeffs, self.val, _min_prec(self.prec, prec))

    def split_at(self, n: int) -> tuple["LSeries", "LSeries"]:
        """``(head, tail)`` with digits ``< n`` in head (exact) and ``>= n`` in tail."""
        head = {e: c for e, c in self.digits().items() if e < n}
        tail = {e: c for e, c in self.digits().items() if e >= n}
        if self.prec is not None and self.prec < n:
            raise InsufficientPrecision(f"need digits up to {n}, have {self.prec}")
        return LSeries.from_dict(self.field, head), LSeries.from_dict(self.field, tail, self.prec)

    def inverse(self, prec: int | None = None) -> "LSeries":
        """Multiplicative inverse.

        Exact monomials invert exactly.  Otherwise the result carries relative
        precision equal to the input's; exact non-monomial input needs an explicit
        absolute target ``prec``.
        """
        if not self.coeffs:
            if self.prec is None:
                raise DivisionByZero("inverse of the zero series")
            raise InsufficientPrecision("leading term cannot be certified nonzero")
        f = self.field
        v = self.val
        if self.prec is None and len(self.coeffs) == 1:
            return LSeries(f, (f.inv(self.coeffs[0]),), -v, None)
        if self.prec is None:
            if prec is None:
                raise ValueError("inverse of an exact non-monomial series needs a target precision")
            rel = prec + v
        else:
            rel = self.prec - v
            if prec is not None:
                rel = min(rel, prec + v)
        rel = max(rel, 0)
        u = self.coeffs
        u0inv = f.inv(u[0])
        out = [0] * rel
        mul, add, neg = f.mul, f.add, f.neg
        for n in range(rel):
            if n == 0:
                out[0] = u0inv
                continue
            s = 0
            for k in range(1, min(n, len(u) - 1) + 1):
                if u[k] and out[n - k]:
                    s = add(s, mul(u[k], out[n - k]))
            out[n] = mul(neg(s), u0inv)
        return LSeries(f, out, -v, rel - v)

    def __truediv__(self, other: "LSeries") -> "LSeries":
        return self * other.inverse()

    def frobenius(self, q: int) -> "LSeries":
        """Coefficientwise ``x -> x^q``."""
        frob = self.field.frob
        return LSeries(self.field, [frob(c, q) for c in self.coeffs], self.val, self.prec)

    def __pow__(self, n: int) -> "LSeries":
        if n < 0:
            return (self.inverse()) ** (-n)
        out = LSeries.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def agrees_with(self, other: "LSeries") -> bool:
        """Digits agree up to the common precision."""
        prec = _min_prec(self.prec, other.prec)
        diff = self - other
        if prec is None:
            return diff.is_certified_zero
        return not diff.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, LSeries):
            return NotImplemented
        return (
            self.field == other.field
            and self.coeffs == other.coeffs
            and self.prec == other.prec
            and (self.val == other.val or not self.coeffs)
        )

    def __hash__(self):
        return hash((self.field, self.coeffs, self.val if self.coeffs else None, self.prec))

    def coefficients_in_subfield(self, b: int) -> bool:
        return all(self.field.in_subfield(c, b) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"LSeries({render_series(self)})"

    def __str__(self) -> str:
        return render_series(self)


def render_series(x: LSeries) -> str:
    f = x.field
    terms = []
    for e, c in sorted(x.digits().items()):
        cs = f.render(c)
        if f.a > 1 and "+" in cs:
            cs = f"({cs})"
        if e == 0:
            terms.append(cs)
        else:
            mono = "pi" if e == 1 else f"pi^{e}"
            terms.append(mono if cs == "1" else f"{cs}*{mono}")
    if x.prec is not None:
        terms.append(f"O(pi^{x.prec})")
    return " + ".join(terms) if terms else "0"
