"""Dominant coweights of GL_d and the statistics attached to them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable

from .errors import DimensionMismatch, NotDominant


@dataclass(frozen=True, order=True)
class Coweight:
    """A weakly decreasing integer vector ``(l_1 >= ... >= l_d)``.

    Construction never sorts: a non-monotone input raises ``NotDominant``.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(x) for x in parts)
        if not parts:
            raise ValueError("a coweight needs at least one part")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise NotDominant(f"{parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Coweight":
        return cls(int(tok) for tok in text.replace(" ", "").split(",") if tok)

    @classmethod
    def zero(cls, d: int) -> "Coweight":
        return cls((0,) * d)

    @classmethod
    def minuscule(cls, d: int) -> "Coweight":
        return cls((1,) + (0,) * (d - 1))

    @classmethod
    def minuscule_dual(cls, d: int) -> "Coweight":
        return cls((0,) * (d - 1) + (-1,))

    @property
    def d(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __len__(self):
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)

    def __repr__(self) -> str:
        return f"Coweight({self.parts})"

    def shift(self, n: int) -> "Coweight":
        """Add ``n`` to every part (multiplication by ``det^n``)."""
        return Coweight(x + n for x in self.parts)

    def scale(self, r: int) -> "Coweight":
        if r < 0:
            raise ValueError("scaling by a negative integer breaks dominance")
        return Coweight(r * x for x in self.parts)

    def __add__(self, other: "Coweight") -> "Coweight":
        _check_dims(self, other)
        return Coweight(a + b for a, b in zip(self.parts, other.parts))

    def dual(self) -> "Coweight":
        """``-w0(l)``: negate and reverse."""
        return Coweight(-x for x in reversed(self.parts))


def _check_dims(a: Coweight, b: Coweight) -> None:
    if a.d != b.d:
        raise DimensionMismatch(f"coweights of length {a.d} and {b.d}")


def dominance_leq(a: Coweight, b: Coweight) -> bool:
    """True iff ``a <= b``: partial sums of ``a`` bounded by those of ``b``, equal totals."""
    _check_dims(a, b)
    sa = list(accumulate(a.parts))
    sb = list(accumulate(b.parts))
    if sa[-1] != sb[-1]:
        return False
    return all(x <= y for x, y in zip(sa, sb))


def weight(a: Coweight) -> int:
    return sum(a.parts)


def rho2(a: Coweight) -> int:
    """Twice the pairing with the half sum of positive roots: ``sum (d+1-2i) l_i``."""
    d = a.d
    return sum((d + 1 - 2 * i) * x for i, x in enumerate(a.parts, start=1))


def split_plus_minus(a: Coweight) -> tuple[Coweight, Coweight]:
    plus = Coweight(max(x, 0) for x in a.parts)
    minus = Coweight(min(x, 0) for x in a.parts)
    return plus, minus


def sup_norm(a: Coweight) -> int:
    plus, minus = split_plus_minus(a)
    return max(weight(plus), -weight(minus))


def enumerate_below(a: Coweight) -> frozenset[Coweight]:
    """All dominant ``b`` with ``b <= a``.

    Generated by repeatedly subtracting positive roots ``e_i - e_j`` and keeping
    the dominant results; every dominant coweight below ``a`` is reachable by
    such a chain, and all of them lie in the box ``[a_d, a_1]^d``.
    """
    return _enumerate_below(a.parts)


@lru_cache(maxsize=4096)
def _enumerate_below(parts: tuple[int, ...]) -> frozenset[Coweight]:
    d = len(parts)
    seen = {parts}
    stack = [parts]
    while stack:
        cur = stack.pop()
        for i in range(d - 1):
            for j in range(i + 1, d):
                nxt = list(cur)
                nxt[i] -= 1
                nxt[j] += 1
                if any(nxt[k] < nxt[k + 1] for k in range(d - 1)):
                    continue
                t = tuple(nxt)
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    return frozenset(Coweight(t) for t in seen)


def dominant_coweights(d: int, lo: int, hi: int, total: int | None = None) -> list[Coweight]:
    """All dominant coweights with entries in ``[lo, hi]``, optionally of fixed weight."""
    out: list[Coweight] = []

    def rec(prefix: list[int], upper: int):
        if len(prefix) == d:
            if total is None or sum(prefix) == total:
                out.append(Coweight(prefix))
            return
        for x in range(upper, lo - 1, -1):
            prefix.append(x)
            rec(prefix, x)
            prefix.pop()

    rec([], hi)
    return out
