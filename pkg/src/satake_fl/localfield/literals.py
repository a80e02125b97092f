"""Parsing of series literals such as ``"pi^-1 + 1 + 2*pi^3 (mod p=3, deg=1)"``.

Terms are ``[coeff][*]pi[^k]`` or a bare coefficient.  A coefficient is an integer,
a power of the generator ``g``, a product ``c*g^k``, or a parenthesised polynomial in
``g``.  An optional ``O(pi^k)`` term sets the absolute precision.  The trailing
``(mod p=P, deg=A)`` clause names the coefficient field; when omitted the caller's
field is used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .fields import FiniteField, GF
from .series import LSeries

_TOKEN = re.compile(r"\s*(?:(\d+)|(pi|g|O|mod|p|deg)|([-+*^(),=]))")


class LiteralError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise LiteralError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        out.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    return out


@dataclass
class _Parser:
    toks: list[str]
    i: int = 0

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        t = self.peek()
        if t is None or (expected is not None and t != expected):
            raise LiteralError(f"expected {expected or 'token'}, got {t!r}")
        self.i += 1
        return t

    def integer(self) -> int:
        sign = 1
        if self.peek() in ("-", "+"):
            sign = -1 if self.take() == "-" else 1
        t = self.take()
        if not t.isdigit():
            raise LiteralError(f"expected integer, got {t!r}")
        return sign * int(t)

    def exponent(self) -> int:
        if self.peek() == "^":
            self.take()
            return self.integer()
        return 1


def _gpoly(p: _Parser) -> dict[int, int]:
    """Polynomial in ``g`` with integer coefficients: ``{power: coeff}``."""
    out: dict[int, int] = {}
    sign = 1
    if p.peek() in ("+", "-"):
        sign = -1 if p.take() == "-" else 1
    while True:
        c = 1
        k = 0
        if p.peek() and p.peek().isdigit():
            c = int(p.take())
            if p.peek() == "*" and p.peek(1) == "g":
                p.take()
        if p.peek() == "g":
            p.take()
            k = p.exponent()
        out[k] = out.get(k, 0) + sign * c
        if p.peek() in ("+", "-"):
            # Stop at a ')' boundary only; inside parentheses a sign continues the polynomial.
            sign = -1 if p.take() == "-" else 1
            continue
        return out


def _coeff_value(field: FiniteField, poly: dict[int, int]) -> int:
    x = 0
    for k, c in poly.items():
        x = field.add(x, field.mul(field.from_int(c), field.from_gen_power(k) if k else 1))
    return x


def parse_series(text: str, field: FiniteField | None = None) -> LSeries:
    """Parse a series literal into an ``LSeries``."""
    body, suffix = _split_suffix(text)
    if suffix is not None:
        fld = suffix
        if field is not None and field != fld:
            raise LiteralError(f"literal is over {fld!r} but {field!r} was expected")
        field = fld
    if field is None:
        raise LiteralError("no coefficient field: add '(mod p=P, deg=A)'")
    p = _Parser(_tokenize(body))
    terms: list[tuple[dict[int, int], int, int]] = []  # (gpoly, pi exponent, sign)
    prec = None
    sign = 1
    if p.peek() in ("+", "-"):
        sign = -1 if p.take() == "-" else 1
    while p.peek() is not None:
        if p.peek() == "O":
            p.take()
            p.take("(")
            p.take("pi")
            k = p.exponent()
            p.take(")")
            prec = k if prec is None else min(prec, k)
        else:
            coeff: dict[int, int] = {0: 1}
            explicit = False
            if p.peek() == "(":
                p.take()
                coeff = _gpoly(p)
                p.take(")")
                explicit = True
            elif p.peek() and p.peek().isdigit() or p.peek() == "g":
                coeff = _gterm(p)
                explicit = True
            if explicit and p.peek() == "*":
                p.take()
                if p.peek() == "g":
                    # integer*g^k form already handled; allow "(..)*g" products
                    extra = _gterm(p)
                    coeff = _polymul(coeff, extra)
                    if p.peek() == "*":
                        p.take()
            k = 0
            if p.peek() == "pi":
                p.take()
                k = p.exponent()
            elif not explicit:
                raise LiteralError(f"unexpected token {p.peek()!r}")
            terms.append((coeff, k, sign))
        if p.peek() is None:
            break
        t = p.take()
        if t not in ("+", "-"):
            raise LiteralError(f"expected '+' or '-', got {t!r}")
        sign = -1 if t == "-" else 1
    digits: dict[int, int] = {}
    for coeff, k, s in terms:
        c = _coeff_value(field, {e: s * v for e, v in coeff.items()})
        digits[k] = field.add(digits.get(k, 0), c)
    if prec is not None:
        digits = {e: c for e, c in digits.items() if e < prec}
    return LSeries.from_dict(field, digits, prec)


def _gterm(p: _Parser) -> dict[int, int]:
    c = 1
    k = 0
    if p.peek() and p.peek().isdigit():
        c = int(p.take())
        if p.peek() == "*" and p.peek(1) == "g":
            p.take()
    if p.peek() == "g":
        p.take()
        k = p.exponent()
    return {k: c}


def _polymul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return out


_SUFFIX = re.compile(r"\(\s*mod\s+p\s*=\s*(\d+)\s*(?:,\s*deg\s*=\s*(\d+)\s*)?\)\s*$")


def _split_suffix(text: str):
    m = _SUFFIX.search(text)
    if not m:
        return text, None
    p = int(m.group(1))
    a = int(m.group(2) or 1)
    return text[: m.start()], GF(p, a)


def format_series(x: LSeries, with_field: bool = True) -> str:
    """Inverse of ``parse_series``."""
    s = str(x)
    if with_field:
        s += f" (mod p={x.field.p}, deg={x.field.a})"
    return s
