"""Small finite fields ``F_{p^a}``.

Elements are plain ints: ``sum c_i p^i`` encodes ``sum c_i g^i`` where ``g`` is
a root of the field's modulus.  The modulus is the first primitive polynomial of
degree ``a`` in a fixed enumeration order, so ``g`` generates the multiplicative
group and every construction is deterministic.
"""

from __future__ import annotations

from functools import lru_cache

TABLE_LIMIT = 1 << 16
ADD_TABLE_LIMIT = 1 << 8
SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13)


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))


def _digits(x: int, p: int, a: int) -> list[int]:
    out = []
    for _ in range(a):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for c in reversed(ds):
        x = x * p + c
    return x


def _polymulmod(x: list[int], y: list[int], modulus: list[int], p: int) -> list[int]:
    """Product of residues mod the monic ``modulus`` (coefficients low to high)."""
    a = len(modulus) - 1
    prod = [0] * (2 * a - 1 if a else 1)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    prod[i + j] = (prod[i + j] + xi * yj) % p
    for k in range(len(prod) - 1, a - 1, -1):
        c = prod[k]
        if c:
            for i in range(a + 1):
                prod[k - a + i] = (prod[k - a + i] - c * modulus[i]) % p
    return (prod + [0] * a)[:a]


def _polypowmod(x: list[int], n: int, modulus: list[int], p: int) -> list[int]:
    a = len(modulus) - 1
    out = [1] + [0] * (a - 1)
    base = x
    while n:
        if n & 1:
            out = _polymulmod(out, base, modulus, p)
        base = _polymulmod(base, base, modulus, p)
        n >>= 1
    return out


def find_primitive_modulus(p: int, a: int) -> tuple[int, ...]:
    """First monic primitive polynomial of degree ``a`` over ``F_p``.

    Candidates are ``x^a + c_{a-1} x^{a-1} + ... + c_0`` taken in increasing order of
    the integer ``sum c_i p^i``.  For ``a = 1`` this is ``x - g`` with ``g`` the least
    primitive root mod ``p``.
    """
    order = p ** a - 1
    primes = _prime_factors(order)
    if a == 1:
        for g in range(1, p):
            if all(pow(g, order // ell, p) != 1 for ell in primes) or p == 2:
                return ((-g) % p, 1)
    for n in range(1, p ** a):
        low = _digits(n, p, a)
        if low[0] == 0:
            continue
        modulus = low + [1]
        x = [0, 1] + [0] * (a - 2)
        if _polypowmod(x, order, modulus, p) != [1] + [0] * (a - 1):
            continue
        if all(_polypowmod(x, order // ell, modulus, p) != [1] + [0] * (a - 1) for ell in primes):
            return tuple(modulus)
    raise ValueError(f"no primitive polynomial of degree {a} over F_{p}")


class FiniteField:
    """``F_{p^a}`` with int-encoded elements and log tables when small."""

    def __init__(self, p: int, a: int = 1):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if a < 1:
            raise ValueError("extension degree must be positive")
        self.p = p
        self.a = a
        self.order = p ** a
        self.modulus = find_primitive_modulus(p, a)
        self._mod_list = list(self.modulus)
        if a == 1:
            self.gen = (-self.modulus[0]) % p
        else:
            self.gen = p
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._add: list[list[int]] | None = None
        self._neg: list[int] | None = None
        if self.order <= TABLE_LIMIT:
            self._build_tables()

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.a})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.a) == (other.p, other.a)

    def __hash__(self):
        return hash((self.p, self.a))

    def __reduce__(self):
        return (GF, (self.p, self.a))

    def _build_tables(self) -> None:
        n = self.order - 1
        exp = [0] * n
        log = [0] * self.order
        x = 1
        for k in range(n):
            exp[k] = x
            log[x] = k
            x = self._slow_mul(x, self.gen)
        self._exp, self._log = exp, log
        if self.p != 2 and self.a > 1:
            self._neg = [self._slow_neg(x) for x in range(self.order)]
            if self.order <= ADD_TABLE_LIMIT:
                self._add = [[self._slow_add(x, y) for y in range(self.order)] for x in range(self.order)]

    def _slow_mul(self, x: int, y: int) -> int:
        if self.a == 1:
            return x * y % self.p
        xs = _digits(x, self.p, self.a)
        ys = _digits(y, self.p, self.a)
        return _undigits(_polymulmod(xs, ys, self._mod_list, self.p), self.p)

    def _slow_add(self, x: int, y: int) -> int:
        p, a = self.p, self.a
        return _undigits([(u + w) % p for u, w in zip(_digits(x, p, a), _digits(y, p, a))], p)

    def _slow_neg(self, x: int) -> int:
        p, a = self.p, self.a
        return _undigits([(-u) % p for u in _digits(x, p, a)], p)

    # Field operations on int encodings.

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if self.a == 1:
            return (x + y) % self.p
        if self._add is not None:
            return self._add[x][y]
        return self._slow_add(x, y)

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        if self.a == 1:
            return (-x) % self.p
        if self._neg is not None:
            return self._neg[x]
        return self._slow_neg(x)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if not x or not y:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[x] + self._log[y]) % (self.order - 1)]
        return self._slow_mul(x, y)

    def inv(self, x: int) -> int:
        if not x:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        if self._exp is not None:
            return self._exp[(-self._log[x]) % (self.order - 1)]
        return self.pow(x, self.order - 2)

    def pow(self, x: int, n: int) -> int:
        if x == 0:
            if n <= 0:
                raise ZeroDivisionError("0 to a non-positive power")
            return 0
        if self._exp is not None:
            return self._exp[(self._log[x] * n) % (self.order - 1)]
        n %= self.order - 1
        out, base = 1, x
        while n:
            if n & 1:
                out = self._slow_mul(out, base)
            base = self._slow_mul(base, base)
            n >>= 1
        return out

    def frob(self, x: int, q: int) -> int:
        """``x -> x^q``."""
        return self.pow(x, q) if x else 0

    def from_int(self, n: int) -> int:
        return n % self.p

    def elements(self) -> range:
        return range(self.order)

    def subfield_elements(self, b: int) -> list[int]:
        """The subfield of order ``p^b``, as a sorted list of encodings."""
        if self.a % b:
            raise ValueError(f"F_{self.p}^{b} is not a subfield of {self!r}")
        if b == self.a:
            return list(self.elements())
        step = (self.order - 1) // (self.p ** b - 1)
        gen = self.pow(self.gen, step)
        out = {0}
        x = 1
        for _ in range(self.p ** b - 1):
            out.add(x)
            x = self.mul(x, gen)
        return sorted(out)

    def in_subfield(self, x: int, b: int) -> bool:
        return self.frob(x, self.p ** b) == x

    def digits(self, x: int) -> list[int]:
        return _digits(x, self.p, self.a)

    def from_digits(self, ds) -> int:
        return _undigits([c % self.p for c in ds], self.p)

    def from_gen_power(self, k: int) -> int:
        return self.pow(self.gen, k)

    def render(self, x: int) -> str:
        """Polynomial in the generator symbol ``g`` (prime fields print integers)."""
        if self.a == 1:
            return str(x)
        ds = self.digits(x)
        terms = []
        for i in range(self.a - 1, -1, -1):
            c = ds[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "g" if i == 1 else f"g^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"


@lru_cache(maxsize=None)
def GF(p: int, a: int = 1) -> FiniteField:
    return FiniteField(p, a)
