"""Arithmetic in small finite fields GF(p^k).

Elements are plain integers 0 <= v < p^k encoding the coefficient vector of
a polynomial in a generator g: v = sum(c_i * p**i), i.e. base-p digits, with
c_0 the constant term.  The modulus is the monic irreducible polynomial of
degree k over GF(p) whose non-leading coefficient word (read from degree
k-1 down to 0) is smallest as a base-p integer; it is found by exhaustive
search, so two builds of GF(p^k) always agree.  The element order used for
every downstream tie-break (embedding roots, transversal representatives,
product enumeration) is plain integer order on the encoding, which is
lexicographic order on the (c_{k-1}, ..., c_0) coefficient word.

Fields of order <= 256 carry dense add/mul/neg/inv lookup tables (numpy
uint8) so that matrix work over the field can be vectorized; larger fields
(up to 2^16) fall back to polynomial arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

__all__ = [
    "Field",
    "FieldElement",
    "make_field",
    "is_prime",
    "factor_prime_power",
    "embedding_table",
    "additive_transversal",
]

MAX_ORDER = 1 << 16
TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_prime_power(q: int) -> Tuple[int, int]:
    """Return (p, e) with q = p**e, or raise ValueError."""
    if q < 2:
        raise ValueError("not a prime power: %r" % (q,))
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValueError("not a prime power: %r" % (q,))
            return p, e
    raise ValueError("not a prime power: %r" % (q,))


# -- polynomial helpers; coefficient lists ascending by degree, entries mod p


def _poly_trim(c: List[int]) -> List[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: List[int], b: List[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)

def _poly_mod(a: List[int], m: List[int], p: int) -> List[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * mi) % p
        _poly_trim(a)
    return a


def _irreducible(m: List[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            cand = _digits(code, p, d) + [1]
            if not _poly_mod(m, cand, p):
                return False
    return True


def _digits(v: int, p: int, k: int) -> List[int]:
    out = []
    for _ in range(k):
        out.append(v % p)
        v //= p
    return out


def _undigits(c: List[int], p: int) -> int:
    v = 0
    for ci in reversed(c):
        v = v * p + ci
    return v


class Field:
    """GF(p^k) with integer-encoded elements.  Build via make_field()."""

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise ValueError("characteristic must be prime, got %r" % (p,))
        if k < 1 or p**k > MAX_ORDER:
            raise ValueError("field order %d out of range" % (p**k,))
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = None if k == 1 else self._find_modulus()
        self._tables = None

    def _find_modulus(self) -> Tuple[int, ...]:
        # smallest non-leading coefficient word, degree k-1 digit most
        # significant = smallest integer code
        for code in range(self.order):
            cand = _digits(code, self.p, self.k) + [1]
            if _irreducible(cand, self.p):
                return tuple(reversed(cand))  # store descending by degree
        raise AssertionError("no irreducible polynomial found")

    # -- element arithmetic on integer encodings

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        da, db = _digits(a, self.p, self.k), _digits(b, self.p, self.k)
        return _undigits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return _undigits([(-x) % self.p for x in _digits(a, self.p, self.k)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        prod = _poly_mul(_digits(a, self.p, self.k), _digits(b, self.p, self.k), self.p)
        prod = _poly_mod(prod, list(reversed(self.modulus)), self.p)
        return _undigits(prod, self.p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero in GF(%d)" % self.order)
        return self.pow(a, self.order - 2)

    def pow(self, a: int, n: int) -> int:
        n %= self.order - 1 if a else 1
        out, base = 1, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def elements(self) -> range:
        return range(self.order)

    def units(self) -> range:
        return range(1, self.order)

    def fp_basis(self) -> List[int]:
        """1, g, ..., g^{k-1} where g is the class of x mod the modulus."""
        return [self.p**i for i in range(self.k)]

    def primitive_element(self) -> int:
        for a in range(1, self.order):
            if self.multiplicative_order(a) == self.order - 1:
                return a
        raise AssertionError("no primitive element")

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def tables(self):
        """(ADD, MUL, NEG, INV) dense uint8 tables; order <= 256 only."""
        if self.order > TABLE_LIMIT:
            raise ValueError("no dense tables for field of order %d" % self.order)
        if self._tables is None:
            q = self.order
            add = np.zeros((q, q), dtype=np.uint8)
            mul = np.zeros((q, q), dtype=np.uint8)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self.add(a, b)
                    mul[a, b] = self.mul(a, b)
            neg = np.array([self.neg(a) for a in range(q)], dtype=np.uint8)
            inv = np.zeros(q, dtype=np.uint8)
            for a in range(1, q):
                inv[a] = self.inv(a)
            self._tables = (add, mul, neg, inv)
        return self._tables

    def element(self, v: int) -> "FieldElement":
        return FieldElement(self, v)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __repr__(self) -> str:
        return "GF(%d)" % self.order if self.k == 1 else "GF(%d^%d)" % (self.p, self.k)


class FieldElement:
    """Thin operator-overloading wrapper around an integer encoding."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        if not 0 <= value < field.order:
            raise ValueError("encoding %r out of range for %r" % (value, field))
        self.field = field
        self.value = value

    def _check(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            other = FieldElement(self.field, other)
        if other.field != self.field:
            raise ValueError("mixed fields: %r vs %r" % (self.field, other.field))
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        return (self.field, self.value) == (other.field, other.value)

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return "%r[%d]" % (self.field, self.value)


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> Field:
    return Field(p, k)


@lru_cache(maxsize=None)
def embedding_table(p: int, k_small: int, k_big: int) -> Tuple[int, ...]:
    """Embedding GF(p^k_small) -> GF(p^k_big) as a lookup tuple.

    Requires k_small | k_big.  The image of g_small is the smallest root (in
    element order) of the small modulus inside the big field, so the table is
    reproducible.  The map is checked to be a ring homomorphism.
    """
    if k_big % k_small != 0:
        raise ValueError("GF(%d^%d) does not embed in GF(%d^%d)" % (p, k_small, p, k_big))
    small, big = make_field(p, k_small), make_field(p, k_big)
    if k_small == 1:
        table = tuple(range(p))  # prime subfield encodings coincide
    else:
        mod = list(reversed(small.modulus))  # ascending degree, entries in GF(p)
        root = None
        for cand in big.elements():
            acc = 0
            for c in reversed(mod):
                acc = big.add(big.mul(acc, cand), c)
            if acc == 0:
                root = cand
                break
        assert root is not None, "modulus has no root in the big field"
        table = []
        for v in small.elements():
            acc, rpow = 0, 1
            for c in _digits(v, p, k_small):
                acc = big.add(acc, big.mul(c, rpow))
                rpow = big.mul(rpow, root)
            table.append(acc)
        table = tuple(table)
    assert len(set(table)) == small.order
    for a in small.elements():
        for b in small.elements():
            assert table[small.add(a, b)] == big.add(table[a], table[b])
            assert table[small.mul(a, b)] == big.mul(table[a], table[b])
    return table


def additive_transversal(p: int, k_small: int, k_big: int) -> Tuple[int, ...]:
    """Coset representatives of the embedded additive group of GF(p^k_small)
    inside GF(p^k_big), greedily smallest in element order (so reps[0] = 0)."""
    table = embedding_table(p, k_small, k_big)
    big = make_field(p, k_big)
    seen = set()
    reps = []
    for v in big.elements():
        if v not in seen:
            reps.append(v)
            for w in table:
                seen.add(big.add(v, w))
    assert len(reps) * len(table) == big.order
    return tuple(reps)
