"""Finite fields F_p (prime p) and F_{2^s}, with optional operation counting.

Elements are plain integers in ``[0, q-1]``.  For binary extension fields an
element is the bitmask of its residue polynomial, so addition is XOR.

Binary-extension fields default to the lexicographically smallest irreducible
polynomial of each degree (the value of the bitmask read as an integer):

    s   modulus      s   modulus
    1   0x2          9   0x203
    2   0x7          10  0x409
    3   0xb          11  0x805
    4   0x13         12  0x1009
    5   0x25         13  0x201b
    6   0x43         14  0x4021
    7   0x83         15  0x8003
    8   0x11b        16  0x1002b

Arithmetic is never counted implicitly.  To count, wrap a field with
:meth:`Field.counting`, which returns a view charging an explicit
:class:`OpCounter`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    InvalidParams,
    NonPrimeModulus,
    ReducibleModulusPolynomial,
    UnsupportedSize,
    ZeroElement,
    ZeroInverse,
)

DEFAULT_MODULI = {
    1: 0x2, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11B,
    9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B, 14: 0x4021,
    15: 0x8003, 16: 0x1002B,
}

MAX_PRIME = 2**31
MAX_DEGREE = 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _clmul_mod(a: int, b: int, poly: int, degree: int) -> int:
    result = 0
    top = 1 << degree
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return result


def _poly_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def is_irreducible_gf2(poly: int) -> bool:
    """Trial division by every polynomial of degree at most deg(poly)/2."""
    degree = poly.bit_length() - 1
    if degree < 1:
        return False
    for g in range(2, 1 << (degree // 2 + 1)):
        if _poly_mod(poly, g) == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Description of a field; the textual form is ``p:13`` or ``gf2:8:0x11b``."""

    kind: str  # "prime" or "gf2"
    p: int = 2
    s: int = 1
    poly: int = 0

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("prime", p=p)

    @classmethod
    def gf2(cls, s: int, poly: int | None = None) -> FieldSpec:
        if poly is None:
            if s not in DEFAULT_MODULI:
                raise UnsupportedSize(f"binary extension degree must be in 1..{MAX_DEGREE}, got {s}")
            poly = DEFAULT_MODULI[s]
        return cls("gf2", p=2, s=s, poly=poly)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        parts = text.strip().split(":")
        try:
            if parts[0] == "p" and len(parts) == 2:
                return cls.prime(int(parts[1]))
            if parts[0] == "gf2" and len(parts) in (2, 3):
                poly = int(parts[2], 16) if len(parts) == 3 else None
                return cls.gf2(int(parts[1]), poly)
        except ValueError as exc:
            if isinstance(exc, InvalidParams):
                raise
            raise InvalidParams(f"malformed field spec {text!r}") from exc
        raise InvalidParams(f"malformed field spec {text!r}; expected p:Q or gf2:S[:POLY]")

    @property
    def q(self) -> int:
        return self.p if self.kind == "prime" else 1 << self.s

    def __str__(self) -> str:
        if self.kind == "prime":
            return f"p:{self.p}"
        return f"gf2:{self.s}:{self.poly:#x}"


@dataclass
class OpCounter:
    """Tally of executed field operations.

    Subtractions and negations are charged as additions.
    """

    adds: int = 0
    muls: int = 0
    invs: int = 0

    def reset(self) -> None:
        self.adds = self.muls = self.invs = 0

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.adds, self.muls, self.invs)

    def __add__(self, other: OpCounter) -> OpCounter:
        return OpCounter(self.adds + other.adds, self.muls + other.muls, self.invs + other.invs)

    @property
    def total(self) -> int:
        return self.adds + self.muls + self.invs


class Field:
    """Common interface of :class:`PrimeField` and :class:`BinaryField`.

    Instances are immutable; compare and hash by their :class:`FieldSpec`.
    """

    spec: FieldSpec
    q: int
    zero = 0
    one = 1

    @property
    def is_binary(self) -> bool:
        return self.spec.kind == "gf2"

    @property
    def characteristic(self) -> int:
        return self.spec.p

    def elements(self) -> range:
        return range(self.q)

    def contains(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.q

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under the ring map Z -> F."""
        if self.is_binary:
            return n & 1
        return n % self.q

    def element_order(self, a: int) -> int:
        """Least ``e >= 1`` with ``a**e == 1``."""
        if a == 0:
            raise ZeroElement("0 has no multiplicative order")
        order = self.q - 1
        for f in prime_factors(order):
            while order % f == 0 and self.pow(a, order // f) == 1:
                order //= f
        return order

    def primitive_element(self) -> int:
        """Smallest canonical element of multiplicative order ``q - 1``."""
        return _primitive(self)

    def counting(self, counter: OpCounter) -> CountedField:
        return CountedField(self, counter)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"Field({self.spec})"


class PrimeField(Field):
    def __init__(self, spec: FieldSpec):
        if not is_prime(spec.p):
            raise NonPrimeModulus(f"{spec.p} is not prime")
        if spec.p >= MAX_PRIME:
            raise UnsupportedSize(f"prime modulus must be < 2^31, got {spec.p}")
        self.spec = spec
        self.q = spec.p

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def neg(self, a):
        return -a % self.q

    def mul(self, a, b):
        return a * b % self.q

    def inv(self, a):
        if a % self.q == 0:
            raise ZeroInverse("inverse of zero")
        return pow(a, -1, self.q)


class BinaryField(Field):
    def __init__(self, spec: FieldSpec):
        s, poly = spec.s, spec.poly
        if not 1 <= s <= MAX_DEGREE:
            raise UnsupportedSize(f"binary extension degree must be in 1..{MAX_DEGREE}, got {s}")
        if poly.bit_length() - 1 != s:
            raise ReducibleModulusPolynomial(f"modulus {poly:#x} does not have degree {s}")
        if not is_irreducible_gf2(poly):
            raise ReducibleModulusPolynomial(f"modulus {poly:#x} is reducible over F_2")
        self.spec = spec
        self.q = 1 << s
        self._build_tables()

    def _build_tables(self):
        s, poly, n = self.spec.s, self.spec.poly, self.q - 1
        g = 1
        if n > 1:
            factors = prime_factors(n)

            def slow_pow(a, e):
                r = 1
                while e:
                    if e & 1:
                        r = _clmul_mod(r, a, poly, s)
                    a = _clmul_mod(a, a, poly, s)
                    e >>= 1
                return r

            g = next(a for a in range(2, self.q)
                     if all(slow_pow(a, n // f) != 1 for f in factors))
        exp = [0] * (2 * n)
        log = [0] * self.q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = _clmul_mod(x, g, poly, s)
        exp[n:] = exp[:n]
        self._exp = tuple(exp)
        self._log = tuple(log)

    def add(self, a, b):
        return a ^ b

    sub = add

    def neg(self, a):
        return a

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroInverse("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]


class CountedField:
    """A view over a field that charges every executed operation to a counter."""

    def __init__(self, field: Field, counter: OpCounter):
        self.field = field
        self.counter = counter
        self.q = field.q
        self.zero = field.zero
        self.one = field.one

    def add(self, a, b):
        self.counter.adds += 1
        return self.field.add(a, b)

    def sub(self, a, b):
        self.counter.adds += 1
        return self.field.sub(a, b)

    def neg(self, a):
        self.counter.adds += 1
        return self.field.neg(a)

    def mul(self, a, b):
        self.counter.muls += 1
        return self.field.mul(a, b)

    def inv(self, a):
        self.counter.invs += 1
        return self.field.inv(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # square-and-multiply; every executed multiplication is charged
    pow = Field.pow


@lru_cache(maxsize=None)
def make_field(spec: FieldSpec) -> Field:
    """Build (and cache) the field described by ``spec``."""
    if spec.kind == "prime":
        return PrimeField(spec)
    if spec.kind == "gf2":
        return BinaryField(spec)
    raise InvalidParams(f"unknown field kind {spec.kind!r}")


def default_field(q: int) -> Field:
    """F_q for a prime ``q`` or a power of two, using the default modulus."""
    if q >= 4 and q & (q - 1) == 0:
        return make_field(FieldSpec.gf2(q.bit_length() - 1))
    return make_field(FieldSpec.prime(q))


@lru_cache(maxsize=None)
def _primitive(field: Field) -> int:
    if field.q == 2:
        return 1
    return next(a for a in range(1, field.q) if field.element_order(a) == field.q - 1)


def primitive_element(field: Field) -> int:
    return field.primitive_element()


def element_order(field: Field, a: int) -> int:
    return field.element_order(a)
