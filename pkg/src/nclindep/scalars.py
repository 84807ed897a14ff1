"""Exact scalar configurations: arbitrary-precision rationals or a prime field.

Scalars are plain Python objects supporting +, -, * and truth testing:

* rational mode -- ``int`` (preferred when integral) or ``fractions.Fraction``;
  the two interoperate, compare equal and hash alike, so no wrapping is needed.
* prime-field mode -- :class:`ModP` residues carrying their modulus.

Every container (polynomial, matrix) records which field configuration its
scalars belong to; mixing configurations is rejected at the operation level.
Division never goes through ``/`` on raw ints (which would produce floats);
use ``Field.div`` in generic code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, "ModP"]


class FieldMismatchError(ValueError):
    """Operands carry different scalar configurations (QQ vs GF(p), or different primes)."""


class ScalarParseError(ValueError):
    """A scalar literal could not be interpreted in the configured field."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class ModP:
    """Residue a mod p; arithmetic stays in [0, p).  Int operands are coerced."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other) -> "ModP":
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatchError(f"residues mod {self.p} and mod {other.p}")
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def inverse(self) -> "ModP":
        if self.v == 0:
            raise ZeroDivisionError(f"inverse of 0 mod {self.p}")
        return ModP(pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class RationalField:
    """The field of exact rationals.  Use the module-level singleton ``QQ``."""

    name = "rational"
    zero = 0
    one = 1

    def from_int(self, a: int) -> Scalar:
        return a

    def normalize(self, x) -> Scalar:
        """Collapse integral Fractions back to int (canonical storage form)."""
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def div(self, a, b) -> Scalar:
        return self.normalize(Fraction(a) / Fraction(b))

    def parse(self, text: str) -> Scalar:
        num, slash, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if slash else 1
        except ValueError:
            raise ScalarParseError(f"bad rational literal {text!r}") from None
        if d == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        return self.normalize(Fraction(n, d))

    def to_str(self, x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field GF(p) for an odd prime p."""

    def __init__(self, p: int):
        if p <= 2 or not _is_prime(p):
            raise ValueError(f"prime field modulus must be a prime > 2, got {p}")
        self.p = p
        self.name = f"gf({p})"
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def from_int(self, a: int) -> ModP:
        return ModP(a, self.p)

    def normalize(self, x) -> ModP:
        if isinstance(x, int):
            return ModP(x, self.p)
        return x

    def div(self, a, b) -> ModP:
        return self.normalize(a) / self.normalize(b)

    def parse(self, text: str) -> ModP:
        num, slash, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if slash else 1
        except ValueError:
            raise ScalarParseError(f"bad scalar literal {text!r}") from None
        if d % self.p == 0:
            raise ScalarParseError(
                f"denominator {d} is not invertible mod {self.p}"
            )
        return ModP(n, self.p) / ModP(d, self.p)

    def to_str(self, x) -> str:
        return str(self.normalize(x))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()

Field = Union[RationalField, PrimeField]


def check_same_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatchError(f"mixed scalar configurations: {a!r} vs {b!r}")


def field_from_name(spec: str) -> Field:
    """Parse a field spec string: 'rational' or 'prime:P'."""
    if spec == "rational":
        return QQ
    kind, sep, arg = spec.partition(":")
    if kind == "prime" and sep:
        try:
            p = int(arg)
        except ValueError:
            raise ValueError(f"bad prime in field spec {spec!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field spec {spec!r} (expected 'rational' or 'prime:P')")
