"""Exact scalar arithmetic over the rationals and prime fields.

Raw scalars are ``gmpy2.mpq`` for the rationals (always gcd-reduced with a
positive denominator) and plain ``int`` residues in ``[0, p)`` for a prime
field.  Vectors throughout the package are tuples or lists of raw scalars; a
:class:`Field` instance knows how to combine them.  :class:`Scalar` is the
field-tagged value type used at API boundaries.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

import gmpy2
from gmpy2 import mpq

from .errors import DivisionByZero, FieldMismatch, InputError

RATIONAL = "rational"
PRIME = "prime"


class Field:
    """The ground field: either ``Q`` or ``F_p``."""

    __slots__ = ("kind", "p", "zero", "one", "_key")

    def __init__(self, kind: str, p: int | None = None):
        if kind == RATIONAL:
            if p is not None:
                raise InputError("the rational field takes no modulus")
            self.zero, self.one = mpq(0), mpq(1)
        elif kind == PRIME:
            if p is None or int(p) < 2 or not gmpy2.is_prime(int(p)):
                raise InputError(f"modulus {p!r} is not prime")
            p = int(p)
            self.zero, self.one = 0, 1
        else:
            raise InputError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p
        self._key = (kind, p)

    # -- identity ------------------------------------------------------------

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONAL else self.p

    @property
    def is_prime(self) -> bool:
        return self.kind == PRIME

    def __eq__(self, other):
        return isinstance(other, Field) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "QQ" if self.kind == RATIONAL else f"GF({self.p})"

    # -- coercion ------------------------------------------------------------

    def __call__(self, x: Any):
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field!r} scalar used in {self!r}")
            return x.value
        if self.kind == RATIONAL:
            if isinstance(x, str):
                return mpq(x.strip())
            if isinstance(x, Fraction):
                return mpq(x.numerator, x.denominator)
            if isinstance(x, bool) or not isinstance(x, (int, type(mpq(0)), type(gmpy2.mpz(0)))):
                raise InputError(f"cannot read {x!r} as a rational")
            return mpq(x)
        p = self.p
        if isinstance(x, str):
            x = mpq(x.strip())
        if isinstance(x, Fraction):
            x = mpq(x.numerator, x.denominator)
        if isinstance(x, type(mpq(0))):
            num, den = int(x.numerator), int(x.denominator)
            if den % p == 0:
                raise DivisionByZero(f"denominator {den} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        if isinstance(x, bool) or not isinstance(x, (int, type(gmpy2.mpz(0)))):
            raise InputError(f"cannot read {x!r} as an element of GF({p})")
        return int(x) % p

    # -- arithmetic on raw scalars -------------------------------------------

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else a * b % self.p

    def neg(self, a):
        return -a if self.p is None else -a % self.p

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random(self, rng, bound: int = 3):
        """A random scalar; small numerators and denominators over ``Q``."""
        if self.p is None:
            return mpq(rng.randint(-bound, bound), rng.randint(1, bound))
        return rng.randrange(self.p)

    # -- vectors -------------------------------------------------------------

    def vec(self, xs: Iterable) -> tuple:
        return tuple(self(x) for x in xs)

    def zeros(self, n: int) -> tuple:
        return (self.zero,) * n

    def unit_vector(self, n: int, k: int) -> tuple:
        v = [self.zero] * n
        v[k] = self.one
        return tuple(v)

    def vadd(self, x: Sequence, y: Sequence) -> tuple:
        if self.p is None:
            return tuple(map(operator.add, x, y))
        p = self.p
        return tuple((a + b) % p for a, b in zip(x, y))

    def vsub(self, x: Sequence, y: Sequence) -> tuple:
        if self.p is None:
            return tuple(map(operator.sub, x, y))
        p = self.p
        return tuple((a - b) % p for a, b in zip(x, y))

    def vscale(self, c, x: Sequence) -> tuple:
        if self.p is None:
            return tuple(c * a for a in x)
        p = self.p
        return tuple(c * a % p for a in x)

    def vneg(self, x: Sequence) -> tuple:
        if self.p is None:
            return tuple(-a for a in x)
        p = self.p
        return tuple(-a % p for a in x)

    def vcombine(self, coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> tuple:
        """``sum(c * v)`` over paired coefficients and vectors of length ``n``."""
        out = [self.zero] * n
        for c, v in zip(coeffs, vectors):
            if not c:
                continue
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
        if self.p is not None:
            p = self.p
            out = [a % p for a in out]
        return tuple(out)

    # -- JSON ----------------------------------------------------------------

    def encode(self, a):
        """JSON scalar: ``"num/den"`` over ``Q``, an integer residue over ``F_p``."""
        if self.p is None:
            return f"{int(a.numerator)}/{int(a.denominator)}"
        return int(a)

    def decode(self, obj):
        if self.p is not None and isinstance(obj, str):
            raise InputError(f"prime-field scalars are integers, got {obj!r}")
        if isinstance(obj, float):
            raise InputError(f"floating point scalar {obj!r} rejected")
        return self(obj)

    def to_json(self) -> dict:
        return {"kind": RATIONAL} if self.p is None else {"kind": PRIME, "p": self.p}

    @classmethod
    def from_json(cls, obj) -> "Field":
        if isinstance(obj, str):
            return parse_field(obj)
        if not isinstance(obj, dict) or "kind" not in obj:
            raise InputError(f"malformed field document {obj!r}")
        return cls(obj["kind"], obj.get("p"))


QQ = Field(RATIONAL)


def GF(p: int) -> Field:
    return Field(PRIME, p)


def parse_field(text: str) -> Field:
    """Parse the CLI spelling: ``q`` for the rationals, ``p:5`` for ``F_5``."""
    t = text.strip().lower()
    if t in ("q", "qq", "rational"):
        return QQ
    if t.startswith("p:"):
        try:
            return GF(int(t[2:]))
        except ValueError as exc:
            raise InputError(f"bad field spelling {text!r}") from exc
    raise InputError(f"bad field spelling {text!r}")


@dataclass(frozen=True)
class Scalar:
    """A field-tagged scalar with canonical value (so equality is structural)."""

    field: Field
    value: Any

    @classmethod
    def of(cls, field: Field, x) -> "Scalar":
        return cls(field, field(x))

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else Scalar(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else Scalar(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else Scalar(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else Scalar(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        if not b:
            raise DivisionByZero("division by zero")
        return Scalar(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __bool__(self):
        return bool(self.value)

    def __repr__(self):
        return f"{self.field.encode(self.value)} in {self.field!r}"


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Apply ``op`` (add, sub, mul, div) to two scalars of one field."""
    if not (isinstance(a, Scalar) and isinstance(b, Scalar)):
        raise InputError("scalar_arith expects Scalar operands")
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    try:
        fn = _OPS[op]
    except KeyError:
        raise InputError(f"unknown operation {op!r}") from None
    return fn(a, b)
