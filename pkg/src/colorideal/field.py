"""Exact coefficient fields: the rationals and prime fields GF(p).

Polynomials store raw coefficient values (``gmpy2.mpq`` for the rationals,
plain ``int`` in ``[0, p)`` for GF(p)) and go through a :class:`FieldConfig`
to create and combine them.  :class:`Scalar` is the checked, user-facing
wrapper around one such value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import gmpy2
from gmpy2 import mpq

RATIONALS = "Q"
PRIME_FIELD = "GF"


class FieldError(ValueError):
    """Invalid field configuration or illegal field operation."""


class CharacteristicError(FieldError):
    """The field characteristic divides the number of colors."""


@dataclass(frozen=True)
class FieldConfig:
    kind: str = RATIONALS
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise FieldError("the rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            if self.modulus is None or self.modulus < 2 or not gmpy2.is_prime(self.modulus):
                raise FieldError(f"modulus {self.modulus} is not prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONALS else self.modulus

    @property
    def mod(self) -> int | None:
        """The modulus for prime fields, ``None`` for the rationals."""
        return self.modulus

    # raw value helpers, used by the polynomial layer

    def convert(self, x) -> object:
        """Canonical raw value for an int, Fraction-like, str or Scalar."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldError(f"scalar over {x.field} used in {self}")
            return x.value
        if self.modulus is None:
            return mpq(x)
        if isinstance(x, str):
            x = mpq(x)
        if isinstance(x, int):
            return x % self.modulus
        q = mpq(x)
        den = int(q.denominator) % self.modulus
        if den == 0:
            raise FieldError(f"{x} has no image in {self}")
        return int(q.numerator) * pow(den, -1, self.modulus) % self.modulus

    @property
    def zero(self):
        return mpq(0) if self.modulus is None else 0

    @property
    def one(self):
        return mpq(1) if self.modulus is None else 1

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in " + str(self))
        if self.modulus is None:
            return 1 / a
        return pow(a, -1, self.modulus)

    def neg(self, a):
        if self.modulus is None:
            return -a
        return -a % self.modulus

    def render(self, a) -> str:
        """Text for a raw value; prime-field values use the symmetric residue."""
        if self.modulus is None:
            return str(a)
        if a > self.modulus // 2:
            a -= self.modulus
        return str(a)

    def __str__(self):
        return "QQ" if self.modulus is None else f"GF({self.modulus})"

    def spec(self) -> str:
        """Short command-line form: ``q`` or ``fp:P``."""
        return "q" if self.modulus is None else f"fp:{self.modulus}"


QQ = FieldConfig()


def GF(p: int) -> FieldConfig:
    return FieldConfig(PRIME_FIELD, p)


def parse_field(text: str) -> FieldConfig:
    """Parse ``q`` or ``fp:P``."""
    t = text.strip().lower()
    if t in ("q", "qq", "0"):
        return QQ
    if t.startswith("fp:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise FieldError(f"bad field spec {text!r}") from None
        return GF(p)
    raise FieldError(f"bad field spec {text!r}; expected 'q' or 'fp:P'")


def validate_field(cfg: FieldConfig, k: int) -> None:
    """Reject fields whose characteristic divides the color count ``k``."""
    if k < 1:
        raise FieldError(f"color count must be positive, got {k}")
    p = cfg.characteristic
    if p and k % p == 0:
        raise CharacteristicError(f"characteristic {p} divides k = {k}; "
                         "the k-th roots of unity would not be distinct")


Number = Union[int, "Scalar"]


class Scalar:
    """Immutable element of a :class:`FieldConfig`."""

    __slots__ = ("field", "value")

    def __init__(self, value, field: FieldConfig = QQ):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.convert(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _raw(cls, value, field):
        s = object.__new__(cls)
        object.__setattr__(s, "field", field)
        object.__setattr__(s, "value", value)
        return s

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError(f"mixed fields {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return Scalar(other, self.field)
        return NotImplemented

    def _wrap(self, v):
        p = self.field.modulus
        return Scalar._raw(v % p if p is not None else v, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value * self.field.inv(o.value))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return Scalar._raw(self.field.neg(self.value), self.field)

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.convert(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"Scalar({self.field.render(self.value)}, {self.field})"

    def __str__(self):
        return str(self.value)
