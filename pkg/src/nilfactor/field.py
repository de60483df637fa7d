"""Exact scalar arithmetic over the rationals and prime fields GF(p).

Matrices store raw Python numbers for speed: ``int`` residues in ``[0, p)``
for GF(p), and ``int`` or :class:`fractions.Fraction` for QQ (integral
rationals are kept as ``int``).  :class:`FieldScalar` wraps a raw value
together with its field for the checked scalar API.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldMismatch, ParseError

Raw = Union[int, Fraction]


def is_prime(p: int) -> bool:
    """Trial division; moduli are desk-scale."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface of :class:`Rationals` and :class:`PrimeField`."""

    characteristic: int
    zero: Raw = 0
    one: Raw = 1

    def __call__(self, value) -> Raw:
        """Coerce an int, Fraction, FieldScalar or string to a raw element."""
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        return self._coerce(value)

    def _coerce(self, value) -> Raw:
        raise NotImplementedError

    def reduce(self, x: Raw) -> Raw:
        raise NotImplementedError

    def inv(self, x: Raw) -> Raw:
        raise NotImplementedError

    def parse(self, text: str) -> Raw:
        text = text.strip()
        if not _ENTRY_RE.match(text):
            raise ParseError(f"bad {self} entry {text!r}; expected an integer or a/b")
        try:
            return self._coerce(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad {self} entry {text!r}") from exc

    def format(self, x: Raw) -> str:
        return str(x)

    def scalar(self, value) -> "FieldScalar":
        return FieldScalar(self, self(value))

    def elements(self):
        """Iterate over all elements (finite fields only)."""
        raise TypeError(f"{self} is infinite")

    @property
    def size(self) -> float:
        raise NotImplementedError


class Rationals(Field):
    characteristic = 0

    def _coerce(self, value) -> Raw:
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            return value.numerator if value.denominator == 1 else value
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def reduce(self, x: Raw) -> Raw:
        if type(x) is int or x.denominator != 1:
            return x
        return x.numerator

    def inv(self, x: Raw) -> Raw:
        if x == 0:
            raise DivisionByZero("inverse of 0 in QQ")
        return self.reduce(Fraction(1) / x)

    @property
    def size(self) -> float:
        return float("inf")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"GF(p) needs a prime modulus, got {p!r}")
        self.p = p
        self.characteristic = p

    def _coerce(self, value) -> Raw:
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def reduce(self, x: Raw) -> Raw:
        return x % self.p

    def inv(self, x: Raw) -> Raw:
        if x % self.p == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        return pow(x, -1, self.p)

    def elements(self):
        return iter(range(self.p))

    @property
    def size(self) -> float:
        return self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


_ENTRY_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_GF_RE = re.compile(r"^\s*GF\(\s*(\d+)\s*\)\s*$", re.IGNORECASE)


def parse_field(text: str) -> Field:
    """Parse the textual forms ``QQ`` and ``GF(p)``."""
    if text.strip().upper() == "QQ":
        return QQ
    m = _GF_RE.match(text)
    if not m:
        raise ParseError(f"unknown field {text!r}; expected QQ or GF(p)")
    try:
        return PrimeField(int(m.group(1)))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


class FieldScalar:
    """An immutable element of a specific field, with checked arithmetic."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: Raw):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.reduce(value))

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    def _other(self, other) -> Raw:
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def _wrap(self, raw: Raw) -> "FieldScalar":
        return FieldScalar(self.field, raw)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def inv(self) -> "FieldScalar":
        return self._wrap(self.field.inv(self.value))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * self.field.inv(o))

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.field}({self.field.format(self.value)})"

    def __str__(self):
        return self.field.format(self.value)
