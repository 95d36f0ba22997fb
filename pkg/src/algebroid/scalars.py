"""Exact scalar fields: the rationals and prime fields F_p.

Every computation in this package is exact; no floating point anywhere.
Rationals are `fractions.Fraction` (always canonical: reduced, positive
denominator).  Prime-field elements are `FpElement` with a representative
in [0, p).
"""

from __future__ import annotations

from fractions import Fraction


class ScalarError(ValueError):
    pass


class FpElement:
    """An element of F_p, canonical representative in [0, p)."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ScalarError("mixed prime fields")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val + other.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val - other.val, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(other.val - self.val, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val * other.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.val == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.val * pow(other.val, self.p - 2, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"{self.val}"


class Field:
    """A concrete exact field with parsing and formatting of scalars."""

    name = "?"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def of(self, n: int):
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError

    def fmt(self, x) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def of(self, n: int):
        return Fraction(n)

    def parse(self, s: str):
        s = s.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            den_i = int(den)
            if den_i == 0:
                raise ScalarError(f"invalid scalar {s!r}: zero denominator")
            return Fraction(int(num), den_i)
        return Fraction(int(s))

    def fmt(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise ScalarError(f"{p} is not prime")
        self.p = p
        self.name = f"fp:{p}"

    def zero(self):
        return FpElement(0, self.p)

    def one(self):
        return FpElement(1, self.p)

    def of(self, n: int):
        return FpElement(n, self.p)

    def parse(self, s: str):
        s = s.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            return self.of(int(num)) / self.of(int(den))
        return self.of(int(s))

    def fmt(self, x) -> str:
        if isinstance(x, int):
            x = self.of(x)
        return str(x.val)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


QQ = RationalField()

_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_from_name(name: str) -> Field:
    """Resolve a CLI-style field name: "q" or "fp:<p>"."""
    if name == "q":
        return QQ
    if name.startswith("fp:"):
        return GF(int(name[3:]))
    raise ScalarError(f"unknown field {name!r}")
