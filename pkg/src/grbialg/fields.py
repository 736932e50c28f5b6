"""Exact scalar arithmetic over the rationals and over prime fields.

Scalars are plain Python objects: ``fractions.Fraction`` in characteristic 0
and reduced residues (ints in ``range(p)``) in characteristic p.  A ``Field``
value only carries the characteristic and the conversion/formatting rules;
all arithmetic is exact by construction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputFormatError


def _is_prime(n: int) -> bool:
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


class Field:
    """The field of scalars: Q when ``char == 0``, else the integers mod p.

    Elements are Fraction (char 0) or ints reduced mod p (char p).  Two
    Field values are interchangeable iff they have equal characteristic.
    """

    __slots__ = ("char",)

    def __init__(self, char: int = 0):
        if char != 0:
            if not _is_prime(char) or char >= 2**31:
                raise ValueError(f"characteristic must be 0 or a prime < 2**31, got {char}")
        self.char = char

    @property
    def kind(self) -> str:
        return "prime_field" if self.char else "rationals"

    @property
    def zero(self):
        return 0 if self.char else Fraction(0)

    @property
    def one(self):
        return 1 if self.char else Fraction(1)

    def of(self, value):
        """Coerce an int, Fraction, or scalar string into a field element."""
        if isinstance(value, str):
            return self.parse(value)
        if self.char:
            if isinstance(value, Fraction):
                if value.denominator % self.char == 0:
                    raise InputFormatError(f"denominator not invertible mod {self.char}")
                return value.numerator * self.inv(value.denominator % self.char) % self.char
            return int(value) % self.char
        return Fraction(value)

    def neg(self, a):
        return (-a) % self.char if self.char else -a

    def inv(self, a):
        if self.char:
            a %= self.char
            if a == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(a, self.char - 2, self.char)
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return Fraction(1) / a

    def parse(self, text: str):
        """Parse the scalar text form: "a/b" or "a" over Q, a residue mod p."""
        text = text.strip()
        try:
            if self.char:
                if "/" in text:
                    num, den = text.split("/")
                    return int(num) * self.inv(int(den) % self.char) % self.char
                return int(text) % self.char
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"bad scalar {text!r}: {exc}") from None

    def fmt(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"


QQ = Field(0)


def GF(p: int) -> Field:
    """The prime field with p elements."""
    return Field(p)
