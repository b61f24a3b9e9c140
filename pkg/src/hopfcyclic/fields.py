"""Exact scalar arithmetic over the rationals and prime fields.

Rational scalars are `fractions.Fraction` (arbitrary precision); prime-field
scalars are plain ints kept reduced in [0, p).  Every arithmetic operation in
the package goes through a Field object, so no floating point and no tolerance
ever appears.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """The rationals (p is None) or the prime field of p elements."""

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None and not is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        self.p = p

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(QQ)" if self.p is None else "Field(GF(%d))" % self.p

    # -- scalar construction -------------------------------------------------

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def of(self, x):
        """Coerce an int / Fraction / scalar string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def parse(self, s: str):
        """Parse an exact scalar literal: integer or fraction 'a/b'."""
        s = s.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            num, den = int(num), int(den)
            if self.p is None:
                return Fraction(num, den)
            if den % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return (num * pow(den, -1, self.p)) % self.p
        return self.of(int(s))

    def to_str(self, x) -> str:
        """Canonical exact string form (inverse of parse up to normalization)."""
        if self.p is None:
            x = Fraction(x)
            if x.denominator == 1:
                return str(x.numerator)
            return "%d/%d" % (x.numerator, x.denominator)
        return str(x % self.p)

    # -- arithmetic -----------------------------------------------------------

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == (1 if self.p is not None else Fraction(1))
