"""Exact coefficient arithmetic: the rationals Q and prime fields Z_p.

All linear algebra in this package is parameterized by a field object with a
small arithmetic protocol (coerce/add/sub/mul/neg/inv).  Field elements are
plain values: ``fractions.Fraction`` for Q, ints in ``range(p)`` for Z_p, so
zero tests are ordinary truth tests and equality is ``==``.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(p: int) -> bool:
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


class Rationals:
    """The field Q; elements are ``Fraction`` values."""

    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, value):
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def mul_int(self, a, k):
        # k is a plain int; avoids an intermediate coercion in hot loops
        return a * k

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def describe(self) -> str:
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(("field", 0))

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """The field Z_p for a prime p; elements are ints in ``range(p)``."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.p

    def coerce(self, value):
        if isinstance(value, Fraction):
            num = value.numerator % self.p
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(
                    f"denominator {value.denominator} not invertible mod {self.p}"
                )
            return num * pow(den, self.p - 2, self.p) % self.p
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def mul_int(self, a, k):
        return (a * k) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 not invertible in Z_{self.p}")
        return pow(a, self.p - 2, self.p)

    def describe(self) -> str:
        return f"Z_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("field", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


#: shared Q instance; PrimeField instances are cheap to construct on demand
QQ = Rationals()


def parse_field(text: str):
    """Parse a field descriptor: ``q``/``rational`` for Q, ``zp:5`` or ``5`` for Z_5."""
    t = text.strip().lower()
    if t in ("q", "qq", "rational", "rationals"):
        return QQ
    if t.startswith("zp:"):
        t = t[3:]
    if not t.isdigit():
        raise ValueError(f"cannot parse field descriptor {text!r}")
    return PrimeField(int(t))
