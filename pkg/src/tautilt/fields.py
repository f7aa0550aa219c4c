"""Scalar fields for all exact computations: the rationals and prime fields GF(p).

Field elements are plain python objects (Fraction/int for the rationals,
ints in [0, p) for GF(p)); a Field instance supplies the arithmetic.
"""
from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


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
    """Common interface; see Rationals and PrimeField."""

    characteristic: int

    def of(self, x):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return not a

    @property
    def zero(self):
        return self.of(0)

    @property
    def one(self):
        return self.of(1)


class Rationals(Field):
    characteristic = 0

    def of(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise FieldError(f"not a rational scalar: {x!r}")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    """GF(p) with elements stored as ints in [0, p).  p must stay below 2^31
    so the vectorised elimination can work in int64 without overflow."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"gf({p}): {p} is not prime")
        if p >= 1 << 31:
            raise FieldError(f"gf({p}): modulus too large (needs p < 2^31)")
        self.p = p
        self.characteristic = p

    def of(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise FieldError(
                    f"denominator of {x} vanishes in gf({self.p})")
            return (x.numerator % self.p) * pow(den, self.p - 2, self.p) % self.p
        raise FieldError(f"not a gf({self.p}) scalar: {x!r}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()


def parse_field(text: str) -> Field:
    """Accepts "rationals", "qq", or "gf(p)"."""
    t = text.strip().lower()
    if t in ("rationals", "qq", "q"):
        return QQ
    if t.startswith("gf(") and t.endswith(")"):
        inner = t[3:-1].strip()
        if not inner.lstrip("+-").isdigit():
            raise FieldError(f"bad field spec: {text!r}")
        return PrimeField(int(inner))
    raise FieldError(f"bad field spec: {text!r} (use 'rationals' or 'gf(p)')")
