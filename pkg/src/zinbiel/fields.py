"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Every identity in this package is checked with exact equality, so scalars are
either `fractions.Fraction` (the default) or residues modulo a prime p > 3.
Primes 2 and 3 are rejected: several constructions divide by 2 and identities
like x*x = 2(x.x) degenerate in tiny characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FpElement:
    """Residue modulo a fixed prime. Ints mix freely; moduli must agree."""

    value: int
    p: int

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other % self.p, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement((self.value + o.value) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement((self.value - o.value) % self.p, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement((self.value * o.value) % self.p, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return FpElement((-self.value) % self.p, self.p)

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value}"


class Rationals:
    """The field of rationals; scalars are `Fraction` values."""

    name = "Q"
    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, text: str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational {text!r}: {exc}") from None

    def format(self, x) -> str:
        return str(x)

    def random(self, rng, lo: int = -3, hi: int = 3):
        # small integer box keeps intermediate rationals from blowing up
        return Fraction(rng.randint(lo, hi))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The prime field F_p for a prime p > 3."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p <= 3:
            raise FieldError(f"p must exceed 3, got {p}")
        self.p = p

    @property
    def name(self) -> str:
        return f"Fp:{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def from_int(self, n: int):
        return FpElement(n % self.p, self.p)

    def parse(self, text: str):
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return self.from_int(int(num)) / self.from_int(int(den))
            return self.from_int(int(text))
        except ZeroDivisionError:
            raise FieldError(f"bad coefficient {text!r}: division by zero") from None
        except ValueError:
            raise FieldError(f"bad coefficient {text!r} for {self.name}") from None

    def format(self, x) -> str:
        return str(x.value)

    def random(self, rng, lo: int = 0, hi: int = 0):
        return FpElement(rng.randrange(self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return self.name


QQ = Rationals()


def field_from_name(text: str):
    """Resolve a field tag as written in document headers: `Q` or `Fp:<p>`."""
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise FieldError(f"bad prime in field tag {text!r}") from None
        return PrimeField(p)
    raise FieldError(f"unknown field tag {text!r}")
