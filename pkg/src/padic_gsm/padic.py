"""Capped-precision arithmetic in Z_p and Q_p.

A nonzero :class:`PadicNumber` is ``p**val * unit`` where ``unit`` is known
modulo ``p**prec`` (``prec`` is the relative precision).  A number that is
zero to the available precision carries ``val = AtLeast(N)``, meaning only
that it is divisible by ``p**N``.
"""

from dataclasses import dataclass
from fractions import Fraction

from ._arith import is_prime, sym_mod, vp
from .errors import DivisionByZero, InvalidPrime, PrecisionExhausted

DEFAULT_PRECISION = 120


@dataclass(frozen=True)
class AtLeast:
    """Valuation lower bound for an element indistinguishable from zero."""

    bound: int

    def __repr__(self):
        return f"AtLeast({self.bound})"


def is_exact(v):
    return not isinstance(v, AtLeast)


def check_prime(p):
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidPrime(f"{p!r} is not a prime")


class PadicNumber:
    __slots__ = ("p", "unit", "val", "prec")

    def __init__(self, p, unit, val, prec):
        # No normalisation here; use the constructors below.
        self.p = p
        self.unit = unit
        self.val = val
        self.prec = prec

    @classmethod
    def zero(cls, p, absprec):
        return cls(p, 0, AtLeast(absprec), absprec)

    @classmethod
    def _normalised(cls, p, value, absprec):
        """Element congruent to ``value`` (an int) modulo ``p**absprec``."""
        value %= p ** absprec if absprec > 0 else 1
        if absprec <= 0 or value == 0:
            return cls.zero(p, absprec)
        v = vp(value, p)
        rel = absprec - v
        return cls(p, (value // p ** v) % p ** rel, v, rel)

    @property
    def is_zero(self):
        return self.unit == 0

    @property
    def absprec(self):
        return self.prec if self.is_zero else self.val + self.prec

    def valuation(self):
        return self.val

    def _other(self, other):
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise ValueError("mixing different primes")
            return other
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return from_rational(other.numerator, other.denominator, self.p,
                                 max(self.absprec, 1) + 1)
        return NotImplemented

    def __neg__(self):
        if self.is_zero:
            return self
        return PadicNumber(self.p, (-self.unit) % self.p ** self.prec, self.val, self.prec)

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.p
        A = min(self.absprec, other.absprec)
        if self.is_zero and other.is_zero:
            return PadicNumber.zero(p, A)
        if self.is_zero:
            base = other.val
        elif other.is_zero:
            base = self.val
        else:
            base = min(self.val, other.val)
        total = 0
        for x in (self, other):
            if not x.is_zero:
                total += x.unit * p ** (x.val - base)
        if A - base <= 0:
            return PadicNumber.zero(p, A)
        total %= p ** (A - base)
        if total == 0:
            return PadicNumber.zero(p, A)
        v = vp(total, p)
        rel = A - base - v
        return PadicNumber(p, (total // p ** v) % p ** rel, base + v, rel)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.p
        if self.is_zero or other.is_zero:
            lo_a = self.val.bound if self.is_zero else self.val
            lo_b = other.val.bound if other.is_zero else other.val
            return PadicNumber.zero(p, lo_a + lo_b)
        rel = min(self.prec, other.prec)
        return PadicNumber(p, self.unit * other.unit % p ** rel, self.val + other.val, rel)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise PrecisionExhausted("inverse of an element that is zero to precision")
        m = self.p ** self.prec
        return PadicNumber(self.p, pow(self.unit, -1, m), -self.val, self.prec)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = from_rational(1, 1, self.p, self.prec if not self.is_zero else self.absprec)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return False
        return (self - other).is_zero

    __hash__ = None

    def to_fraction(self):
        """Rational representative using the symmetric residue of the unit."""
        if self.is_zero:
            return Fraction(0)
        u = sym_mod(self.unit, self.p ** self.prec)
        return Fraction(u) * Fraction(self.p) ** self.val

    def residue(self):
        if self.is_zero or self.val > 0:
            return 0
        if self.val < 0:
            raise ValueError("negative valuation has no residue")
        return self.unit % self.p

    def digits(self):
        """Base-p digits of the integral element, lowest first, up to its precision."""
        if not self.is_zero and self.val < 0:
            raise ValueError("not integral")
        A = self.absprec
        n = 0 if self.is_zero else self.unit * self.p ** self.val
        out = []
        for _ in range(A):
            n, d = divmod(n, self.p)
            out.append(d)
        return out

    def __repr__(self):
        if self.is_zero:
            return f"PadicNumber(0 + O({self.p}^{self.prec}))"
        return f"PadicNumber({self.unit}*{self.p}^{self.val}, rel_prec={self.prec})"


def from_rational(num, den, p, prec=DEFAULT_PRECISION):
    """Image of num/den in Q_p with ``prec`` significant digits."""
    check_prime(p)
    if den == 0:
        raise DivisionByZero("zero denominator")
    if num == 0:
        return PadicNumber.zero(p, prec)
    v = vp(num, p) - vp(den, p)
    num //= p ** vp(num, p)
    den //= p ** vp(den, p)
    m = p ** prec
    unit = num * pow(den, -1, m) % m
    return PadicNumber(p, unit, v, prec)


def from_int(n, p, prec=DEFAULT_PRECISION):
    return from_rational(n, 1, p, prec)


def valuation(x):
    return x.valuation()
