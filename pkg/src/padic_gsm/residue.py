"""Finite residue fields GF(p^f) = GF(p)[y]/(modulus) and brute-force root finding.

Elements are coefficient vectors in the basis 1, y, ..., y^(f-1), where y is
the class of the variable.  Enumeration order treats the vector as a base-p
number with the constant term as the least significant digit.
"""

from ._arith import is_prime
from .errors import FieldTooLarge, InvalidInput, InvalidPrime

ENUMERATION_GUARD = 2 ** 16


def _gfp_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def gfp_divmod(a, b, p):
    a = _gfp_trim(x % p for x in a)
    b = _gfp_trim(x % p for x in b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        s = len(a) - len(b)
        q[s] = c
        for i, y in enumerate(b):
            a[s + i] = (a[s + i] - c * y) % p
        a = _gfp_trim(a)
    return _gfp_trim(q), a


def gfp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _gfp_trim(out)


def gfp_gcd(a, b, p):
    a, b = _gfp_trim(x % p for x in a), _gfp_trim(x % p for x in b)
    while b:
        _, r = gfp_divmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def gfp_powmod(base, k, mod, p):
    result = [1]
    base = gfp_divmod(base, mod, p)[1]
    while k:
        if k & 1:
            result = gfp_divmod(gfp_mul(result, base, p), mod, p)[1]
        base = gfp_divmod(gfp_mul(base, base, p), mod, p)[1]
        k >>= 1
    return result


def gfp_is_irreducible(poly, p):
    """Ben-Or test: no factor of degree d <= deg/2 divides poly."""
    poly = _gfp_trim(x % p for x in poly)
    n = len(poly) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    xpow = [0, 1]
    for _ in range(n // 2):
        xpow = gfp_powmod(xpow, p, poly, p)
        diff = list(xpow) + [0] * max(0, 2 - len(xpow))
        diff[1] = (diff[1] - 1) % p
        if len(gfp_gcd(poly, diff, p)) > 1:
            return False
    return True


def monic_polys(p, degree):
    """All monic degree-``degree`` polynomials over GF(p), constant coefficient fastest."""
    for index in range(p ** degree):
        coeffs = []
        for _ in range(degree):
            index, d = divmod(index, p)
            coeffs.append(d)
        yield tuple(coeffs) + (1,)


def first_irreducible(p, degree):
    for poly in monic_polys(p, degree):
        if gfp_is_irreducible(poly, p):
            return poly
    raise InvalidInput(f"no irreducible polynomial of degree {degree} over GF({p})")


class ResidueField:
    """GF(p^f) presented as GF(p)[y]/(modulus)."""

    def __init__(self, p, f, modulus=None):
        if not is_prime(p):
            raise InvalidPrime(f"{p} is not prime")
        if f < 1:
            raise InvalidInput("residue degree must be positive")
        self.p = p
        self.f = f
        if modulus is None:
            modulus = first_irreducible(p, f)
        else:
            modulus = [int(c) % p for c in modulus]
            modulus = _gfp_trim(modulus)
            if len(modulus) != f + 1:
                raise InvalidInput(f"residue modulus must have degree {f}")
            inv = pow(modulus[-1], -1, p)
            modulus = [c * inv % p for c in modulus]
            if not gfp_is_irreducible(modulus, p):
                raise InvalidInput(f"residue modulus {modulus} is reducible over GF({p})")
        self.modulus = tuple(modulus)
        self.order = p ** f

    def __eq__(self, other):
        return (isinstance(other, ResidueField) and self.p == other.p
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"ResidueField(p={self.p}, f={self.f}, modulus={list(self.modulus)})"

    def __call__(self, value):
        if isinstance(value, ResidueElement):
            if value.parent != self:
                raise InvalidInput("element of a different residue field")
            return value
        if isinstance(value, int):
            return ResidueElement(self, (value % self.p,) + (0,) * (self.f - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.f:
            _, coeffs = gfp_divmod(coeffs, self.modulus, self.p)
        coeffs = list(coeffs) + [0] * (self.f - len(coeffs))
        return ResidueElement(self, tuple(coeffs))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def gen(self):
        """Class of y; a root of the modulus."""
        if self.f == 1:
            return self(-self.modulus[0])
        return self([0, 1])

    def from_index(self, index):
        coeffs = []
        for _ in range(self.f):
            index, d = divmod(index, self.p)
            coeffs.append(d)
        return ResidueElement(self, tuple(coeffs))

    def enumerate(self):
        if self.order > ENUMERATION_GUARD:
            raise FieldTooLarge(f"|k| = {self.order} exceeds the enumeration guard")
        return [self.from_index(i) for i in range(self.order)]

    def __iter__(self):
        return iter(self.enumerate())


class ResidueElement:
    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs):
        self.parent = parent
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, ResidueElement):
            if other.parent != self.parent:
                raise InvalidInput("mixing residue fields")
            return other
        if isinstance(other, int):
            return self.parent(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.parent.p
        return ResidueElement(self.parent, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.parent.p
        return ResidueElement(self.parent, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        k = self.parent
        prod = gfp_mul(_gfp_trim(self.coeffs), _gfp_trim(other.coeffs), k.p)
        return k(prod)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = self.parent.one, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in the residue field")
        return self ** (self.parent.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def is_zero(self):
        return not any(self.coeffs)

    def index(self):
        p = self.parent.p
        return sum(c * p ** i for i, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.parent(other)
        if not isinstance(other, ResidueElement):
            return NotImplemented
        return self.parent == other.parent and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.parent, self.coeffs))

    def __lt__(self, other):
        return self.index() < other.index()

    def __repr__(self):
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


# polynomials over k: tuples of ResidueElement, constant term first

def kpoly_degree(poly):
    for i in range(len(poly) - 1, -1, -1):
        if not poly[i].is_zero():
            return i
    return -1


def kpoly_eval(poly, x):
    acc = x.parent.zero
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def roots_in_k(poly, k=None):
    """All roots in k of a polynomial over k, by exhaustive evaluation (enumeration order)."""
    poly = list(poly)
    if k is None:
        if not poly:
            raise InvalidInput("cannot infer the residue field of an empty polynomial")
        k = poly[0].parent
    poly = [k(c) for c in poly]
    if kpoly_degree(poly) < 0:
        raise InvalidInput("zero polynomial has every element as a root")
    return [a for a in k.enumerate() if kpoly_eval(poly, a).is_zero()]
