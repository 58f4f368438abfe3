"""Polynomials over a local field K, univariate and bivariate in (x, t).

Coefficient lists are constant-term first.  A bivariate polynomial stores,
for each power of x, the dense list of its t-coefficients.

Normalisation divides by p^q * pi^r where content = q*e + r.  This differs
from pi^content by a unit, so roots and reductions behave identically, and
coefficients with rational entries stay rational whenever possible.
"""

from .errors import InvalidInput, NotNormalized, PrecisionExhausted
from .padic import AtLeast
from .residue import kpoly_degree


def _as_elements(K, coeffs):
    return [K(c) for c in coeffs]


def _content(elements):
    vals = [c.valuation() for c in elements]
    exact = [v for v in vals if not isinstance(v, AtLeast)]
    if not exact:
        raise PrecisionExhausted("every coefficient is zero to precision")
    v = min(exact)
    bounds = [b.bound for b in vals if isinstance(b, AtLeast)]
    if bounds and v >= min(bounds):
        raise PrecisionExhausted(
            f"content {v} is not below the precision of a vanished coefficient ({min(bounds)})")
    return v


def divide_content(K, x, v):
    """x / (p^q pi^r) with v = q*e + r."""
    q, r = divmod(v, K.e)
    y = x.mul_p_pow(-q)
    if r:
        y = y * K.pi_pow(-r)
    return y


class PolyOverK:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = _as_elements(field, coeffs) if coeffs else [field.zero]

    @classmethod
    def from_ints(cls, K, coeffs):
        return cls(K, list(coeffs))

    def degree(self):
        for i in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[i].is_zero():
                return i
        return -1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __call__(self, x):
        acc = self.field.zero
        x = self.field(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return PolyOverK(self.field, [c * i for i, c in enumerate(self.coeffs)][1:] or [0])

    def reversed(self):
        """x^n phi(1/x) with n = len(coeffs) - 1."""
        return PolyOverK(self.field, list(reversed(self.coeffs)))

    def content_valuation(self):
        return _content(self.coeffs)

    def normalize(self):
        v = self.content_valuation()
        if v == 0:
            return self
        return PolyOverK(self.field, [divide_content(self.field, c, v) for c in self.coeffs])

    def reduce(self):
        """Coefficient-wise residues; the polynomial must be normalised."""
        if self.content_valuation() != 0:
            raise NotNormalized("reduce_mod_pi needs content valuation 0")
        K = self.field
        return [K.residue(c) for c in self.coeffs]

    def substitute(self, shift, scale):
        """phi(scale * x + shift)."""
        K = self.field
        shift, scale = K(shift), K(scale)
        acc = [K.zero]
        for c in reversed(self.coeffs):
            nxt = [a * shift for a in acc] + [K.zero]
            for i, a in enumerate(acc):
                nxt[i + 1] = nxt[i + 1] + a * scale
            nxt[0] = nxt[0] + c
            acc = nxt
        return PolyOverK(K, acc[:len(self.coeffs)])

    def __eq__(self, other):
        if not isinstance(other, PolyOverK):
            return NotImplemented
        n = max(len(self), len(other))
        a = self.coeffs + [self.field.zero] * (n - len(self))
        b = other.coeffs + [self.field.zero] * (n - len(other))
        return all(x == y for x, y in zip(a, b))

    __hash__ = None

    def __repr__(self):
        return f"PolyOverK({self.coeffs!r})"


class ReducedPoly:
    """Reduction of a bivariate polynomial: rows[i][j] is the residue of a_{i,j}."""

    __slots__ = ("rows", "k")

    def __init__(self, k, rows):
        self.k = k
        self.rows = rows

    @property
    def deg_t(self):
        d = -1
        for row in self.rows:
            d = max(d, kpoly_degree(row))
        return d

    @property
    def deg_x(self):
        for i in range(len(self.rows) - 1, -1, -1):
            if any(not c.is_zero() for c in self.rows[i]):
                return i
        return -1

    def x_poly(self):
        """The polynomial in x when no t appears."""
        if self.deg_t > 0:
            raise InvalidInput("reduction still depends on t")
        return [row[0] if row else self.k.zero for row in self.rows]

    def __repr__(self):
        return f"ReducedPoly({self.rows!r})"


class BivariatePoly:
    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        self.field = field
        self.rows = [_as_elements(field, r) if r else [field.zero] for r in rows]

    @property
    def deg_x(self):
        for i in range(len(self.rows) - 1, -1, -1):
            if any(not c.is_zero() for c in self.rows[i]):
                return i
        return -1

    @property
    def deg_t(self):
        d = -1
        for row in self.rows:
            for j in range(len(row) - 1, -1, -1):
                if not row[j].is_zero():
                    d = max(d, j)
                    break
        return d

    def elements(self):
        return [c for row in self.rows for c in row]

    def content_valuation(self):
        return _content(self.elements())

    def normalize(self):
        v = self.content_valuation()
        if v == 0:
            return self
        K = self.field
        return BivariatePoly(K, [[divide_content(K, c, v) for c in row] for row in self.rows])

    def reduce(self):
        if self.content_valuation() != 0:
            raise NotNormalized("reduce_mod_pi needs content valuation 0")
        K = self.field
        return ReducedPoly(K.residue_field, [[K.residue(c) for c in row] for row in self.rows])

    def substitute_x(self, shift, scale):
        """phi(scale * x + shift, t)."""
        K = self.field
        shift, scale = K(shift), K(scale)
        acc = []
        for row in reversed(self.rows):
            nxt = [[a * shift for a in r] for r in acc] + [[]]
            for i, r in enumerate(acc):
                nxt[i + 1] = _tadd(nxt[i + 1], [a * scale for a in r])
            nxt[0] = _tadd(nxt[0], row)
            acc = nxt
        return BivariatePoly(K, acc)

    def substitute_t(self, digit, pi_F):
        """phi(x, digit + pi_F * t)."""
        K = self.field
        digit, pi_F = K(digit), K(pi_F)
        return BivariatePoly(K, [_tcompose(K, row, digit, pi_F) for row in self.rows])

    def eval_t(self, value):
        K = self.field
        value = K(value)
        out = []
        for row in self.rows:
            acc = K.zero
            for c in reversed(row):
                acc = acc * value + c
            out.append(acc)
        return PolyOverK(K, out)

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        K = self.field
        n = max(len(self.rows), len(other.rows))
        for i in range(n):
            a = self.rows[i] if i < len(self.rows) else []
            b = other.rows[i] if i < len(other.rows) else []
            m = max(len(a), len(b))
            a = a + [K.zero] * (m - len(a))
            b = b + [K.zero] * (m - len(b))
            if not all(x == y for x, y in zip(a, b)):
                return False
        return True

    __hash__ = None

    def __repr__(self):
        return f"BivariatePoly({self.rows!r})"


def _tadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for j, c in enumerate(b):
        out[j] = out[j] + c
    return out


def _tcompose(K, row, digit, scale):
    # Horner in t with the linear polynomial digit + scale*t
    acc = []
    for c in reversed(row):
        nxt = [a * digit for a in acc] + [K.zero]
        for j, a in enumerate(acc):
            nxt[j + 1] = nxt[j + 1] + a * scale
        if nxt:
            nxt[0] = nxt[0] + c
        else:
            nxt = [c]
        acc = nxt
    return acc[:len(row)] if acc else [K.zero]


# functional spellings


def content_valuation(phi):
    return phi.content_valuation()


def normalize(phi):
    return phi.normalize()


def reduce_mod_pi(phi):
    return phi.reduce()


def substitute_x(phi, shift, scale):
    if isinstance(phi, PolyOverK):
        return phi.substitute(shift, scale)
    return phi.substitute_x(shift, scale)


def substitute_t(phi, digit, pi_F):
    return phi.substitute_t(digit, pi_F)


__all__ = ["PolyOverK", "BivariatePoly", "ReducedPoly", "content_valuation", "normalize",
           "reduce_mod_pi", "substitute_x", "substitute_t", "divide_content"]
