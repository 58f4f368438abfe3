"""Finite extensions K = Q_p[a]/(g) with valuation, residue map and lifts.

Elements are stored as coordinate vectors over the power basis 1, a, ...,
a^(n-1) of the root a of the defining polynomial g:

    x = p**shift * sum(coeffs[i] * a**i)

with integer ``coeffs`` and an absolute precision ``prec`` measured in
powers of the uniformizer: x is known modulo pi^prec O_K.  Coordinates are
reduced modulo p^(ceil(prec/e) - shift), which is harmless because
p^r Z_p[a] lies inside pi^(e r) O_K.

Valuations are read off an integral basis {theta^j pi^i} of O_K, where
theta is a Hensel-lifted root of the residue-field modulus and pi is a
uniformizer.  The norm-based valuation v_p(N(x))/f is kept as an
independent route (``norm_valuation``) and drives the construction itself,
before the integral basis exists.
"""

from collections import deque
from fractions import Fraction
from math import gcd

from ._arith import (bareiss_det, frac_matrix_inverse, frac_poly_inverse_mod,
                     lcm_of_denominators, mulmod, poly_trim, reduce_monic,
                     sym_mod, vp)
from .errors import (InvalidInput, NotIntegral, PrecisionExhausted,
                     RamificationMismatch, RamificationUndetermined,
                     UniformizerNotFound, ZeroDivisorDetected)
from .padic import DEFAULT_PRECISION, AtLeast, PadicNumber, check_prime
from .residue import ResidueElement, ResidueField, gfp_is_irreducible, monic_polys

MAX_STRUCTURE_STEPS = 64


def _ceil_div(a, b):
    return -(-a // b)


# ---------------------------------------------------------------------------
# Newton polygon of the defining polynomial


def newton_polygon(coeffs, p):
    """Vertices of the lower convex hull of (i, v_p(c_i))."""
    pts = [(i, vp(c, p)) for i, c in enumerate(coeffs) if c != 0]
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it is not strictly below the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def residual_data(coeffs, p):
    """(e0, residual polynomial) of a one-sided Newton polygon, or None if it has several sides."""
    hull = newton_polygon(coeffs, p)
    n = len(coeffs) - 1
    if hull[0][0] != 0 or len(hull) != 2 and not (len(hull) == 1 and n == 0):
        return None
    v0 = hull[0][1]
    g = gcd(v0, n)
    h, e0 = v0 // g, n // g
    residual = []
    for j in range(n // e0 + 1):
        c = coeffs[j * e0]
        expected = v0 - j * h
        if c != 0 and vp(c, p) == expected:
            residual.append((c // p ** expected) % p)
        else:
            residual.append(0)
    return e0, residual


# ---------------------------------------------------------------------------
# exact arithmetic in Q[a]/(g), used while the structure is being found


class _ExactRing:
    def __init__(self, g, p, f):
        self.g = [Fraction(c) for c in g]
        self.ig = list(g)
        self.p = p
        self.f = f
        self.n = len(g) - 1

    def const(self, c):
        return [Fraction(c)] + [Fraction(0)] * (self.n - 1)

    def gen(self):
        if self.n == 1:
            return [Fraction(-self.ig[0])]
        return [Fraction(0), Fraction(1)] + [Fraction(0)] * (self.n - 2)

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def sub(self, a, b):
        return [x - y for x, y in zip(a, b)]

    def mul(self, a, b):
        return mulmod(a, b, self.g)

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        out = self.const(1)
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def inv(self, a):
        r = frac_poly_inverse_mod(a, self.g)
        if r is None:
            raise ZeroDivisorDetected("non-invertible element: defining polynomial is reducible")
        return r

    def eval_poly(self, poly, z):
        acc = self.const(0)
        for c in reversed(poly):
            acc = self.add(self.mul(acc, z), self.const(c))
        return acc

    def norm_vp(self, a):
        d = lcm_of_denominators(a)
        c = [int(x * d) for x in a]
        det = _norm_int(c, self.ig)
        if det == 0:
            raise ZeroDivisorDetected("element with zero norm: defining polynomial is reducible")
        return vp(det, self.p) - self.n * vp(d, self.p)

    def val(self, a):
        v = self.norm_vp(a)
        if v % self.f:
            raise RamificationMismatch(
                f"norm valuation {v} is not divisible by f = {self.f}")
        return v // self.f


def _norm_int(c, g):
    """Norm of the integer-coordinate element c: determinant of multiplication by c."""
    n = len(g) - 1
    cols = []
    col = list(c)
    for _ in range(n):
        cols.append(col)
        col = reduce_monic([0] + col, g)
    return bareiss_det(cols)


def _positive(ring, a):
    return not any(a) or ring.val(a) > 0


def _sylvester_disc_vp(g, p):
    n = len(g) - 1
    if n == 1:
        return 0
    dg = [i * g[i] for i in range(1, n + 1)]
    a, b = list(reversed(g)), list(reversed(dg))
    size = 2 * n - 1
    rows = []
    for i in range(n - 1):
        rows.append([0] * i + a + [0] * (size - len(a) - i))
    for i in range(n):
        rows.append([0] * i + b + [0] * (size - len(b) - i))
    det = bareiss_det(rows)
    if det == 0:
        raise ZeroDivisorDetected("defining polynomial is not squarefree")
    return vp(det, p)


def _express(target, vals):
    """Integer coefficients c with sum(c_i * vals_i) == target (vals have gcd dividing target)."""
    coeffs = [0] * len(vals)
    g, combo = 0, []
    for i, v in enumerate(vals):
        # extended gcd of running g with v
        if g == 0:
            g, combo = v, [0] * len(vals)
            combo[i] = 1
            continue
        old_r, r = g, v
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        combo = [old_s * x for x in combo]
        combo[i] += old_t
        g = old_r
    if target % g:
        raise ValueError("target not in the span")
    k = target // g
    for i in range(len(vals)):
        coeffs[i] = combo[i] * k
    return coeffs


# ---------------------------------------------------------------------------
# raw p-adic vectors: (coeffs, shift) truncated at an absolute power of p


def _raw_normalise(p, c, s, R):
    m = R - s
    if m <= 0:
        return None
    mod = p ** m
    c = [x % mod for x in c]
    nz = [x for x in c if x]
    if not nz:
        return None
    v = min(vp(x, p) for x in nz)
    if v:
        pv = p ** v
        c = [x // pv for x in c]
    return c, s + v


def _raw_from_fracs(p, fr, R):
    nz = [x for x in fr if x != 0]
    if not nz:
        return None
    s = min(vp(x, p) for x in nz)
    m = R - s
    if m <= 0:
        return None
    mod = p ** m
    c = []
    for x in fr:
        if x == 0:
            c.append(0)
            continue
        x = Fraction(x) / Fraction(p) ** s
        c.append(x.numerator * pow(x.denominator, -1, mod) % mod)
    return _raw_normalise(p, c, s, R)


class _RawRing:
    def __init__(self, g, p, R):
        self.g, self.p, self.R = list(g), p, R
        self.n = len(g) - 1

    def mul(self, a, b):
        if a is None or b is None:
            return None
        return _raw_normalise(self.p, mulmod(a[0], b[0], self.g), a[1] + b[1], self.R)

    def add(self, a, b, sign=1):
        if a is None:
            if b is None:
                return None
            return _raw_normalise(self.p, [sign * x for x in b[0]], b[1], self.R)
        if b is None:
            return a
        s = min(a[1], b[1])
        pa, pb = self.p ** (a[1] - s), self.p ** (b[1] - s)
        return _raw_normalise(self.p, [x * pa + sign * y * pb for x, y in zip(a[0], b[0])], s, self.R)

    def const(self, c):
        return _raw_from_fracs(self.p, [Fraction(c)] + [0] * (self.n - 1), self.R)

    def eval_poly(self, poly, z):
        acc = None
        for c in reversed(poly):
            acc = self.add(self.mul(acc, z), self.const(c))
        return acc

    def to_fracs(self, a):
        if a is None:
            return [Fraction(0)] * self.n
        scale = Fraction(self.p) ** a[1]
        return [Fraction(x) * scale for x in a[0]]


# ---------------------------------------------------------------------------


class FieldElement:
    __slots__ = ("field", "coeffs", "shift", "prec", "_val")

    def __init__(self, field, coeffs, shift, prec):
        # Callers go through LocalField._make which reduces and normalises.
        self.field = field
        self.coeffs = coeffs
        self.shift = shift
        self.prec = prec
        self._val = None

    # -- predicates -------------------------------------------------------
    def is_zero(self):
        """True when the element is zero to its precision."""
        return isinstance(self.valuation(), AtLeast)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def valuation(self):
        if self._val is None:
            self._val = self.field._valuation(self)
        return self._val

    def _vlow(self):
        v = self.valuation()
        return v.bound if isinstance(v, AtLeast) else v

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise InvalidInput("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other, sign=1):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = self.field
        B = min(self.prec, other.prec)
        s = min(self.shift, other.shift)
        p = K.p
        pa, pb = p ** (self.shift - s), p ** (other.shift - s)
        c = [x * pa + sign * y * pb for x, y in zip(self.coeffs, other.coeffs)]
        return K._make(c, s, B)

    __radd__ = __add__

    def __sub__(self, other):
        return self.__add__(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self.field._make([-x for x in self.coeffs], self.shift, self.prec)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = self.field
        va, vb = self._vlow(), other._vlow()
        B = min(self.prec + vb, other.prec + va)
        if isinstance(self._val, AtLeast) or isinstance(other._val, AtLeast):
            return K._zero(min(B, va + vb))
        return K._make(mulmod(self.coeffs, other.coeffs, K._g), self.shift + other.shift, B)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def inverse(self):
        return self.field._inverse(self)

    def mul_p_pow(self, k):
        """Exact multiplication by p^k."""
        if k == 0:
            return self
        K = self.field
        if not any(self.coeffs):
            return K._zero(self.prec + K.e * k)
        return K._make(list(self.coeffs), self.shift + k, self.prec + K.e * k)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except InvalidInput:
            return False
        if other is NotImplemented:
            return False
        return (self - other).is_zero()

    __hash__ = None

    # -- views ------------------------------------------------------------
    def coordinates(self):
        """Power-basis coordinates as PadicNumbers."""
        K = self.field
        absprec = _ceil_div(self.prec, K.e)
        out = []
        for c in self.coeffs:
            out.append(PadicNumber._normalised(K.p, c * K.p ** max(self.shift, 0), absprec)
                       if self.shift >= 0 else
                       _shifted(K.p, c, self.shift, absprec))
        return out

    def to_fractions(self):
        """Rational coordinates using symmetric residues (exact for small rationals)."""
        K = self.field
        m = _ceil_div(self.prec, K.e) - self.shift
        if m <= 0:
            return [Fraction(0)] * K.n
        mod = K.p ** m
        scale = Fraction(K.p) ** self.shift
        return [sym_mod(c, mod) * scale for c in self.coeffs]

    def to_rational(self):
        fr = self.to_fractions()
        if any(fr[1:]):
            raise ValueError("element is not in Q_p")
        return fr[0]

    def residue(self):
        return self.field.residue(self)

    def __repr__(self):
        fr = self.to_fractions()
        terms = []
        for i, c in enumerate(fr):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*a^{i}" if i > 1 else f"{c}*a")
        body = " + ".join(terms) if terms else "0"
        return f"({body} + O(pi^{self.prec}))"


def _shifted(p, c, shift, absprec):
    if c == 0:
        return PadicNumber.zero(p, absprec)
    v = vp(c, p) + shift
    rel = absprec - v
    if rel <= 0:
        return PadicNumber.zero(p, absprec)
    u = c // p ** vp(c, p)
    return PadicNumber(p, u % p ** rel, v, rel)


class LocalField:
    """K = Q_p[a]/(g) for a monic integer polynomial g, irreducible over Q_p.

    ``prec`` is the working precision in base-p digits; elements built from
    exact data are known modulo pi^(e*prec).
    """

    def __init__(self, p, defining_poly, prec=DEFAULT_PRECISION,
                 residue_modulus=None, e_f_hint=None):
        check_prime(p)
        g = [int(c) for c in defining_poly]
        g = poly_trim(g)
        if len(g) < 2:
            raise InvalidInput("defining polynomial must have degree >= 1")
        if g[-1] != 1:
            raise InvalidInput("defining polynomial must be monic")
        if prec < 1:
            raise InvalidInput("precision must be positive")
        self.p = p
        self.poly = tuple(g)
        self._g = g
        self.n = len(g) - 1
        self.prec = prec
        self.e, self.f = self._ramification(e_f_hint)
        self.cap = self.e * prec
        self.residue_field = ResidueField(p, self.f, residue_modulus)
        self._pi_pows = {}
        self._build()

    # -- construction -----------------------------------------------------
    def _ramification(self, hint):
        p, n = self.p, self.n
        if n == 1:
            if hint is not None and tuple(hint) != (1, 1):
                raise RamificationMismatch("degree-1 field has e = f = 1")
            return 1, 1
        data = residual_data(self._g, p)
        if data is None:
            raise ZeroDivisorDetected("Newton polygon has several sides: defining polynomial is reducible")
        e0, residual = data
        regular = gfp_is_irreducible(residual, p)
        if regular:
            e, f = e0, n // e0
            if hint is not None and tuple(hint) != (e, f):
                raise RamificationMismatch(f"hint {tuple(hint)} but Newton data gives {(e, f)}")
            return e, f
        if hint is None:
            raise RamificationUndetermined(
                "residual polynomial is not irreducible; supply e_f_hint")
        e, f = (int(x) for x in hint)
        if e * f != n or e % e0:
            raise RamificationMismatch(f"hint {(e, f)} incompatible with degree {n} and slope denominator {e0}")
        return e, f

    def _build(self):
        p, n, e, f = self.p, self.n, self.e, self.f
        ring = _ExactRing(self._g, p, f)
        k = self.residue_field
        if n == 1:
            pi_exact = ring.const(p)
            theta_exact = ring.const(-k.modulus[0])
            index_bound = 0
        else:
            index_bound = _sylvester_disc_vp(self._g, p) // 2
            pi_exact, gen = self._find_structure(ring)
            theta_exact = None if f == 1 else gen
            if f == 1:
                theta_exact = ring.const(-k.modulus[0])
        self._pi_exact = pi_exact
        pi_inv_exact = ring.inv(pi_exact)
        # raw precision: enough to cover denominators of integral elements
        guard = index_bound + 4
        self._RM = self.prec + guard
        R = self._RM + 2 * guard + 8
        raw = _RawRing(self._g, p, R)
        if f == 1:
            theta = _raw_from_fracs(p, theta_exact, R)
        else:
            theta = self._hensel_theta(ring, raw, theta_exact)
        pi_raw = _raw_from_fracs(p, pi_exact, R)
        # integral basis theta^j pi^i, index i*f + j
        theta_pows = [raw.const(1)]
        for _ in range(1, f):  # f > 1 implies theta is a unit
            theta_pows.append(raw.mul(theta_pows[-1], theta))
        cols = []
        pi_pow = raw.const(1)
        for i in range(e):
            for j in range(f):
                cols.append(raw.to_fracs(raw.mul(pi_pow, theta_pows[j])))
            pi_pow = raw.mul(pi_pow, pi_raw)
        matrix = [[cols[c][r] for c in range(n)] for r in range(n)]
        inv = frac_matrix_inverse(matrix)
        if inv is None:
            raise ZeroDivisorDetected("integral basis matrix is singular")
        mod = p ** self._RM
        Minv = []
        for row in inv:
            out = []
            for x in row:
                if x.denominator % p == 0:
                    # pi and theta generate less than O_K: (e, f) is wrong or g is reducible
                    raise RamificationMismatch("candidate basis does not span the valuation ring")
                out.append(x.numerator * pow(x.denominator, -1, mod) % mod)
            Minv.append(out)
        self._Minv = Minv
        self._modM = mod
        self.uniformizer = self._from_fracs(pi_exact, self.cap)
        self._pi_inv = self._from_fracs(pi_inv_exact, self.cap)
        theta_el = self._zero(self.cap) if theta is None else self._make(list(theta[0]), theta[1], self.cap)
        self.inertial_gen = theta_el
        self._theta_pows = [self.one]
        for _ in range(1, f):
            self._theta_pows.append(self._theta_pows[-1] * theta_el)
        self._check_structure()

    def _find_structure(self, ring):
        """Search for a uniformizer and for a unit whose residue generates k.

        Returns (pi, gamma-based start for theta) as exact elements.
        """
        p, e, f = self.p, self.e, self.f
        found = [(ring.const(p), e)]
        G = e
        generator = None
        queue = deque([ring.gen()])
        steps = 0
        while queue and not (G == 1 and (generator is not None or f == 1)):
            steps += 1
            if steps > MAX_STRUCTURE_STEPS:
                break
            z = queue.popleft()
            v = ring.val(z)
            if v < 0:
                z, v = ring.inv(z), -v
            if v > 0:
                prev_vals = [val for _, val in found]
                G_prev = G
                if gcd(G, v) < G:
                    found.append((z, v))
                    G = gcd(G, v)
                a = G_prev // gcd(G_prev, v)
                coeffs = _express(a * v, prev_vals)
                unit = ring.pow(z, a)
                for (elt, _), c in zip(found[:len(prev_vals)], coeffs):
                    if c:
                        unit = ring.mul(unit, ring.pow(elt, -c))
                queue.append(unit)
                continue
            # z is a unit: locate its residue
            c = next((c for c in range(p) if ring.val(ring.sub(z, ring.const(c))) > 0), None)
            if c is not None:
                queue.append(ring.sub(z, ring.const(c)))
                continue
            for d in range(2, f + 1):
                if f % d:
                    continue
                psi = next((q for q in monic_polys(p, d)
                            if gfp_is_irreducible(q, p) and _positive(ring, ring.eval_poly(q, z))),
                           None)
                if psi is not None:
                    if d == f and generator is None:
                        generator = (z, psi)
                    w = ring.eval_poly(psi, z)
                    if any(w):
                        queue.append(w)
                    break
        if G != 1 or (f > 1 and generator is None):
            raise UniformizerNotFound(
                f"structure search stalled (gcd of valuations {G}, generator "
                f"{'found' if generator else 'missing'})")
        vals = [val for _, val in found]
        unit_elt = next((elt for elt, val in found if val == 1), None)
        if unit_elt is not None:
            pi = unit_elt
        else:
            coeffs = _express(1, vals)
            pi = ring.const(1)
            for (elt, _), c in zip(found, coeffs):
                if c:
                    pi = ring.mul(pi, ring.pow(elt, c))
        if ring.val(pi) != 1:
            raise UniformizerNotFound("assembled uniformizer has the wrong valuation")
        if f == 1:
            return pi, None
        gamma, psi = generator
        # express a root of the residue modulus as a polynomial in gamma-bar
        kpsi = ResidueField(p, f, psi)
        modulus = self.residue_field.modulus
        root = None
        for cand in kpsi.enumerate():
            acc = kpsi.zero
            for coef in reversed(modulus):
                acc = acc * cand + coef
            if acc.is_zero():
                root = cand
                break
        y0 = ring.const(0)
        gpow = ring.const(1)
        for c in root.coeffs:
            if c:
                y0 = ring.add(y0, ring.mul(ring.const(c), gpow))
            gpow = ring.mul(gpow, gamma)
        return pi, y0

    def _hensel_theta(self, ring, raw, y0):
        """Newton iteration for a root of the lifted residue modulus starting at y0."""
        H = list(self.residue_field.modulus)
        dH = [i * H[i] for i in range(1, len(H))]
        z = _raw_from_fracs(self.p, ring.inv(ring.eval_poly(dH, y0)), raw.R)
        y = _raw_from_fracs(self.p, y0, raw.R)
        iters = (self.e * raw.R).bit_length() + 2
        two = raw.const(2)
        for _ in range(iters):
            y = raw.add(y, raw.mul(raw.eval_poly(H, y), z), -1)
            z = raw.mul(z, raw.add(two, raw.mul(raw.eval_poly(dH, y), z), -1))
        residual = raw.eval_poly(H, y)
        if residual is not None:
            c, s = residual
            det = _norm_int(c, self._g)
            if det and vp(det, self.p) + self.n * s < self.f * self.e * self._RM:
                raise PrecisionExhausted("Hensel lift of the inertial generator did not converge")
        return y

    def _check_structure(self):
        if self.uniformizer.valuation() != 1:
            raise UniformizerNotFound("uniformizer does not have valuation 1")
        if self.norm_valuation(self.uniformizer) != 1:
            raise RamificationMismatch("integral-basis and norm valuations disagree on pi")
        if self.valuation(self(self.p)) != self.e:
            raise RamificationMismatch("v(p) != e")
        gen = self.element([0, 1] + [0] * (self.n - 2)) if self.n > 1 else self(-self.poly[0])
        if self.valuation(gen) != self.norm_valuation(gen):
            raise RamificationMismatch("integral-basis and norm valuations disagree on the generator")
        if self.f > 1:
            r = self.residue(self.inertial_gen)
            if r != self.residue_field.gen:
                raise PrecisionExhausted("inertial generator does not reduce to the residue generator")

    # -- element construction ----------------------------------------------
    def _zero(self, prec):
        el = FieldElement(self, (0,) * self.n, 0, prec)
        el._val = AtLeast(prec)
        return el

    def _make(self, coeffs, shift, prec):
        prec = min(prec, self.cap)
        m = _ceil_div(prec, self.e) - shift
        if m <= 0:
            return self._zero(prec)
        p = self.p
        mod = p ** m
        c = [x % mod for x in coeffs]
        nz = [x for x in c if x]
        if not nz:
            return self._zero(prec)
        v = min(vp(x, p) for x in nz)
        if v:
            pv = p ** v
            c = [x // pv for x in c]
        return FieldElement(self, tuple(c), shift + v, prec)

    def _from_fracs(self, fracs, prec):
        p = self.p
        nz = [Fraction(x) for x in fracs if x != 0]
        if not nz:
            return self._zero(prec)
        s = min(vp(x, p) for x in nz)
        m = _ceil_div(min(prec, self.cap), self.e) - s
        if m <= 0:
            return self._zero(prec)
        mod = p ** m
        c = []
        for x in fracs:
            x = Fraction(x)
            if x == 0:
                c.append(0)
                continue
            x /= Fraction(p) ** s
            c.append(x.numerator * pow(x.denominator, -1, mod) % mod)
        return self._make(c, s, prec)

    def __call__(self, value, prec=None):
        prec = self.cap if prec is None else prec
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise InvalidInput("element of another field")
            return value
        if isinstance(value, PadicNumber):
            if value.p != self.p:
                raise InvalidInput("p-adic number for another prime")
            if value.is_zero:
                return self._zero(min(prec, self.e * value.prec))
            return self._make([value.unit] + [0] * (self.n - 1), value.val,
                              min(prec, self.e * value.absprec))
        if isinstance(value, (int, Fraction)):
            return self._from_fracs([value] + [0] * (self.n - 1), prec)
        return self.element(value, prec)

    def element(self, coords, prec=None):
        """Element with the given rational power-basis coordinates."""
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.n:
            coords = reduce_monic(coords, [Fraction(c) for c in self._g])
        coords = coords + [Fraction(0)] * (self.n - len(coords))
        return self._from_fracs(coords, self.cap if prec is None else prec)

    def from_padic_coords(self, coeffs, shift, p_absprec):
        """Element p^shift * sum(coeffs[i] a^i) known modulo p^p_absprec."""
        return self._make(list(coeffs) + [0] * (self.n - len(coeffs)), shift, self.e * p_absprec)

    def with_prec(self, x, prec):
        """Copy of x with precision lowered to ``prec``."""
        if prec >= x.prec:
            return x
        return self._make(list(x.coeffs), x.shift, prec)

    @property
    def zero(self):
        return self._zero(self.cap)

    @property
    def one(self):
        return self(1)

    @property
    def generator(self):
        """The root a of the defining polynomial."""
        if self.n == 1:
            return self(-self.poly[0])
        return self.element([0, 1])

    def pi_pow(self, k):
        """pi^k for any integer k (cached)."""
        if k not in self._pi_pows:
            if k == 0:
                val = self.one
            elif k > 0:
                val = self.pi_pow(k - 1) * self.uniformizer if k > 1 else self.uniformizer
            else:
                val = self.pi_pow(k + 1) * self._pi_inv if k < -1 else self._pi_inv
            self._pi_pows[k] = val
        return self._pi_pows[k]

    # -- valuations and residues -------------------------------------------
    def _valuation(self, x):
        c = x.coeffs
        if not any(c):
            return AtLeast(x.prec)
        p, e = self.p, self.e
        if not any(c[1:]):
            v = e * (x.shift + vp(c[0], p))
            return v if v < x.prec else AtLeast(x.prec)
        nzk = [(k, ck) for k, ck in enumerate(c) if ck]
        mod = self._modM
        best = None
        for idx, row in enumerate(self._Minv):
            w = sum(row[k] * ck for k, ck in nzk) % mod
            if w:
                val = e * (x.shift + vp(w, p)) + idx // self.f
                if best is None or val < best:
                    best = val
        bound = min(x.prec, e * (x.shift + self._RM))
        if best is None or best >= bound:
            return AtLeast(bound)
        return best

    def valuation(self, x):
        """nu_K(x), normalised so that nu_K(pi) = 1; AtLeast(prec) for zero-to-precision."""
        return self(x).valuation()

    nu = valuation

    def norm_valuation(self, x):
        """v_p(N_{K/Q_p}(x)) / f, from the determinant of multiplication by x."""
        x = self(x)
        if not any(x.coeffs):
            return AtLeast(x.prec)
        det = _norm_int(list(x.coeffs), self._g)
        if det == 0:
            return AtLeast(x.prec)
        total = vp(det, self.p) + self.n * x.shift
        if total % self.f:
            if total // self.f >= x.prec:
                return AtLeast(x.prec)
            raise RamificationMismatch("norm valuation not divisible by f")
        v = total // self.f
        return v if v < x.prec else AtLeast(x.prec)

    def integral_coordinates(self, x):
        """Coordinates of x in the integral basis theta^j pi^i (index i*f + j), as PadicNumbers."""
        x = self(x)
        absprec = _ceil_div(x.prec, self.e)
        out = []
        for row in self._Minv:
            w = sum(r * c for r, c in zip(row, x.coeffs)) % self._modM
            out.append(_shifted(self.p, w, x.shift, min(absprec, x.shift + self._RM)))
        return out

    def residue(self, x):
        """Image of an integral x in the residue field k."""
        x = self(x)
        v = x.valuation()
        k = self.residue_field
        if isinstance(v, AtLeast):
            if v.bound >= 1:
                return k.zero
            raise PrecisionExhausted("residue of an element with no significant digits")
        if v < 0:
            raise NotIntegral(f"element has valuation {v}")
        if v >= 1:
            return k.zero
        p, s = self.p, x.shift
        out = []
        for j in range(self.f):
            w = sum(r * c for r, c in zip(self._Minv[j], x.coeffs)) % self._modM
            if s >= 0:
                out.append(w * p ** s % p)
            else:
                out.append((w // p ** (-s)) % p)
        return ResidueElement(k, tuple(out))

    def lift(self, c):
        """Canonical lift: integer representatives evaluated at the inertial generator."""
        c = self.residue_field(c)
        acc = self.zero
        for cj, tj in zip(c.coeffs, self._theta_pows):
            if cj:
                acc = acc + tj * cj
        return acc

    def _inverse(self, x):
        v = x.valuation()
        if isinstance(v, AtLeast):
            raise PrecisionExhausted("inverse of an element that is zero to precision")
        u = x * self.pi_pow(-v)
        target = u.prec
        y = self.lift(self.residue(u).inverse())
        while True:
            err = self.one - u * y
            ev = err.valuation()
            if isinstance(ev, AtLeast) or ev >= target:
                break
            y = y + y * err
        y = self.with_prec(y, target)
        return y * self.pi_pow(-v)

    def __repr__(self):
        return (f"LocalField(p={self.p}, poly={list(self.poly)}, e={self.e}, f={self.f}, "
                f"prec={self.prec})")


def construct(p, defining_poly, prec=DEFAULT_PRECISION, residue_modulus=None, e_f_hint=None):
    return LocalField(p, defining_poly, prec, residue_modulus, e_f_hint)
