"""Integer and rational helpers: valuations, determinants, polynomial arithmetic.

Polynomials are lists of coefficients, constant term first.
"""

from fractions import Fraction
from math import gcd


def is_prime(n):
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def vp(n, p):
    """Valuation of a nonzero integer (or Fraction) at p."""
    if isinstance(n, Fraction):
        return vp(n.numerator, p) - vp(n.denominator, p)
    if n == 0:
        raise ValueError("valuation of zero")
    if p == 2:
        n = abs(n)
        return (n & -n).bit_length() - 1
    v = 0
    if n % p:
        return 0
    # strip in growing chunks first, then singly
    pk, k = p, 1
    while n % pk == 0:
        n //= pk
        v += k
        pk, k = pk * pk, k * 2
    while n % p == 0:
        n //= p
        v += 1
    return v


def sym_mod(a, m):
    """Representative of a mod m in (-m/2, m/2]."""
    r = a % m
    return r - m if 2 * r > m else r


def bareiss_det(rows):
    """Exact determinant of a square integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        mkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * mkk - mik * row_k[j]) // prev
        prev = mkk
    return sign * m[n - 1][n - 1]


def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def reduce_monic(c, g):
    """Remainder of c modulo the monic polynomial g (in place on a copy)."""
    n = len(g) - 1
    c = list(c)
    for k in range(len(c) - 1, n - 1, -1):
        top = c[k]
        if top:
            base = k - n
            for j in range(n):
                gj = g[j]
                if gj:
                    c[base + j] -= top * gj
        c[k] = 0
    del c[n:]
    c.extend([0] * (n - len(c)))
    return c


def mulmod(a, b, g):
    return reduce_monic(poly_mul(a, b), g)


def frac_poly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = poly_trim(Fraction(x) for x in b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    a = poly_trim(a)
    lead = b[-1]
    while len(a) >= len(b):
        coef = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = coef
        for i, y in enumerate(b):
            a[shift + i] -= coef * y
        a = poly_trim(a)
    return q, a


def frac_poly_inverse_mod(a, g):
    """Inverse of a modulo g over Q, or None when gcd(a, g) is nontrivial."""
    r0, r1 = poly_trim(Fraction(x) for x in g), poly_trim(Fraction(x) for x in a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = frac_poly_divmod(r0, r1)
        qs = poly_mul(q, s1)
        s2 = [Fraction(0)] * max(len(s0), len(qs))
        for i, x in enumerate(s0):
            s2[i] += x
        for i, x in enumerate(qs):
            s2[i] -= x
        r0, r1 = r1, r
        s0, s1 = s1, poly_trim(s2)
    if len(r0) != 1:
        return None
    inv = [x / r0[0] for x in s0]
    n = len(g) - 1
    _, rem = frac_poly_divmod(inv, g)
    rem = list(rem) + [Fraction(0)] * (n - len(rem))
    return rem[:n]


def frac_matrix_inverse(m):
    """Gauss-Jordan inverse over Q; returns None for a singular matrix."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def lcm_of_denominators(values):
    d = 1
    for x in values:
        den = Fraction(x).denominator
        d = d * den // gcd(d, den)
    return d
