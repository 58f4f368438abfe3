"""Counting and approximating the roots of a squarefree polynomial in K.

``count_roots`` follows the digit-by-digit refinement phi_{i+1}(x) =
phi_i^#(pi x + b): a branch whose reduction is linear isolates exactly one
root, a constant reduction or one without roots in k is dead, and several
residue roots split the branch.  Roots of negative valuation are found as
roots of the reversed polynomial.

``oracle_count`` is a deliberately separate brute-force method (class
enumeration plus Hensel certification) used to cross-check the main one.
"""

from collections import deque
from dataclasses import dataclass, field

from ._arith import bareiss_det, lcm_of_denominators, vp
from .errors import (DepthExceeded, EmbeddingFailed, Inconclusive, InvalidInput,
                     NoRootInField, NotSquarefree, PrecisionExhausted)
from .field import FieldElement
from .padic import AtLeast
from .poly import PolyOverK
from .residue import kpoly_degree, roots_in_k


@dataclass
class RootApproximation:
    digits: list
    value: FieldElement
    residual: object  # valuation of phi(value), an int or AtLeast
    inverted: bool = False  # value is 1/(pi z) for the digits of z


@dataclass
class RootReport:
    count: int
    approximations: list = field(default_factory=list)


def _poly(phi, K):
    if isinstance(phi, PolyOverK):
        return phi
    if K is None:
        raise InvalidInput("a LocalField is required for a plain coefficient list")
    return PolyOverK(K, list(phi))


def _trimmed(phi):
    d = phi.degree()
    if d < 0:
        raise InvalidInput("zero polynomial")
    return PolyOverK(phi.field, phi.coeffs[:d + 1])


def _vlow(v):
    return v.bound if isinstance(v, AtLeast) else v


# -- discriminant ------------------------------------------------------------


def _sylvester(a, b):
    # a, b constant-first; rows use descending powers
    n, m = len(a) - 1, len(b) - 1
    size = n + m
    ra, rb = list(reversed(a)), list(reversed(b))
    rows = []
    for i in range(m):
        rows.append([0] * i + ra + [0] * (size - len(ra) - i))
    for i in range(n):
        rows.append([0] * i + rb + [0] * (size - len(rb) - i))
    return rows


def _det_valuation(K, rows):
    """nu_K of a determinant with FieldElement entries (elimination on the smallest valuation)."""
    m = [[K(x) for x in r] for r in rows]
    n = len(m)
    total = 0
    for col in range(n):
        best, best_v = None, None
        for r in range(col, n):
            v = m[r][col].valuation()
            if isinstance(v, AtLeast):
                continue
            if best_v is None or v < best_v:
                best, best_v = r, v
        if best is None:
            raise NotSquarefree("discriminant vanishes to working precision")
        m[col], m[best] = m[best], m[col]
        total += best_v
        inv = m[col][col].inverse()
        for r in range(col + 1, n):
            if m[r][col].is_zero():
                continue
            factor = m[r][col] * inv
            m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return total


def discriminant_valuation(phi, K=None):
    """nu_K of res(phi, phi'), which differs from nu_K(disc) by nu_K(lc)."""
    phi = _trimmed(_poly(phi, K))
    K = phi.field
    if len(phi) <= 2:
        return 0
    fr = []
    for c in phi.coeffs:
        try:
            fr.append(c.to_rational() if c.is_rational() and c.prec >= K.cap else None)
        except ValueError:
            fr.append(None)
    if all(x is not None for x in fr):
        den = lcm_of_denominators(fr)
        ints = [int(x * den) for x in fr]
        d = [i * c for i, c in enumerate(ints)][1:]
        det = bareiss_det(_sylvester(ints, d))
        if det == 0:
            raise NotSquarefree("polynomial has a repeated factor")
        # undo the scaling of both polynomials by den
        return K.e * (vp(det, K.p) - (2 * len(d) - 1) * vp(den, K.p))
    d = phi.derivative().coeffs
    return _det_valuation(K, _sylvester(phi.coeffs, d))


# -- the root-counting algorithm --------------------------------------------


def _integral_roots(phi, max_depth):
    """Branches for the roots in O_K; returns a list of (digits, delta)."""
    K = phi.field
    pi = K.uniformizer
    out = []
    frontier = deque([(phi.normalize(), [], K.zero, 0)])
    while frontier:
        cur, digits, delta, depth = frontier.popleft()
        if depth > max_depth:
            raise DepthExceeded(f"branch still alive at depth {depth}")
        red = cur.reduce()
        deg = kpoly_degree(red)
        if deg <= 0:
            continue
        if deg == 1:
            beta = -red[0] / red[1]
            out.append((digits + [beta], delta + K.lift(beta) * K.pi_pow(depth)))
            continue
        for beta in roots_in_k(red[:deg + 1]):
            lifted = K.lift(beta)
            child = cur.substitute(lifted, pi).normalize()
            frontier.append((child, digits + [beta], delta + lifted * K.pi_pow(depth), depth + 1))
    return out


def count_roots(phi, K=None, max_depth=None):
    """Number of roots of the squarefree polynomial phi in K, with approximations."""
    phi = _trimmed(_poly(phi, K))
    K = phi.field
    if len(phi) == 1:
        return RootReport(0, [])
    vres = discriminant_valuation(phi)
    if max_depth is None:
        max_depth = 2 * vres + 4
    approx = []
    for digits, delta in _integral_roots(phi, max_depth):
        approx.append(RootApproximation(digits, delta, phi(delta).valuation()))
    lc = phi.normalize().coeffs[-1]
    if _vlow(lc.valuation()) > 0:
        # a root x with nu(x) < 0 is 1/(pi z) for an integral root z of rev(phi)(pi z)
        rev = phi.reversed().substitute(0, K.uniformizer)
        for digits, z in _integral_roots(rev, max_depth):
            z = refine_root(rev, z, known_digits=len(digits))
            x = (z * K.uniformizer).inverse()
            approx.append(RootApproximation(digits, x, phi(x).valuation(), inverted=True))
    return RootReport(len(approx), approx)


def refine_root(phi, approximation, K=None, known_digits=None):
    """Root of phi in K close to ``approximation``, to the working precision.

    ``known_digits`` is the number of pi-adic digits of the approximation that
    already isolate the root; it is read from a RootApproximation when given one.
    """
    phi = _trimmed(_poly(phi, K))
    K = phi.field
    if isinstance(approximation, RootApproximation):
        if approximation.inverted:
            raise InvalidInput("refine the reversed polynomial for inverted roots")
        x = approximation.value
        depth = len(approximation.digits) if known_digits is None else known_digits
    else:
        x = K(approximation)
        depth = known_digits or 0
    dphi = phi.derivative()
    # walk digits until Newton's criterion holds, then Newton
    for _ in range(4 * K.cap):
        fx, dfx = phi(x).valuation(), dphi(x).valuation()
        if isinstance(fx, AtLeast):
            return x
        if not isinstance(dfx, AtLeast) and fx > 2 * dfx:
            break
        # one more digit from the polynomial centred at x
        red = phi.substitute(x, K.pi_pow(depth)).normalize().reduce()
        if kpoly_degree(red) != 1:
            raise NoRootInField("approximation does not isolate a root")
        beta = -red[0] / red[1]
        x = x + K.lift(beta) * K.pi_pow(depth)
        depth += 1
    else:
        raise PrecisionExhausted("refinement did not converge")
    for _ in range(K.cap.bit_length() + 4):
        fx = phi(x)
        if fx.is_zero():
            break
        x = x - fx / dphi(x)
    return x


def embed_subfield(K, F_poly):
    """All roots of F_poly in K, refined to working precision (an embedding per root)."""
    report = count_roots(PolyOverK(K, list(F_poly)))
    if report.count == 0:
        raise EmbeddingFailed("subfield polynomial has no root in K")
    phi = PolyOverK(K, list(F_poly))
    return [a.value if a.inverted else refine_root(phi, a) for a in report.approximations]


# -- independent oracle ------------------------------------------------------


def _taylor(coeffs, delta, K):
    """Coefficients of phi(delta + y) by repeated synthetic division."""
    c = list(coeffs)
    out = []
    while c:
        acc = K.zero
        quotient = []
        for a in reversed(c):
            acc = acc * delta + a
            quotient.append(acc)
        out.append(quotient[-1])
        c = list(reversed(quotient[:-1]))
    return out


def _oracle_integral(coeffs, K, modulus_depth):
    """Certified count of roots in O_K by class enumeration."""
    residues = K.residue_field.enumerate()
    lifts = [K.lift(r) for r in residues]
    count = 0
    pending = [(K.zero, 0)]  # (representative, m) meaning delta + pi^m O_K
    while pending:
        nxt = []
        for delta, m in pending:
            if m > 0:
                tc = _taylor(coeffs, delta, K)
                v0 = tc[0].valuation()
                vals = [t.valuation() for t in tc[1:]]
                v1 = vals[0] if vals else AtLeast(10 ** 9)
                if isinstance(v0, AtLeast) and not isinstance(v1, AtLeast) and v1 < m:
                    count += 1
                    continue
                if not isinstance(v1, AtLeast) and v1 < m <= _vlow(v0) - v1:
                    count += 1
                    continue
                if not isinstance(v0, AtLeast):
                    lower = min((_vlow(v) + m * (k + 1) for k, v in enumerate(vals)), default=10 ** 9)
                    if v0 < lower:
                        continue
            if m >= modulus_depth:
                raise Inconclusive(f"class of depth {m} is still undecided")
            step = K.pi_pow(m)
            for lift in lifts:
                nxt.append((delta + lift * step, m + 1))
        pending = nxt
    return count


def oracle_count(phi, K=None, modulus_depth=12):
    phi = _trimmed(_poly(phi, K))
    K = phi.field
    count = _oracle_integral(phi.coeffs, K, modulus_depth)
    rev = phi.reversed().coeffs
    # roots of negative valuation: rev(phi)(pi z) with z integral
    scaled = [c * K.pi_pow(i) for i, c in enumerate(rev)]
    return count + _oracle_integral(scaled, K, modulus_depth)


__all__ = ["RootReport", "RootApproximation", "count_roots", "oracle_count", "refine_root",
           "embed_subfield", "discriminant_valuation"]
