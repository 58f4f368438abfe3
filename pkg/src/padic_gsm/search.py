"""Parameter search for generic polynomials over a local field.

Given a target field K, a generic polynomial P(b_1, ..., b_{n-1}, t; x) and
fixed values for all parameters but t, the search walks pi_F-adic digit
strings s = (s_0, s_1, ...) for t and keeps the bivariate polynomial
phi(x, t) = P(b, s_0 + ... + s_{i-1} pi_F^{i-1} + pi_F^i t; x) refined along
the x-digits of a prospective root.  A branch ends when the reduction of
phi is linear in x (a root exists for every t in the remaining disc), when
it has no usable x-root (dead), or when the digit budget runs out.
"""

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .errors import (DegenerateSpecialization, EmbeddingFailed, FrontierExplosion,
                     InvalidInput, NotSquarefree, PrecisionExhausted, RamificationMismatch,
                     RamificationUndetermined, SearchError, UnsupportedReconstruction,
                     ZeroDivisorDetected)
from .field import FieldElement, LocalField
from .panayi import count_roots, embed_subfield
from .poly import BivariatePoly, PolyOverK
from .residue import ResidueElement, ResidueField, roots_in_k

DEFAULT_FRONTIER_CAP = 10_000

ROOT_FOUND = "root-found"
DEAD = "dead"
BOUND_HIT = "bound-hit"


# -- generic polynomials ------------------------------------------------------


@dataclass(frozen=True)
class GenericPolynomial:
    """template[i] is the coefficient of x^i as a nested dense list.

    The outermost nesting level runs over powers of params[0], the next over
    powers of params[1], and so on; the innermost entries are integers.
    """

    name: str
    group: str
    params: tuple
    template: tuple

    @property
    def arity(self):
        return len(self.params)

    @property
    def degree(self):
        return len(self.template) - 1

    @classmethod
    def from_dict(cls, d):
        params = tuple(d["params"])
        template = tuple(_freeze(c) for c in d["template"])
        for c in template:
            _check_nesting(c, len(params))
        return cls(d["name"], d.get("group", d["name"]), params, template)

    def to_dict(self):
        return {"name": self.name, "group": self.group, "params": list(self.params),
                "template": [_thaw(c) for c in self.template]}


def _freeze(x):
    if isinstance(x, list):
        return tuple(_freeze(y) for y in x)
    return int(x)


def _thaw(x):
    if isinstance(x, tuple):
        return [_thaw(y) for y in x]
    return str(x)


def _check_nesting(c, depth):
    if depth == 0:
        if not isinstance(c, int):
            raise InvalidInput("template nesting deeper than the parameter count")
        return
    if not isinstance(c, tuple):
        raise InvalidInput("template nesting shallower than the parameter count")
    for sub in c:
        _check_nesting(sub, depth - 1)


def load_catalog(path=None):
    """Catalog of generic polynomials by name (bundled catalog unless ``path`` is given)."""
    if path is None:
        text = resources.files("padic_gsm").joinpath("data/catalog.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    data = json.loads(text)
    return {d["name"]: GenericPolynomial.from_dict(d) for d in data["polynomials"]}


def _eval_nested(K, c, values):
    if not values:
        return K(int(c))
    acc = K.zero
    for sub in reversed(c):
        acc = acc * values[0] + _eval_nested(K, sub, values[1:])
    return acc


def specialize(g, params, K):
    """P(params; x) as a polynomial over K."""
    if len(params) != g.arity:
        raise InvalidInput(f"{g.name} takes {g.arity} parameters, got {len(params)}")
    values = [K(v) for v in params]
    coeffs = [_eval_nested(K, c, values) for c in g.template]
    if coeffs[-1].is_zero():
        raise DegenerateSpecialization("leading coefficient vanishes")
    return PolyOverK(K, coeffs)


def _tpoly_nested(K, c, values, free, depth=0):
    """Coefficient c as a polynomial in the free parameter (list of FieldElements)."""
    if depth == len(values):
        return [K(int(c))]
    if depth == free:
        out = []
        for k, sub in enumerate(c):
            part = _tpoly_nested(K, sub, values, free, depth + 1)
            out = _tadd_shift(out, part, k)
        return out
    acc = []
    for sub in reversed(c):
        acc = [a * values[depth] for a in acc]
        acc = _tadd_shift(acc, _tpoly_nested(K, sub, values, free, depth + 1), 0)
    return acc


def _tadd_shift(a, b, shift):
    n = max(len(a), len(b) + shift)
    out = list(a) + [None] * (n - len(a))
    for j, c in enumerate(b):
        out[j + shift] = c if out[j + shift] is None else out[j + shift] + c
    zero = b[0].field.zero if b else None
    return [zero if c is None else c for c in out]


def bivariate(g, fixed, free, K):
    """P with every parameter except index ``free`` fixed, as phi(x, t) over K."""
    values = list(fixed)
    values.insert(free, None)
    values = [None if v is None else K(v) for v in values]
    rows = [_tpoly_nested(K, c, values, free) or [K.zero] for c in g.template]
    return BivariatePoly(K, rows)


# -- jobs and results -----------------------------------------------------------


@dataclass
class SearchJob:
    K: LocalField
    generic: GenericPolynomial
    fixed_params: dict
    digit_bound: int
    F_poly: tuple = (0, 1)
    free_param: str = None
    max_iterations: int = None
    frontier_cap: int = DEFAULT_FRONTIER_CAP

    def free_index(self):
        name = self.free_param or self.generic.params[-1]
        if name not in self.generic.params:
            raise InvalidInput(f"unknown parameter {name!r}")
        return self.generic.params.index(name)


@dataclass
class Branch:
    digits: tuple
    status: str
    t_star: FieldElement = None
    specialized: PolyOverK = None
    integer_coeffs: list = None
    reconstructed: int = None
    local_gsm: bool = None  # Q_p[x]/(specialization) is K; None when undecided

    def digit_values(self):
        return [_digit_json(d) for d in self.digits]


@dataclass
class SearchResult:
    branches: list = field(default_factory=list)

    def root_found(self):
        return [b for b in self.branches if b.status == ROOT_FOUND]

    def gsm_branches(self):
        """Root-found branches whose specialization defines K itself."""
        return [b for b in self.root_found() if b.local_gsm]

    def parameters(self):
        return [b.reconstructed for b in self.gsm_branches()]

    def status_counts(self):
        out = {}
        for b in self.branches:
            out[b.status] = out.get(b.status, 0) + 1
        return out


def _digit_json(d):
    if d.parent.f == 1:
        return d.coeffs[0]
    return list(d.coeffs)


class _Subfield:
    """Digits, their lifts and pi_F, all mapped into K."""

    def __init__(self, K, F_poly):
        F_poly = [int(c) for c in F_poly]
        self.trivial = len(F_poly) == 2
        if self.trivial:
            if F_poly[1] != 1:
                raise InvalidInput("subfield polynomial must be monic")
            self.F = None
            self.k = ResidueField(K.p, 1)
            self.pi = K(K.p)
            self.lifts = [K(d.coeffs[0]) for d in self.k.enumerate()]
            self.root = K(-F_poly[0])
            return
        F = LocalField(K.p, F_poly, K.prec)
        roots = embed_subfield(K, F_poly)
        if not roots:
            raise EmbeddingFailed("subfield does not embed")
        self.F = F
        self.root = roots[0]
        self.k = F.residue_field
        self.pi = self.image(F.uniformizer)
        self.lifts = [self.image(F.lift(d)) for d in self.k.enumerate()]

    def image(self, x):
        """Image in K of an element of F (via its power-basis coordinates)."""
        K = self.root.field
        acc = K.zero
        for c in reversed(x.to_fractions()):
            acc = acc * self.root + c
        return acc

    def value(self, v, K):
        """A fixed parameter: a rational, or coordinates over the root of F_poly."""
        if isinstance(v, (list, tuple)):
            acc = K.zero
            for c in reversed(v):
                acc = acc * self.root + Fraction(c)
            return acc
        return K(Fraction(v) if isinstance(v, str) else v)


def search(job):
    K = job.K
    g = job.generic
    free = job.free_index()
    sub = _Subfield(K, job.F_poly)
    fixed = []
    for name in g.params:
        if g.params.index(name) == free:
            continue
        if name not in job.fixed_params:
            raise InvalidInput(f"missing value for parameter {name!r}")
        fixed.append(sub.value(job.fixed_params[name], K))
    phi0 = bivariate(g, fixed, free, K)
    cap = job.max_iterations
    if cap is None:
        e_F = 1 if sub.F is None else sub.F.e
        cap = 4 * max(job.digit_bound, 1) * max(1, K.e // e_F)
    digits_k = sub.k.enumerate()
    pi_K = K.uniformizer

    finished = []
    frontier = deque([((), phi0, 0)])
    while frontier:
        if len(frontier) > job.frontier_cap:
            raise FrontierExplosion(f"more than {job.frontier_cap} live branches",
                                    partial=SearchResult(finished))
        s, phi, it = frontier.popleft()
        while True:
            if it >= cap:
                finished.append((s, BOUND_HIT))
                break
            it += 1
            normal = phi.normalize()
            red = normal.reduce()
            if red.deg_t > 0:
                if len(s) >= job.digit_bound:
                    finished.append((s, BOUND_HIT))
                else:
                    for beta, lift in zip(digits_k, sub.lifts):
                        frontier.append((s + (beta,), phi.substitute_t(lift, sub.pi), it))
                break
            dx = red.deg_x
            if dx == 1:
                finished.append((s, ROOT_FOUND))
                break
            if dx <= 0:
                finished.append((s, DEAD))
                break
            xroots = roots_in_k(red.x_poly()[:dx + 1])
            if not xroots:
                finished.append((s, DEAD))
                break
            children = [normal.substitute_x(K.lift(b), pi_K) for b in xroots]
            if len(children) == 1:
                phi = children[0]
                continue
            for child in children:
                frontier.append((s, child, it))
            break

    return SearchResult(_assemble(finished, job, sub, fixed, free))


def _assemble(finished, job, sub, fixed, free):
    K = job.K
    seen = set()
    found_prefixes = set()
    branches = []
    for s, status in finished:
        key = (tuple(d.coeffs for d in s), status)
        if key in seen:
            continue
        seen.add(key)
        if status == ROOT_FOUND:
            found_prefixes.add(key[0])
        branches.append((s, status))
    out = []
    for s, status in branches:
        coeffs = tuple(d.coeffs for d in s)
        if status == ROOT_FOUND and any(coeffs[:i] in found_prefixes for i in range(len(coeffs))):
            continue
        if status != ROOT_FOUND:
            out.append(Branch(s, status))
            continue
        t_star = _t_star(s, sub, K)
        params = list(fixed)
        params.insert(free, t_star)
        spec = specialize(job.generic, params, K)
        squarefree = _verify(job, params, free, t_star, len(s), sub, s)
        ints = _integer_coeffs(spec)
        rec = reconstruct_global(s, None) if sub.trivial else None
        gsm = _is_local_gsm(K, ints) if squarefree else False
        out.append(Branch(s, status, t_star, spec, ints, rec, gsm))
    return out


def _verify(job, params, free, t_star, depth, sub, s):
    """Re-check that P(b, t) has a root in K for t in the branch disc.

    Returns whether P(b, t*) itself is squarefree; a repeated factor is
    sidestepped by testing nearby members t* + j*pi_F^depth of the same disc.
    """
    K = job.K
    for j in range(4):
        params = list(params)
        params[free] = t_star + sub.pi ** depth * j if j else t_star
        try:
            ok = count_roots(specialize(job.generic, params, K)).count >= 1
        except NotSquarefree:
            continue
        if not ok:
            break
        return j == 0
    raise SearchError(f"branch {[_digit_json(d) for d in s]} does not verify")


def _is_local_gsm(K, ints):
    if ints is None:
        return None
    try:
        return check_gsm_local(list(K.poly), ints, K.p, K.prec, K.residue_field.modulus)
    except ZeroDivisorDetected:
        return False
    except PrecisionExhausted:
        return None


def _t_star(s, sub, K):
    acc = K.zero
    index = {d.coeffs: lift for d, lift in zip(sub.k.enumerate(), sub.lifts)}
    for d in reversed(s):
        acc = acc * sub.pi + index[d.coeffs]
    return acc


def _integer_coeffs(poly):
    out = []
    for c in poly.coeffs:
        if not c.is_rational():
            return None
        q = c.to_rational()
        if q.denominator != 1:
            return None
        out.append(int(q))
    return out


def reconstruct_global(t_star, F=None, digit_count=None):
    """Integer sum(s_i p^i) in [0, p^d) for a digit string (or t* in Q_p) over a trivial F."""
    if F is not None and F.n > 1:
        raise UnsupportedReconstruction("global reconstruction needs F = Q_p")
    if isinstance(t_star, FieldElement):
        K = t_star.field
        if K.n > 1:
            raise UnsupportedReconstruction("t* does not lie in Q_p")
        if digit_count is None:
            raise InvalidInput("digit_count is required for a field element")
        q = t_star.to_rational()
        mod = K.p ** digit_count
        return q.numerator * pow(q.denominator, -1, mod) % mod
    total = 0
    for i, d in enumerate(t_star):
        if isinstance(d, ResidueElement):
            if d.parent.f != 1:
                raise UnsupportedReconstruction("digits from a non-prime residue field")
            p = d.parent.p
            d = d.coeffs[0]
        else:
            raise InvalidInput("digits must be residue elements")
        total += d * p ** i
    return total


# -- local GSM check ------------------------------------------------------------


def check_gsm_local(local_poly, candidate, p, prec=120, residue_modulus=None):
    """True when local_poly has a root in Q_p[x]/(candidate).

    The candidate field is built with the (e, f) of the field defined by
    local_poly; a candidate whose Newton data forces a different (e, f) fails.
    """
    F = LocalField(p, local_poly, prec, residue_modulus)
    if len(candidate) != len(local_poly):
        return False
    try:
        Kh = LocalField(p, candidate, prec)
    except RamificationUndetermined:
        try:
            Kh = LocalField(p, candidate, prec, e_f_hint=(F.e, F.f))
        except RamificationMismatch:
            return False
    if (Kh.e, Kh.f) != (F.e, F.f):
        return False
    return count_roots(PolyOverK(Kh, list(local_poly))).count >= 1


__all__ = ["GenericPolynomial", "SearchJob", "SearchResult", "Branch", "load_catalog",
           "specialize", "bivariate", "search", "reconstruct_global", "check_gsm_local",
           "ROOT_FOUND", "DEAD", "BOUND_HIT"]
