"""Sparse multivariate polynomials over an exact field.

A polynomial is a tuple of (monomial, coefficient) terms kept strictly
descending under its active order. Rings may declare a main/parameter
split: the first `nmain` variables are the main x-variables, the tail
holds parameters. Specialization and block leading data operate on that
split.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from .fields import QQ, RationalField
from .orders import LEX, InverseBlock, mono_mul, mono_one, mono_str


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Ring:
    """Variable names plus coefficient field; names[:nmain] are main vars."""

    field: object
    names: tuple
    nmain: int = -1

    def __post_init__(self):
        if self.nmain < 0:
            object.__setattr__(self, "nmain", len(self.names))

    @property
    def nvars(self):
        return len(self.names)

    @property
    def nparams(self):
        return self.nvars - self.nmain

    def main_ring(self):
        return Ring(self.field, self.names[: self.nmain])

    def param_ring(self):
        return Ring(self.field, self.names[self.nmain:])


def xring(n, field=QQ):
    """Plain ring k[x1..xn] with no parameters."""
    return Ring(field, tuple(f"x{i + 1}" for i in range(n)))


class Polynomial:
    __slots__ = ("ring", "order", "terms")

    def __init__(self, ring, order, terms):
        # terms must already be normalized (descending, nonzero coeffs)
        self.ring = ring
        self.order = order
        self.terms = tuple(terms)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring, order):
        return cls(ring, order, ())

    @classmethod
    def from_dict(cls, ring, order, d):
        zero = ring.field.zero
        items = [(m, c) for m, c in d.items() if c != zero]
        items.sort(key=lambda t: order.key(t[0]), reverse=True)
        return cls(ring, order, items)

    @classmethod
    def from_terms(cls, ring, order, terms):
        d = {}
        add = ring.field.add
        for m, c in terms:
            if len(m) != ring.nvars:
                raise RingMismatch(f"term has {len(m)} exponents, ring has {ring.nvars}")
            d[m] = add(d.get(m, ring.field.zero), ring.field.of(c))
        return cls.from_dict(ring, order, d)

    @classmethod
    def constant(cls, ring, order, c):
        c = ring.field.of(c)
        if c == ring.field.zero:
            return cls.zero(ring, order)
        return cls(ring, order, [(mono_one(ring.nvars), c)])

    @classmethod
    def variable(cls, ring, order, i, power=1):
        m = [0] * ring.nvars
        m[i] = power
        return cls(ring, order, [(tuple(m), ring.field.one)])

    # -- inspection ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def lm(self):
        return self.terms[0][0]

    def lc(self):
        return self.terms[0][1]

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def is_homogeneous(self):
        degs = {sum(m) for m, _ in self.terms}
        return len(degs) <= 1

    def as_dict(self):
        return dict(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms)))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_poly(self)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch("operands live in different rings")

    def resorted(self, order):
        if order == self.order:
            return self
        items = sorted(self.terms, key=lambda t: order.key(t[0]), reverse=True)
        return Polynomial(self.ring, order, items)

    def __add__(self, other):
        self._check(other)
        fld = self.ring.field
        d = dict(self.terms)
        for m, c in other.terms:
            s = fld.add(d.get(m, fld.zero), c)
            if s == fld.zero:
                d.pop(m, None)
            else:
                d[m] = s
        return Polynomial.from_dict(self.ring, self.order, d)

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, self.order, [(m, neg(c)) for m, c in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        fld = self.ring.field
        d = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                s = fld.add(d.get(m, fld.zero), fld.mul(c1, c2))
                if s == fld.zero:
                    d.pop(m, None)
                else:
                    d[m] = s
        return Polynomial.from_dict(self.ring, self.order, d)

    def scale(self, c):
        fld = self.ring.field
        c = fld.of(c)
        if c == fld.zero:
            return Polynomial.zero(self.ring, self.order)
        return Polynomial(self.ring, self.order,
                          [(m, fld.mul(c, cc)) for m, cc in self.terms])

    def mul_term(self, c, m):
        """Multiply by the single term c * m (m an exponent tuple)."""
        fld = self.ring.field
        c = fld.of(c)
        if c == fld.zero:
            return Polynomial.zero(self.ring, self.order)
        return Polynomial(self.ring, self.order,
                          [(mono_mul(mm, m), fld.mul(c, cc)) for mm, cc in self.terms])

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def primitive(self):
        """Strip rational content: integer coefficients with gcd 1, lc > 0.

        Over a prime field this normalizes to a monic polynomial instead.
        """
        if not self.terms:
            return self
        if not isinstance(self.ring.field, RationalField):
            return self.monic()
        den = reduce(lambda a, c: a * c.denominator // gcd(a, c.denominator),
                     (c for _, c in self.terms), 1)
        num = reduce(gcd, (abs(c.numerator) for _, c in self.terms))
        scale = Fraction(den, num)
        if self.lc() < 0:
            scale = -scale
        return self.scale(scale)


# ---------------------------------------------------------------------------
# main/parameter split operations

def specialize(F, point):
    """Substitute parameter values, returning a polynomial over the main ring.

    `point` is a sequence of field elements, one per parameter variable of
    F's ring (in ring order), or a dict keyed by parameter name.
    """
    ring = F.ring
    if ring.nparams == 0:
        return F
    pnames = ring.names[ring.nmain:]
    if isinstance(point, dict):
        missing = [t for t in pnames if t not in point]
        if missing:
            raise ValueError(f"unassigned parameter variables: {missing}")
        values = [ring.field.of(point[t]) for t in pnames]
    else:
        if len(point) != len(pnames):
            raise ValueError(
                f"point has {len(point)} coordinates, ring has {len(pnames)} parameters")
        values = [ring.field.of(v) for v in point]
    fld = ring.field
    out = ring.main_ring()
    out_order = F.order.main_order if isinstance(F.order, InverseBlock) else F.order
    d = {}
    for m, c in F.terms:
        xm = m[: ring.nmain]
        for v, e in zip(values, m[ring.nmain:]):
            for _ in range(e):
                c = fld.mul(c, v)
        s = fld.add(d.get(xm, fld.zero), c)
        if s == fld.zero:
            d.pop(xm, None)
        else:
            d[xm] = s
    return Polynomial.from_dict(out, out_order, d)


def block_leading_data(F, main_order):
    """Leading x-monomial of F in k[t][x] and its parameter coefficient.

    Returns (lead_monomial over the main variables, lead_coefficient as a
    polynomial over the parameter ring).
    """
    if not F:
        raise ValueError("block leading data of the zero polynomial")
    ring = F.ring
    groups = {}
    for m, c in F.terms:
        groups.setdefault(m[: ring.nmain], []).append((m[ring.nmain:], c))
    lead = max(groups, key=main_order.key)
    tring = ring.param_ring()
    coeff = Polynomial.from_dict(tring, LEX, dict(groups[lead]))
    return lead, coeff


# ---------------------------------------------------------------------------
# text / JSON forms

def coeff_str(c):
    return str(c)


def format_poly(f, names=None):
    if not f.terms:
        return "0"
    names = names or f.ring.names
    parts = []
    for i, (m, c) in enumerate(f.terms):
        ms = mono_str(m, names)
        neg = isinstance(c, (int, Fraction)) and c < 0
        mag = -c if neg else c
        if ms == "1":
            body = str(mag)
        elif mag == 1:
            body = ms
        else:
            body = f"{mag}*{ms}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def poly_to_json(f):
    return [[coeff_str(c), list(m)] for m, c in f.terms]


def poly_from_json(ring, order, data):
    terms = []
    for cs, exps in data:
        terms.append((tuple(exps), Fraction(cs)))
    return Polynomial.from_terms(ring, order, terms)


def parse_poly(text, ring, order):
    """Parse `c*x1^e1*...*xn^en` terms joined by + / -."""
    text = text.replace("-", "+-").replace(" ", "")
    if text.startswith("+-"):
        text = text[1:]
    name_index = {nm: i for i, nm in enumerate(ring.names)}
    terms = []
    for chunk in text.split("+"):
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:]
        coeff = Fraction(1)
        exps = [0] * ring.nvars
        for factor in chunk.split("*"):
            if factor[0].isdigit() or "/" in factor:
                coeff *= Fraction(factor)
                continue
            if "^" in factor:
                nm, e = factor.split("^")
                e = int(e)
            else:
                nm, e = factor, 1
            if nm not in name_index:
                raise ValueError(f"unknown variable {nm!r}")
            exps[name_index[nm]] += e
        terms.append((tuple(exps), sign * coeff))
    return Polynomial.from_terms(ring, order, terms)
