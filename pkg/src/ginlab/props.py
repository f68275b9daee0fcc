"""Classification predicates on monomial ideals: lexsegment, weakly
reverse lexicographic, and Borel-fixed (combinatorial and action-based).

Every failing verdict carries a witness that can be re-validated with
`contains` alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ideals import contains, maxdeg, monomials_of_degree
from .orders import DEGREVLEX, binom_p_leq, binomial, mono_str


@dataclass(frozen=True)
class PropertyVerdict:
    holds: bool
    witness: tuple | None = None  # (member-or-generator, missing monomial)

    def __bool__(self):
        return self.holds

    def to_json(self, prop, names=None):
        out = {"property": prop, "holds": self.holds}
        if self.witness is not None:
            member, missing = self.witness
            out["witness"] = {"member": mono_str(member, names),
                              "missing": mono_str(missing, names),
                              "member_exponents": list(member),
                              "missing_exponents": list(missing)}
        return out


def is_lexsegment(J):
    """Each graded piece up to maxdeg must be a descending-lex prefix.

    Degrees above maxdeg need no check: multiplying a lex segment by all
    variables yields a lex segment again (tested property).
    """
    if not J.gens:
        return PropertyVerdict(True)
    for d in range(1, maxdeg(J) + 1):
        gap = None
        for m in monomials_of_degree(J.n, d):
            if contains(J, m):
                if gap is not None:
                    return PropertyVerdict(False, (m, gap))
            elif gap is None:
                gap = m
    return PropertyVerdict(True)


def is_weakly_revlex(J):
    """Minimal generators only: same-degree revlex-larger monomials are in J."""
    for g in J.gens:
        d = sum(g)
        gkey = DEGREVLEX.key(g)
        for m in monomials_of_degree(J.n, d):
            if DEGREVLEX.key(m) > gkey and not contains(J, m):
                return PropertyVerdict(False, (g, m))
    return PropertyVerdict(True)


def is_borel_fixed(J, p=0):
    """Combinatorial Borel criterion at characteristic p.

    For each minimal generator m, each variable x_j dividing m with exact
    exponent t, each i < j, and each 1 <= s <= t allowed by the
    characteristic-p binomial order, the shift (x_i / x_j)^s m must stay
    in the ideal.
    """
    binom_p_leq(0, 0, p)  # validate the characteristic up front
    for m in J.gens:
        for j, t in enumerate(m):
            if t == 0:
                continue
            for i in range(j):
                for s in range(1, t + 1):
                    if not binom_p_leq(s, t, p):
                        continue
                    shifted = list(m)
                    shifted[j] -= s
                    shifted[i] += s
                    if not contains(J, tuple(shifted)):
                        return PropertyVerdict(False, (m, tuple(shifted)))
    return PropertyVerdict(True)


def _rank(rows):
    """Rank of a matrix of Fractions by Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def borel_action_check(J, i, j, c, horizon=None):
    """Definition-level check: the substitution x_j -> x_j + c*x_i maps each
    graded piece of J onto itself (verified by exact row reduction over Q).
    """
    if i >= j:
        raise ValueError("need i < j")
    c = Fraction(c)
    if c == 0:
        raise ValueError("need c != 0")
    D = horizon if horizon is not None else (maxdeg(J) if J.gens else 0)
    for d in range(1, D + 1):
        members = [m for m in monomials_of_degree(J.n, d) if contains(J, m)]
        if not members:
            continue
        index = {m: k for k, m in enumerate(members)}
        rows = []
        for m in members:
            image = _substitute(m, i, j, c)
            row = [Fraction(0)] * len(members)
            ok = True
            for mono, coeff in image.items():
                if mono not in index:
                    ok = False
                    break
                row[index[mono]] = coeff
            if not ok:
                return False
            rows.append(row)
        if _rank(rows) != len(members):
            return False
    return True


def _substitute(m, i, j, c):
    """Expand m under x_j -> x_j + c*x_i as {monomial: coefficient}."""
    e = m[j]
    out = {}
    for k in range(e + 1):
        mono = list(m)
        mono[j] = e - k
        mono[i] += k
        coeff = binomial(e, k) * c ** k
        mono = tuple(mono)
        out[mono] = out.get(mono, Fraction(0)) + coeff
    return {mm: cc for mm, cc in out.items() if cc}
