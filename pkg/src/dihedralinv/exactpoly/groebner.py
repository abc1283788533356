"""Gröbner bases for desk-scale ideals.

Deliberately naive Buchberger (all pairs, no strategy) followed by a
reduced-basis pass: the engine only ever meets two-to-four variable examples
such as the ideal (xy, x^n+y^n), so simplicity and determinism beat speed.
"""

from __future__ import annotations

from .rings import Monomial, Polynomial


class MonomialOrder:
    """A monomial order: graded lex, or pure lex with an explicit variable
    priority (most significant variable first)."""

    __slots__ = ("kind", "priority")

    def __init__(self, kind, priority=None):
        if kind not in ("grlex", "lex"):
            raise ValueError("unknown order kind %r" % (kind,))
        if kind == "lex":
            priority = tuple(priority)
            if len(set(priority)) != len(priority):
                raise ValueError("duplicate variable in priority list")
        self.kind = kind
        self.priority = priority

    @classmethod
    def graded_lex(cls):
        return cls("grlex")

    @classmethod
    def lex(cls, priority):
        """Lex order where priority[0] is the most significant variable.
        Variables missing from the list rank below the listed ones, in
        increasing index order."""
        return cls("lex", priority)

    def key_function(self, nvars):
        if self.kind == "grlex":
            return lambda mono: mono.grlex_key(nvars)
        listed = self.priority
        rest = tuple(v for v in range(nvars) if v not in listed)
        cols = listed + rest
        return lambda mono: tuple(mono.exponent(v) for v in cols)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and self.kind == other.kind
                and self.priority == other.priority)

    def __hash__(self):
        return hash((self.kind, self.priority))

    def __repr__(self):
        if self.kind == "grlex":
            return "MonomialOrder.graded_lex()"
        return "MonomialOrder.lex(%r)" % (list(self.priority),)


def leading_term(f, order):
    """(monomial, coefficient) of the order-largest term; error on zero."""
    if not f.terms:
        raise ValueError("zero polynomial has no leading term")
    key = order.key_function(f.universe.nvars)
    mono = max(f.terms, key=key)
    return mono, f.terms[mono]


def normal_form(f, basis, order):
    """Remainder of multivariate division of f by the basis (in list order).

    When the basis is a Gröbner basis for the order, the remainder is zero
    exactly when f lies in the generated ideal."""
    basis = [b for b in basis if b.terms]
    key = order.key_function(f.universe.nvars)
    lead = [(leading_term(b, order), b) for b in basis]
    remainder = {}
    work = dict(f.terms)
    while work:
        mono = max(work, key=key)
        coeff = work.pop(mono)
        for (bm, bc), b in lead:
            if bm.divides(mono):
                factor = mono / bm
                scale = coeff / bc
                for tm, tc in b.terms.items():
                    if tm is bm or tm == bm:
                        continue
                    km = tm * factor
                    v = work.get(km, 0) - scale * tc
                    if v:
                        work[km] = v
                    elif km in work:
                        del work[km]
                break
        else:
            remainder[mono] = coeff
    return Polynomial(f.universe, remainder)


def s_polynomial(f, g, order):
    fm, fc = leading_term(f, order)
    gm, gc = leading_term(g, order)
    lcm = fm.lcm(gm)
    return f * Polynomial.from_monomial(f.universe, lcm / fm, 1 / fc) \
        - g * Polynomial.from_monomial(g.universe, lcm / gm, 1 / gc)


def buchberger(gens, order):
    """Reduced Gröbner basis of the ideal generated by `gens`.

    Output polynomials are monic, mutually reduced, and sorted by leading
    monomial (smallest first), so the result is canonical for the ideal and
    the order."""
    gens = list(gens)
    if not gens:
        return []
    universe = gens[0].universe
    for g in gens:
        if g.universe != universe:
            raise ValueError("mixed universes in generator list")
        if not g.terms:
            raise ValueError("zero generator")
    basis = list(gens)
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop()
        s = s_polynomial(basis[i], basis[j], order)
        r = normal_form(s, basis, order)
        if r.terms:
            basis.append(r)
            k = len(basis) - 1
            pairs.extend((k, t) for t in range(k))
    return _reduce_basis(basis, order)


def _reduce_basis(basis, order):
    key = order.key_function(basis[0].universe.nvars)
    # keep only generators with minimal leading monomials
    lead = [leading_term(b, order)[0] for b in basis]
    keep = []
    for i, b in enumerate(basis):
        mi = lead[i]
        redundant = False
        for j, mj in enumerate(lead):
            if i == j or not mj.divides(mi):
                continue
            if mj != mi or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(b)
    # fully reduce each survivor against the others, repeat to a fixed point
    changed = True
    while changed:
        changed = False
        nxt = []
        for i, b in enumerate(keep):
            others = keep[:i] + keep[i + 1:]
            r = normal_form(b, others, order)
            if r != b:
                changed = True
            if r.terms:
                nxt.append(r)
        keep = nxt
    monic = []
    for b in keep:
        _, c = leading_term(b, order)
        monic.append(b.scale(1 / c))
    monic.sort(key=lambda b: key(leading_term(b, order)[0]))
    return monic


def staircase_monomials(basis, order, cap=20000):
    """Monomials outside the initial ideal of a Gröbner basis, smallest
    first in graded lex.  Errors via the cap when the staircase is infinite
    (the quotient is not finite-dimensional) or simply too large."""
    universe = basis[0].universe
    nvars = universe.nvars
    lead = [leading_term(b, order)[0] for b in basis]
    seen = set()
    out = []
    frontier = [Monomial.unit()]
    while frontier:
        nxt = []
        for mono in frontier:
            if mono in seen:
                continue
            seen.add(mono)
            if any(lm.divides(mono) for lm in lead):
                continue
            out.append(mono)
            if len(out) > cap:
                raise ValueError(
                    "staircase exceeds %d monomials (infinite quotient?)"
                    % cap)
            for v in range(nvars):
                nxt.append(mono * Monomial.variable(v))
        frontier = nxt
    out.sort(key=lambda mo: mo.grlex_key(nvars))
    return out


def staircase_generating_function(basis, order, cap=20000):
    """Degree generating function of the staircase: entry d counts staircase
    monomials of total degree d."""
    monos = staircase_monomials(basis, order, cap=cap)
    top = max((mo.degree for mo in monos), default=0)
    counts = [0] * (top + 1)
    for mo in monos:
        counts[mo.degree] += 1
    return counts
