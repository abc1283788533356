"""Sparse multivariate polynomials with exact rational coefficients.

Two variable universes are supported:

* ``XY(m)`` -- the coordinate ring of m vectors, variables x1,y1,...,xm,ym;
* ``RHOPI(n,m)`` -- the free algebra on the generators of the dihedral
  invariant ring: one variable rho[a] for every multi-index a of total 2 and
  one variable pi[b] for every multi-index b of total n.

Coefficients are `fractions.Fraction` throughout (always reduced, denominator
positive, zero never stored).  Monomials store their exponents sparsely as a
sorted tuple of (variable index, positive exponent) pairs.  The canonical term
order used for serialization is graded lexicographic on exponent vectors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import re

_ONE = Fraction(1)


def compositions(total, parts):
    """All vectors of `parts` non-negative integers summing to `total`,
    in descending lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


class VariableUniverse:
    """A declared, ordered set of variables shared by all monomials of a
    polynomial.

    kind "xy":    variables x1,y1,x2,y2,...,xm,ym (in this order).
    kind "rhopi": all rho[a] with sum(a) = 2 in descending lex order of a,
                  followed by all pi[b] with sum(b) = n in descending lex
                  order of b.
    """

    __slots__ = ("kind", "m", "n", "_names", "_index", "_weights", "_degrees")

    def __init__(self, kind, m, n=None):
        if m < 1:
            raise ValueError("need at least one vector variable, got m=%r" % (m,))
        self.kind = kind
        self.m = m
        self.n = n
        names = []
        weights = []   # multidegree contributed by one power of the variable
        degrees = []   # total degree contributed by one power of the variable
        if kind == "xy":
            for i in range(1, m + 1):
                names.append("x%d" % i)
                names.append("y%d" % i)
                e_i = tuple(1 if j == i - 1 else 0 for j in range(m))
                weights.append(e_i)
                weights.append(e_i)
                degrees.append(1)
                degrees.append(1)
        elif kind == "rhopi":
            if n is None or n < 3:
                raise ValueError("rhopi universe needs n >= 3, got %r" % (n,))
            for a in compositions(2, m):
                names.append("rho[%s]" % ",".join(map(str, a)))
                weights.append(a)
                degrees.append(2)
            for b in compositions(n, m):
                names.append("pi[%s]" % ",".join(map(str, b)))
                weights.append(b)
                degrees.append(n)
        else:
            raise ValueError("unknown universe kind %r" % (kind,))
        self._names = tuple(names)
        self._index = {name: i for i, name in enumerate(names)}
        self._weights = tuple(weights)
        self._degrees = tuple(degrees)

    @property
    def nvars(self):
        return len(self._names)

    def name(self, i):
        return self._names[i]

    def names(self):
        return self._names

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError("no variable named %r in %r"
                             % (name, self)) from None

    def weight(self, i):
        """Multidegree (length-m vector) contributed by one power of variable i."""
        return self._weights[i]

    def degree(self, i):
        """Total degree contributed by one power of variable i (1 for xy
        variables, 2 for rho, n for pi)."""
        return self._degrees[i]

    def __eq__(self, other):
        return (isinstance(other, VariableUniverse)
                and self.kind == other.kind and self.m == other.m
                and self.n == other.n)

    def __hash__(self):
        return hash((self.kind, self.m, self.n))

    def __repr__(self):
        if self.kind == "xy":
            return "XY(%d)" % self.m
        return "RHOPI(%d,%d)" % (self.n, self.m)


@lru_cache(maxsize=None)
def xy_universe(m):
    return VariableUniverse("xy", m)


@lru_cache(maxsize=None)
def rhopi_universe(n, m):
    return VariableUniverse("rhopi", m, n)


class Monomial:
    """A power product, stored sparsely: sorted tuple of (variable index,
    exponent) pairs with all exponents positive."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exps=()):
        pairs = tuple(sorted((v, e) for v, e in exps if e != 0))
        for v, e in pairs:
            if e < 0:
                raise ValueError("negative exponent in monomial: %r" % (pairs,))
        self.exps = pairs
        self._hash = hash(pairs)

    @classmethod
    def unit(cls):
        return cls(())

    @classmethod
    def variable(cls, v, e=1):
        return cls(((v, e),))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self.exps == other.exps

    def __bool__(self):
        return bool(self.exps)

    @property
    def degree(self):
        return sum(e for _, e in self.exps)

    def exponent(self, v):
        for w, e in self.exps:
            if w == v:
                return e
        return 0

    def dense(self, nvars):
        out = [0] * nvars
        for v, e in self.exps:
            out[v] = e
        return tuple(out)

    def grlex_key(self, nvars):
        """Sort key for the canonical graded-lex order; bigger key = bigger
        monomial (sort descending for leading-term-first serialization)."""
        return (self.degree, self.dense(nvars))

    def __mul__(self, other):
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial(d.items())

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a monomial")
        return Monomial((v, e * k) for v, e in self.exps)

    def divides(self, other):
        od = dict(other.exps)
        return all(od.get(v, 0) >= e for v, e in self.exps)

    def __truediv__(self, other):
        """Quotient self / other; other must divide self."""
        d = dict(self.exps)
        for v, e in other.exps:
            have = d.get(v, 0) - e
            if have < 0:
                raise ValueError("monomial %r does not divide %r" % (other, self))
            d[v] = have
        return Monomial(d.items())

    def lcm(self, other):
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial(d.items())

    def weighted_degree(self, universe):
        return sum(e * universe.degree(v) for v, e in self.exps)

    def multidegree(self, universe):
        out = [0] * universe.m
        for v, e in self.exps:
            for j, w in enumerate(universe.weight(v)):
                out[j] += e * w
        return tuple(out)

    def text(self, universe):
        if not self.exps:
            return "1"
        parts = []
        for v, e in self.exps:
            name = universe.name(v)
            parts.append(name if e == 1 else "%s^%d" % (name, e))
        return "*".join(parts)

    def __repr__(self):
        return "Monomial(%r)" % (self.exps,)


class Polynomial:
    """Sparse polynomial over a fixed universe: map Monomial -> nonzero
    Fraction.  Immutable by convention; arithmetic returns new objects."""

    __slots__ = ("universe", "terms")

    def __init__(self, universe, terms=()):
        self.universe = universe
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, c in items:
            c = Fraction(c)
            if c:
                acc = clean.get(mono)
                if acc is None:
                    clean[mono] = c
                else:
                    acc += c
                    if acc:
                        clean[mono] = acc
                    else:
                        del clean[mono]
        self.terms = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, universe):
        return cls(universe)

    @classmethod
    def constant(cls, universe, c):
        return cls(universe, {Monomial.unit(): Fraction(c)})

    @classmethod
    def variable(cls, universe, v, e=1):
        return cls(universe, {Monomial.variable(v, e): _ONE})

    @classmethod
    def from_monomial(cls, universe, mono, c=1):
        return cls(universe, {mono: Fraction(c)})

    # -- predicates / views --------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        """Terms in canonical order: graded lex, leading term first."""
        nv = self.universe.nvars
        return sorted(self.terms.items(),
                      key=lambda it: it[0].grlex_key(nv), reverse=True)

    def degree(self):
        """Weighted total degree (max over terms); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        u = self.universe
        return max(m.weighted_degree(u) for m in self.terms)

    def is_homogeneous(self):
        u = self.universe
        degs = {m.weighted_degree(u) for m in self.terms}
        return len(degs) <= 1

    def multidegree(self):
        """The common multidegree of all terms, or None if the polynomial is
        not multihomogeneous.  Zero polynomial -> None."""
        mds = {m.multidegree(self.universe) for m in self.terms}
        if len(mds) == 1:
            return next(iter(mds))
        return None

    def coefficient(self, mono):
        return self.terms.get(mono, Fraction(0))

    # -- arithmetic ----------------------------------------------------

    def _check(self, other):
        if self.universe != other.universe:
            raise ValueError("mixed universes: %r vs %r"
                             % (self.universe, other.universe))

    def __add__(self, other):
        self._check(other)
        d = dict(self.terms)
        for m, c in other.terms.items():
            acc = d.get(m)
            if acc is None:
                d[m] = c
            else:
                acc += c
                if acc:
                    d[m] = acc
                else:
                    del d[m]
        p = Polynomial.zero(self.universe)
        p.terms = d
        return p

    def __neg__(self):
        p = Polynomial.zero(self.universe)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        d = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                c = c1 * c2
                acc = d.get(m)
                if acc is None:
                    d[m] = c
                else:
                    acc += c
                    if acc:
                        d[m] = acc
                    else:
                        del d[m]
        p = Polynomial.zero(self.universe)
        p.terms = d
        return p

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        p = Polynomial.zero(self.universe)
        if c:
            p.terms = {m: c * v for m, v in self.terms.items()}
        return p

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.universe, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.universe == other.universe
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.universe,
                     frozenset(self.terms.items())))

    # -- substitution --------------------------------------------------

    def substitute(self, mapping):
        """Substitute variables by polynomials.  `mapping` maps variable
        indices to Polynomial values (all over one target universe);
        unmapped variables are carried over unchanged (requires the target
        universe to equal the source universe in that case)."""
        target = None
        for p in mapping.values():
            target = p.universe
            break
        if target is None:
            target = self.universe
        out = Polynomial.zero(target)
        for mono, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for v, e in mono.exps:
                if v in mapping:
                    term = term * (mapping[v] ** e)
                else:
                    if target != self.universe:
                        raise ValueError("variable %s not mapped"
                                         % self.universe.name(v))
                    term = term * Polynomial.variable(target, v, e)
            out = out + term
        return out

    def kill_variables(self, kill):
        """Set the given variables to zero (drop every term containing them)."""
        kill = set(kill)
        d = {m: c for m, c in self.terms.items()
             if not any(v in kill for v, _ in m.exps)}
        p = Polynomial.zero(self.universe)
        p.terms = d
        return p

    def permute_variables(self, var_map):
        """Rename variables via the index map `var_map` (a permutation of the
        universe's variable indices)."""
        d = {}
        for m, c in self.terms.items():
            m2 = Monomial((var_map[v], e) for v, e in m.exps)
            d[m2] = c
        p = Polynomial.zero(self.universe)
        p.terms = d
        return p

    # -- text form -------------------------------------------------------

    def text(self):
        """Canonical text form: terms sorted by graded lex (leading first),
        rational coefficients as p/q, variables as x1,y1,... or rho[a,b,c],
        pi[a,b,c]."""
        if not self.terms:
            return "0"
        chunks = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            mag = -c if neg else c
            body = mono.text(self.universe)
            if body == "1":
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = "%s*%s" % (mag, body)
            if i == 0:
                chunks.append("-" + piece if neg else piece)
            else:
                chunks.append((" - " if neg else " + ") + piece)
        return "".join(chunks)

    __str__ = text

    def __repr__(self):
        return "Polynomial(%r, %s)" % (self.universe, self.text())


_TERM_SPLIT = re.compile(r"(?=[+-])")
_FACTOR = re.compile(
    r"^(?:(?P<coeff>\d+(?:/\d+)?)|(?P<name>[a-zA-Z]+\d+|[a-zA-Z]+\[[\d,]+\])"
    r"(?:\^(?P<exp>\d+))?)$")


def parse_polynomial(s, universe):
    """Parse the canonical text form back into a Polynomial."""
    s = s.strip()
    if s == "0":
        return Polynomial.zero(universe)
    out = Polynomial.zero(universe)
    for raw in _TERM_SPLIT.split(s.replace(" ", "")):
        if not raw:
            continue
        sign = _ONE
        while raw and raw[0] in "+-":
            if raw[0] == "-":
                sign = -sign
            raw = raw[1:]
        if not raw:
            if sign != _ONE:
                raise ValueError("dangling sign in %r" % (s,))
            continue
        coeff = sign
        exps = {}
        for factor in raw.split("*"):
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError("cannot parse factor %r" % (factor,))
            if m.group("coeff"):
                coeff *= Fraction(m.group("coeff"))
            else:
                v = universe.index(m.group("name"))
                e = int(m.group("exp") or 1)
                exps[v] = exps.get(v, 0) + e
        out = out + Polynomial.from_monomial(universe, Monomial(exps.items()), coeff)
    return out
