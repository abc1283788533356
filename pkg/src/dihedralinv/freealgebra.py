"""The free presentation of the dihedral vector invariant ring.

F(n,m) is the polynomial ring on symbols rho[a] (one per multidegree a with
sum 2) and pi[b] (sum n), graded by total degree (deg rho = 2, deg pi = n)
and multigraded by the index vectors.  The substitution rho[a] -> q_a,
pi[b] -> p_b defines the surjection phi onto the invariant ring; its kernel
is the object every other module interrogates.

gl_m acts on the symbols by shifting one unit of index between two slots
(E_{u,v}.pi_b = b_v * pi_{b+e_u-e_v}), extended to products as a derivation;
phi intertwines this with the polarization action on the coordinate ring.
Highest weight vectors and saturation under the full set of matrix units
give exact bases of the GL-submodules generated by the named relations:
the 3x3 symmetric determinant in the rho symbols, the three-term relation
of weight (n,2), and the weight-(2n-2k,2k) family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .dihedral import DihedralParams, p_pol, q_pol
from .exactpoly import (
    Monomial,
    Polynomial,
    PolynomialSpace,
    rhopi_universe,
)


@dataclass(frozen=True)
class LoweringOperator:
    """The matrix unit E_{u,v} (1-based slot indices, u != v)."""

    u: int
    v: int

    def __post_init__(self):
        if self.u < 1 or self.v < 1:
            raise ValueError("matrix unit indices are 1-based, got (%d,%d)"
                             % (self.u, self.v))
        if self.u == self.v:
            raise ValueError("diagonal units are passed as index pairs, "
                             "not LoweringOperator")


@lru_cache(maxsize=None)
def free_algebra(n, m):
    return FreeAlgebra(n, m)


class FreeAlgebra:
    """The ring F(n,m) with its variable tables and a phi cache."""

    def __init__(self, n, m):
        self.params = DihedralParams(n, m)
        self.universe = rhopi_universe(n, m)
        self.n = n
        self.m = m
        rho_vars = {}
        pi_vars = {}
        for v in range(self.universe.nvars):
            w = self.universe.weight(v)
            if self.universe.degree(v) == 2:
                rho_vars[w] = v
            else:
                pi_vars[w] = v
        # n == 2 would make the two tables collide; the parameter guard in
        # DihedralParams (n >= 3) rules that out
        self._rho_vars = rho_vars
        self._pi_vars = pi_vars
        self._num_rho = len(rho_vars)
        self._phi_cache = {Monomial.unit(): Polynomial.constant(
            self.xy_universe, 1)}

    @property
    def xy_universe(self):
        from .exactpoly import xy_universe

        return xy_universe(self.m)

    # -- element constructors -------------------------------------------

    def zero(self):
        return FreeElement(self, Polynomial.zero(self.universe))

    def one(self):
        return FreeElement(self, Polynomial.constant(self.universe, 1))

    def element(self, poly):
        if poly.universe != self.universe:
            raise ValueError("polynomial lives in %r, not %r"
                             % (poly.universe, self.universe))
        return FreeElement(self, poly)

    def _pad(self, index):
        index = tuple(int(a) for a in index)
        if len(index) > self.m:
            raise ValueError("index %r longer than m=%d" % (index, self.m))
        return index + (0,) * (self.m - len(index))

    def rho(self, alpha):
        alpha = self._pad(alpha)
        if sum(alpha) != 2:
            raise ValueError("rho index must sum to 2, got %r" % (alpha,))
        return FreeElement(self, Polynomial.variable(
            self.universe, self._rho_vars[alpha]))

    def pi(self, beta):
        beta = self._pad(beta)
        if sum(beta) != self.n:
            raise ValueError("pi index must sum to %d, got %r"
                             % (self.n, beta))
        return FreeElement(self, Polynomial.variable(
            self.universe, self._pi_vars[beta]))

    def variable_polarization(self, v):
        """phi of a single symbol: the q or p polarization."""
        w = self.universe.weight(v)
        if v < self._num_rho:
            return q_pol(w, m=self.m)
        return p_pol(w, m=self.m)

    def phi_monomial(self, mono):
        cached = self._phi_cache.get(mono)
        if cached is not None:
            return cached
        v, e = mono.exps[0]
        rest = mono / Monomial.variable(v)
        value = self.phi_monomial(rest) * self.variable_polarization(v)
        self._phi_cache[mono] = value
        return value

    # -- graded components ----------------------------------------------

    def monomials_of_weight(self, alpha, reverse=False):
        """All monomials of F(n,m) with the given multidegree, enumerated
        deterministically (descending lex in the variable exponents; the
        reverse flag flips the variable order for order-robustness tests)."""
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.m:
            raise ValueError("weight length %d != m=%d"
                             % (len(alpha), self.m))
        variables = list(range(self.universe.nvars))
        if reverse:
            variables.reverse()
        out = []
        acc = []

        def rec(idx, remaining):
            if not any(remaining):
                out.append(Monomial(acc))
                return
            if idx == len(variables):
                return
            v = variables[idx]
            w = self.universe.weight(v)
            cap = min(r // wi for r, wi in zip(remaining, w) if wi)
            for e in range(cap, 0, -1):
                acc.append((v, e))
                rec(idx + 1,
                    tuple(r - e * wi for r, wi in zip(remaining, w)))
                acc.pop()
            rec(idx + 1, remaining)

        rec(0, alpha)
        return out

    def monomial_elements_of_weight(self, alpha, reverse=False):
        return [FreeElement(self, Polynomial.from_monomial(self.universe, mo))
                for mo in self.monomials_of_weight(alpha, reverse=reverse)]

    # -- symmetric-group and gl actions -----------------------------------

    def permuted_variable(self, perm, v):
        """Index of the variable whose index vector is the perm-image of
        v's (slot i of the input lands in slot perm[i-1] of the output)."""
        w = self.universe.weight(v)
        target = [0] * self.m
        for i, a in enumerate(w):
            target[perm[i] - 1] = a
        target = tuple(target)
        if v < self._num_rho:
            return self._rho_vars[target]
        return self._pi_vars[target]

    def s_act(self, perm, e):
        """Permutation action on the vector slots."""
        perm = tuple(perm)
        if sorted(perm) != list(range(1, self.m + 1)):
            raise ValueError("perm must be a permutation of 1..%d, got %r"
                             % (self.m, perm))
        var_map = {v: self.permuted_variable(perm, v)
                   for v in range(self.universe.nvars)}
        return FreeElement(self, e.poly.permute_variables(var_map))

    def _shifted_variable(self, v, u_slot, v_slot):
        """The symbol with one index unit moved from v_slot to u_slot, and
        the integer factor (the v_slot index); factor 0 means the action
        kills this symbol."""
        w = self.universe.weight(v)
        c = w[v_slot]
        if not c:
            return 0, None
        target = list(w)
        target[v_slot] -= 1
        target[u_slot] += 1
        target = tuple(target)
        table = self._rho_vars if v < self._num_rho else self._pi_vars
        return c, table[target]

    def gl_act(self, E, e):
        """Action of a matrix unit on an element: index-shift with the
        source-slot index as factor on symbols, extended by Leibniz."""
        if isinstance(E, LoweringOperator):
            u, v = E.u, E.v
        else:
            u, v = E
        if not (1 <= u <= self.m and 1 <= v <= self.m):
            raise ValueError("matrix unit (%d,%d) out of range for m=%d"
                             % (u, v, self.m))
        out = {}
        if u == v:
            for mono, c in e.poly.terms.items():
                factor = mono.multidegree(self.universe)[u - 1]
                if factor:
                    out[mono] = c * factor
            return FreeElement(self, Polynomial(self.universe, out))
        for mono, c in e.poly.terms.items():
            for var, exp in mono.exps:
                factor, target = self._shifted_variable(var, u - 1, v - 1)
                if not factor:
                    continue
                shifted = (mono / Monomial.variable(var)) \
                    * Monomial.variable(target)
                value = out.get(shifted, 0) + c * exp * factor
                if value:
                    out[shifted] = value
                elif shifted in out:
                    del out[shifted]
        return FreeElement(self, Polynomial(self.universe, out))


class FreeElement:
    """An element of F(n,m): a polynomial in the rho/pi symbols tied to its
    parameters."""

    __slots__ = ("algebra", "poly")

    def __init__(self, algebra, poly):
        self.algebra = algebra
        self.poly = poly

    @property
    def params(self):
        return self.algebra.params

    def _check(self, other):
        if not isinstance(other, FreeElement) \
                or other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        return FreeElement(self.algebra, self.poly + other.poly)

    def __sub__(self, other):
        self._check(other)
        return FreeElement(self.algebra, self.poly - other.poly)

    def __neg__(self):
        return FreeElement(self.algebra, -self.poly)

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            self._check(other)
            return FreeElement(self.algebra, self.poly * other.poly)
        return FreeElement(self.algebra, self.poly.scale(Fraction(other)))

    __rmul__ = __mul__

    def scale(self, c):
        return FreeElement(self.algebra, self.poly.scale(c))

    def __pow__(self, k):
        return FreeElement(self.algebra, self.poly ** k)

    def __eq__(self, other):
        return (isinstance(other, FreeElement)
                and self.algebra is other.algebra
                and self.poly == other.poly)

    def __hash__(self):
        return hash((id(self.algebra),
                     tuple(sorted(self.poly.terms.items(),
                                  key=lambda kv: kv[0].exps))))

    def is_zero(self):
        return self.poly.is_zero()

    def __bool__(self):
        return bool(self.poly)

    def degree(self):
        """Graded degree (rho counts 2, pi counts n); -1 for zero."""
        return self.poly.degree()

    def weight(self):
        """Common multidegree of all terms, or None if mixed."""
        return self.poly.multidegree()

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return "FreeElement(%d,%d; %s)" % (self.algebra.n, self.algebra.m,
                                           self.poly.text())


# ---------------------------------------------------------------------------
# module-level operations


def phi(e):
    """The presentation map: substitute every symbol by its polarization and
    expand in the coordinate ring."""
    total = Polynomial.zero(e.algebra.xy_universe)
    for mono, c in e.poly.terms.items():
        total = total + e.algebra.phi_monomial(mono).scale(c)
    return total


def gl_act(E, e):
    return e.algebra.gl_act(E, e)


def s_act(perm, e):
    return e.algebra.s_act(perm, e)


def is_highest_weight(e):
    """The weight of e if e is multihomogeneous and killed by every raising
    unit E_{i,i+1}; None otherwise.  Zero input is an error."""
    if e.is_zero():
        raise ValueError("zero element has no weight")
    weight = e.weight()
    if weight is None:
        return None
    for i in range(1, e.algebra.m):
        if not gl_act((i, i + 1), e).is_zero():
            return None
    return weight


def submodule_basis(e):
    """Basis of the gl_m-submodule generated by e: saturate breadth-first
    under all matrix units E_{u,v} (u != v), keeping an element whenever it
    enlarges the exact rank.  First-found order, deterministic."""
    if e.is_zero():
        raise ValueError("zero element generates the zero module")
    algebra = e.algebra
    units = [(u, v) for u in range(1, algebra.m + 1)
             for v in range(1, algebra.m + 1) if u != v]
    space = PolynomialSpace(algebra.universe)
    basis = []
    queue = []
    if space.insert(e.poly):
        basis.append(e)
        queue.append(e)
    while queue:
        current = queue.pop(0)
        for unit in units:
            child = algebra.gl_act(unit, current)
            if child.is_zero():
                continue
            if space.insert(child.poly):
                basis.append(child)
                queue.append(child)
    return basis


# ---------------------------------------------------------------------------
# the named relations


def make_R222(n, m):
    """The determinant of the symmetric 3x3 matrix whose (i,j) entry is the
    rho symbol with index e_i + e_j (first three slots); degree 6, weight
    (2,2,2), and a phi-kernel element for every n."""
    if m < 3:
        raise ValueError("the symmetric determinant needs m >= 3, got m=%d"
                         % m)
    A = free_algebra(n, m)

    def entry(i, j):
        index = [0] * m
        index[i] += 1
        index[j] += 1
        return A.rho(index)

    a, b, c = entry(0, 0), entry(1, 1), entry(2, 2)
    d, f, g = entry(0, 1), entry(0, 2), entry(1, 2)
    return a * b * c - a * g * g - b * f * f - c * d * d + 2 * d * f * g


def make_R_n2(n, m):
    """pi_{n,0}rho_{0,2} - 2 pi_{n-1,1}rho_{1,1} + pi_{n-2,2}rho_{2,0}
    (indices padded with zeros to length m); degree n+2, weight (n,2)."""
    if m < 2:
        raise ValueError("need m >= 2, got m=%d" % m)
    if n < 3:
        raise ValueError("need n >= 3, got n=%d" % n)
    A = free_algebra(n, m)
    return (A.pi((n, 0)) * A.rho((0, 2))
            - 2 * A.pi((n - 1, 1)) * A.rho((1, 1))
            + A.pi((n - 2, 2)) * A.rho((2, 0)))


def make_R_2n2k(n, k, m):
    """The degree-2n relation of weight (2n-2k, 2k):

        (-1)^k (1/2) binom(2k,k) pi_{n-k,k}^2
      + sum_{j=0}^{k-1} (-1)^j binom(2k,j) pi_{n-j,j} pi_{n-2k+j,2k-j}
      - 4^k rho_{2,0}^{n-2k} (rho_{1,1}^2 - rho_{2,0}rho_{0,2})^k."""
    if m < 2:
        raise ValueError("need m >= 2, got m=%d" % m)
    if not 1 <= k <= n // 2:
        raise ValueError("k must lie in 1..%d, got %d" % (n // 2, k))
    A = free_algebra(n, m)
    middle = A.pi((n - k, k))
    total = (middle * middle).scale(Fraction((-1) ** k * comb(2 * k, k), 2))
    for j in range(k):
        total = total + ((-1) ** j * comb(2 * k, j)) \
            * A.pi((n - j, j)) * A.pi((n - 2 * k + j, 2 * k - j))
    r20 = A.rho((2, 0))
    r11 = A.rho((1, 1))
    r02 = A.rho((0, 2))
    disc = r11 * r11 - r20 * r02
    return total - (4 ** k) * (r20 ** (n - 2 * k)) * (disc ** k)


def lowering_family_Rn2(n, m):
    """The explicit weight ladder under E_{2,1} starting from the (n,2)
    relation: element j has weight (n-j, 2+j), j = 0..n-2, where
    element_{j+1} = E_{2,1}.element_j / (n-2-j).  The divisor runs over
    j = 0..n-3 only, so it never vanishes."""
    family = [make_R_n2(n, m)]
    for j in range(n - 2):
        nxt = gl_act((2, 1), family[-1]).scale(Fraction(1, n - 2 - j))
        family.append(nxt)
    return family
