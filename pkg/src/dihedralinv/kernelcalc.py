"""Exact verification engine for the presentation of the invariant ring.

Everything reduces to integer linear algebra on multigraded components, which
stay small because the multigrading is exploited everywhere: kernels of the
presentation map per multidegree (with transport along coordinate
permutations, so only weakly decreasing multidegrees are ever computed),
minimal generator counts via the graded Nakayama criterion, degree-truncated
ideal membership, verification of primary/secondary decompositions on the
invariant-ring side, and the GL-ideal generation check that compares a
truncated ideal against the kernel dimension by dimension.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import permutations

from .dihedral import (
    DihedralParams,
    all_multidegrees,
    cyclic_invariant_basis,
    cyclic_invariant_dimension,
    decreasing_multidegrees,
    invariant_basis,
    invariant_dimension,
    s_act_xy,
    xy_monomials,
)
from .exactpoly import (
    Polynomial,
    PolynomialSpace,
    nullspace_combinations,
    sorted_monomials,
    xy_universe,
)
from .freealgebra import FreeElement, free_algebra, phi, submodule_basis

DEFAULT_RESOURCE_CAP = 20000
RESOURCE_CAP_ENV = "DIHEDRALINV_RESOURCE_CAP"


class ResourceCapError(RuntimeError):
    """A component's monomial basis exceeds the configured size cap."""


def resolve_resource_cap(cap=None):
    if cap is not None:
        return int(cap)
    env = os.environ.get(RESOURCE_CAP_ENV)
    if env:
        return int(env)
    return DEFAULT_RESOURCE_CAP


def _guard(size, cap, what):
    if size > cap:
        raise ResourceCapError(
            "%s needs %d basis monomials, above the cap of %d "
            "(raise it via --resource-cap or %s)"
            % (what, size, cap, RESOURCE_CAP_ENV))


# ---------------------------------------------------------------------------
# coordinate-permutation bookkeeping


def apply_perm(perm, alpha):
    """The multidegree with entry i moved to slot perm[i] (1-based perm)."""
    out = [0] * len(alpha)
    for i, a in enumerate(alpha):
        out[perm[i] - 1] = a
    return tuple(out)


def sort_permutation(alpha):
    """(sorted_alpha, perm) with sorted_alpha weakly decreasing and
    apply_perm(perm, sorted_alpha) == alpha."""
    order = sorted(range(len(alpha)), key=lambda i: (-alpha[i], i))
    sorted_alpha = tuple(alpha[i] for i in order)
    perm = tuple(i + 1 for i in order)
    return sorted_alpha, perm


def orbit_size(alpha):
    """Number of distinct coordinate permutations of alpha."""
    from math import factorial

    counts = {}
    for a in alpha:
        counts[a] = counts.get(a, 0) + 1
    size = factorial(len(alpha))
    for c in counts.values():
        size //= factorial(c)
    return size


# ---------------------------------------------------------------------------
# kernel components


_kernel_cache = {}


def _kernel_basis_sorted(n, m, alpha, cap, reverse=False):
    """Kernel basis at a weakly decreasing multidegree, cached."""
    key = (n, m, alpha, reverse)
    hit = _kernel_cache.get(key)
    if hit is not None:
        return hit
    algebra = free_algebra(n, m)
    monos = algebra.monomials_of_weight(alpha, reverse=reverse)
    _guard(len(monos), cap, "kernel component %r of F(%d,%d)" % (alpha, n, m))
    columns = sorted_monomials(xy_monomials(m, alpha), 2 * m)
    _guard(len(columns), cap, "invariant component %r" % (alpha,))
    images = [algebra.phi_monomial(mo) for mo in monos]
    basis = []
    for combo in nullspace_combinations(images, columns=columns):
        poly = Polynomial(algebra.universe,
                          {monos[i]: c for i, c in combo.items()})
        basis.append(FreeElement(algebra, poly))
    _kernel_cache[key] = basis
    return basis


def kernel_basis_at(n, m, alpha, cap=None, reverse=False):
    """Kernel basis at an arbitrary multidegree, by permutation transport
    from the weakly decreasing representative."""
    cap = resolve_resource_cap(cap)
    alpha = tuple(int(a) for a in alpha)
    sorted_alpha, perm = sort_permutation(alpha)
    basis = _kernel_basis_sorted(n, m, sorted_alpha, cap, reverse=reverse)
    if alpha == sorted_alpha:
        return basis
    algebra = free_algebra(n, m)
    return [algebra.s_act(perm, e) for e in basis]


def kernel_component(n, m, degree_or_multidegree, resource_cap=None):
    """(dimension, basis) of the kernel of the presentation map in one
    multidegree, or aggregated over a whole total degree."""
    cap = resolve_resource_cap(resource_cap)
    if isinstance(degree_or_multidegree, int):
        basis = []
        for alpha in all_multidegrees(m, degree_or_multidegree):
            basis.extend(kernel_basis_at(n, m, alpha, cap))
        return len(basis), basis
    basis = kernel_basis_at(n, m, tuple(degree_or_multidegree), cap)
    return len(basis), basis


# ---------------------------------------------------------------------------
# minimal generators (graded Nakayama)


def _new_generator_count_at(n, m, alpha, cap, reverse=False):
    """dim ker_alpha - dim (F_+ . ker)_alpha at one weakly decreasing
    multidegree: the span of variable times lower-kernel elements, against
    the kernel itself."""
    algebra = free_algebra(n, m)
    kernel = _kernel_basis_sorted(n, m, alpha, cap, reverse=reverse)
    if not kernel:
        return 0
    columns = algebra.monomials_of_weight(alpha, reverse=reverse)
    space = PolynomialSpace(algebra.universe, columns=columns)
    for v in range(algebra.universe.nvars):
        w = algebra.universe.weight(v)
        beta = tuple(a - wi for a, wi in zip(alpha, w))
        if any(b < 0 for b in beta):
            continue
        var_poly = Polynomial.variable(algebra.universe, v)
        for e in kernel_basis_at(n, m, beta, cap, reverse=reverse):
            space.insert(e.poly * var_poly)
    return len(kernel) - space.rank


def minimal_generators_by_degree(n, m, D, resource_cap=None, reverse=False):
    """Number of minimal generators of the kernel ideal in each degree
    <= D (degrees with no new generators are omitted).  The reverse flag
    re-runs with the opposite monomial enumeration order; the result must
    not change."""
    cap = resolve_resource_cap(resource_cap)
    out = {}
    for d in range(D + 1):
        total = 0
        for alpha in decreasing_multidegrees(m, d):
            count = _new_generator_count_at(n, m, alpha, cap,
                                            reverse=reverse)
            if count:
                total += count * orbit_size(alpha)
        if total:
            out[d] = total
    return out


@dataclass
class KernelReport:
    """Per-degree kernel data: dimension, an explicit basis, and the number
    of minimal ideal generators appearing in that degree."""

    params: DihedralParams
    per_degree: dict


def kernel_report(n, m, D, resource_cap=None):
    cap = resolve_resource_cap(resource_cap)
    per_degree = {}
    for d in range(D + 1):
        dimension, basis = kernel_component(n, m, d, resource_cap=cap)
        new_gens = 0
        for alpha in decreasing_multidegrees(m, d):
            count = _new_generator_count_at(n, m, alpha, cap)
            if count:
                new_gens += count * orbit_size(alpha)
        per_degree[d] = {
            "dimension": dimension,
            "basis": basis,
            "new_generators": new_gens,
        }
    return KernelReport(DihedralParams(n, m), per_degree)


# ---------------------------------------------------------------------------
# truncated ideals


class TruncatedIdeal:
    """The ideal generated by multihomogeneous elements of F(n,m), seen
    degree by degree up to a cap: the multidegree-alpha slice is spanned by
    generator times monomial products landing in that slice."""

    def __init__(self, generators, degree_cap, resource_cap=None):
        generators = list(generators)
        if not generators:
            self.algebra = None
        else:
            self.algebra = generators[0].algebra
            for g in generators:
                if g.algebra is not self.algebra:
                    raise ValueError("generators from different algebras")
                if g.is_zero() or g.weight() is None:
                    raise ValueError(
                        "ideal generators must be nonzero and "
                        "multihomogeneous, got %r" % (g,))
        self.generators = generators
        self.degree_cap = int(degree_cap)
        self.resource_cap = resolve_resource_cap(resource_cap)
        self._spaces = {}

    def spanning_polys(self, alpha):
        """The generating rows of the alpha slice."""
        alpha = tuple(alpha)
        out = []
        if self.algebra is None:
            return out
        algebra = self.algebra
        for g in self.generators:
            w = g.weight()
            delta = tuple(a - wi for a, wi in zip(alpha, w))
            if any(x < 0 for x in delta):
                continue
            for mono in algebra.monomials_of_weight(delta):
                out.append(g.poly * Polynomial.from_monomial(
                    algebra.universe, mono))
        return out

    def _space(self, alpha):
        alpha = tuple(alpha)
        hit = self._spaces.get(alpha)
        if hit is not None:
            return hit
        if self.algebra is None:
            raise ValueError("empty ideal has no components")
        columns = self.algebra.monomials_of_weight(alpha)
        _guard(len(columns), self.resource_cap,
               "ideal slice %r" % (alpha,))
        space = PolynomialSpace(self.algebra.universe, columns=columns)
        for row in self.spanning_polys(alpha):
            space.insert(row)
        self._spaces[alpha] = space
        return space

    def component_dimension(self, alpha):
        if self.algebra is None:
            return 0
        return self._space(alpha).rank

    def contains(self, e):
        """Membership of an element of degree <= the cap; non-multihomogeneous
        elements are tested slice by slice."""
        if e.is_zero():
            return True
        if e.degree() > self.degree_cap:
            raise ValueError(
                "element degree %d exceeds the ideal truncation %d"
                % (e.degree(), self.degree_cap))
        if self.algebra is None:
            return False
        if e.algebra is not self.algebra:
            raise ValueError("element belongs to a different algebra")
        slices = {}
        for mono, c in e.poly.terms.items():
            alpha = mono.multidegree(self.algebra.universe)
            slices.setdefault(alpha, {})[mono] = c
        return all(
            self._space(alpha).contains(
                Polynomial(self.algebra.universe, terms))
            for alpha, terms in slices.items())


def truncated_membership(ideal, e):
    """True iff e lies in the degree-truncated ideal (error above the cap)."""
    return ideal.contains(e)


# ---------------------------------------------------------------------------
# primary/secondary verification


@dataclass
class HironakaSpec:
    """Primaries (a homogeneous system of parameters, as elements of the
    free algebra) plus rows (multidegree, elements) whose coordinate-
    permutation closure is the claimed free-module generating set."""

    primaries: list
    secondaries_S: list


@dataclass
class HironakaReport:
    independence: bool
    hilbert_match: bool
    spanning: bool
    lstar_size: int
    components_checked: int
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.independence and self.hilbert_match and self.spanning


def _expand_lstar(secondaries, m):
    """Close the rows under coordinate permutations: for each row, one
    transported copy per distinct permuted multidegree (lexicographically
    first permutation wins), with exact duplicates dropped."""
    by_beta = {}
    order = []
    for alpha, elems in secondaries:
        alpha = tuple(alpha)
        for f in elems:
            if f.multidegree() != alpha:
                raise ValueError(
                    "secondary %s declared at %r has multidegree %r"
                    % (f, alpha, f.multidegree()))
        seen_beta = set()
        for perm in permutations(range(1, m + 1)):
            beta = apply_perm(perm, alpha)
            if beta in seen_beta:
                continue
            seen_beta.add(beta)
            bucket = by_beta.setdefault(beta, [])
            for f in elems:
                g = s_act_xy(perm, f)
                if g not in bucket:
                    bucket.append(g)
                    order.append((beta, g))
    return order, by_beta


def verify_hironaka_xy(primaries, secondaries, params, D, model="dihedral",
                       resource_cap=None):
    """Check a primary/secondary decomposition directly on the invariant
    ring: per weakly decreasing multidegree through total degree D, the
    secondaries must stay independent modulo the primary ideal
    (`independence`) and together with it span the invariant component
    (`spanning`); globally, the free-module Hilbert series
    sum_s t^deg(s) / prod_i (1 - t^deg(h_i)) must reproduce every invariant
    dimension (`hilbert_match`).

    `model` picks the group: "dihedral" or "cyclic" (the index-2 rotation
    subgroup).  Primaries and secondaries are polynomials in the coordinate
    ring; rows are closed under coordinate permutations first."""
    cap = resolve_resource_cap(resource_cap)
    if model == "dihedral":
        dim_fn, basis_fn = invariant_dimension, invariant_basis
    elif model == "cyclic":
        dim_fn, basis_fn = cyclic_invariant_dimension, cyclic_invariant_basis
    else:
        raise ValueError("unknown model %r" % (model,))
    m = params.m
    universe = xy_universe(m)
    weights = []
    for h in primaries:
        w = h.multidegree()
        if w is None or h.is_zero():
            raise ValueError("primaries must be nonzero multihomogeneous")
        weights.append(w)
    lstar, by_beta = _expand_lstar(secondaries, m)
    failures = []
    independence = True
    spanning = True
    checked = 0
    for t in range(D + 1):
        for alpha in decreasing_multidegrees(m, t):
            checked += 1
            columns = sorted_monomials(xy_monomials(m, alpha), 2 * m)
            _guard(len(columns), cap, "invariant component %r" % (alpha,))
            space = PolynomialSpace(universe, columns=columns)
            for h, w in zip(primaries, weights):
                beta = tuple(a - wi for a, wi in zip(alpha, w))
                if any(b < 0 for b in beta):
                    continue
                for b in basis_fn(params, beta):
                    space.insert(h * b)
            for f in by_beta.get(alpha, ()):
                if not space.insert(f):
                    independence = False
                    failures.append(
                        "secondary at %r depends on the primary ideal and "
                        "earlier secondaries" % (alpha,))
            want = dim_fn(params, alpha)
            if space.rank != want:
                spanning = False
                failures.append(
                    "component %r: primaries+secondaries span %d of %d"
                    % (alpha, space.rank, want))
    hilbert_match = _hilbert_series_check(weights, lstar, params, D, dim_fn,
                                          failures)
    return HironakaReport(independence, hilbert_match, spanning,
                          len(lstar), checked, failures)


def _hilbert_series_check(primary_weights, lstar, params, D, dim_fn,
                          failures):
    """Multigraded series identity: convolve the secondary multidegree
    counts with one geometric series per primary, then compare against the
    invariant dimensions through total degree D."""
    m = params.m
    series = {}
    for beta, _ in lstar:
        if sum(beta) <= D:
            series[beta] = series.get(beta, 0) + 1
    grid = [alpha for t in range(D + 1) for alpha in all_multidegrees(m, t)]
    for w in primary_weights:
        for alpha in grid:  # increasing total degree: the DP recurrence
            prev = tuple(a - wi for a, wi in zip(alpha, w))
            if any(x < 0 for x in prev):
                continue
            carry = series.get(prev, 0)
            if carry:
                series[alpha] = series.get(alpha, 0) + carry
    ok = True
    for alpha in grid:
        want = dim_fn(params, alpha)
        got = series.get(alpha, 0)
        if got != want:
            ok = False
            failures.append(
                "series coefficient at %r is %d, invariant dimension is %d"
                % (alpha, got, want))
    return ok


def verify_hironaka(spec, params, D, model="dihedral", resource_cap=None):
    """Map a free-algebra decomposition claim through the presentation and
    verify it on the invariant ring."""
    primaries = [phi(h) for h in spec.primaries]
    secondaries = [(tuple(alpha), [phi(f) for f in elems])
                   for alpha, elems in spec.secondaries_S]
    return verify_hironaka_xy(primaries, secondaries, params, D,
                              model=model, resource_cap=resource_cap)


# ---------------------------------------------------------------------------
# built-in decomposition tables


def primary_elements(n, m):
    """The standard parameter system as free-algebra symbols: the degree-n
    symbol and the quadratic symbol concentrated on each slot."""
    A = free_algebra(n, m)
    out = []
    for i in range(m):
        index = [0] * m
        index[i] = n
        out.append(A.pi(index))
    for i in range(m):
        index = [0] * m
        index[i] = 2
        out.append(A.rho(index))
    return out


def secondary_table_m2(n):
    """The two-vector free-module table: powers of the mixed quadratic plus
    the mixed degree-n symbols."""
    A = free_algebra(n, 2)
    rows = [((j, j), [A.rho((1, 1)) ** j]) for j in range(n + 1)]
    rows += [((n - i, i), [A.pi((n - i, i))]) for i in range(1, n)]
    return HironakaSpec(primary_elements(n, 2), rows)


def secondary_table_n4_m3():
    """The 13-row table of free-module generators for four-fold rotations on
    three vectors (weakly decreasing multidegrees; 18 elements)."""
    A = free_algebra(4, 3)
    r110 = A.rho((1, 1, 0))
    r101 = A.rho((1, 0, 1))
    r011 = A.rho((0, 1, 1))
    rows = [
        ((0, 0, 0), [A.one()]),
        ((1, 1, 0), [r110]),
        ((2, 1, 1), [A.pi((2, 1, 1)), r110 * r101]),
        ((2, 2, 0), [A.pi((2, 2, 0)), r110 * r110]),
        ((3, 1, 0), [A.pi((3, 1, 0))]),
        ((3, 2, 1), [A.pi((3, 1, 0)) * r011, r110 * r110 * r101]),
        ((3, 3, 0), [r110 ** 3]),
        ((4, 1, 1), [A.pi((3, 1, 0)) * r101]),
        ((3, 3, 2), [A.pi((2, 1, 1)) * A.pi((1, 2, 1)),
                     A.pi((3, 1, 0)) * r011 * r011]),
        ((4, 2, 2), [A.pi((3, 1, 0)) * r101 * r011,
                     r110 * r110 * r101 * r101]),
        ((4, 3, 1), [r110 ** 3 * r101]),
        ((4, 4, 0), [r110 ** 4]),
        ((4, 3, 3), [A.pi((3, 1, 0)) * r101 * r011 * r011]),
    ]
    return HironakaSpec(primary_elements(4, 3), rows)


def cyclic_table_n4_m3():
    """The 15-row monomial table of free-module generators for the rotation
    subgroup on three vectors (36 monomials), plus the primary images.
    Returns (primaries, rows) on the coordinate-ring side."""
    from .exactpoly import parse_polynomial

    U = xy_universe(3)

    def mono(text):
        return parse_polynomial(text, U)

    rows = [
        ((0, 0, 0), ["1"]),
        ((1, 1, 0), ["x1*y2", "y1*x2"]),
        ((2, 1, 1), ["x1^2*x2*x3", "y1^2*y2*y3", "x1^2*y2*y3", "y1^2*x2*x3"]),
        ((2, 2, 0), ["x1^2*x2^2", "y1^2*y2^2", "x1^2*y2^2", "y1^2*x2^2"]),
        ((3, 1, 0), ["x1^3*x2", "y1^3*y2"]),
        ((4, 0, 0), ["x1^4"]),
        ((3, 2, 1), ["x1^3*y2^2*y3", "y1^3*x2^2*x3", "x1^3*x2^2*y3",
                     "y1^3*y2^2*x3"]),
        ((3, 3, 0), ["x1^3*y2^3", "y1^3*x2^3"]),
        ((4, 1, 1), ["x1^4*x2*y3", "x1^4*y2*x3"]),
        ((3, 3, 2), ["x1^3*x2^3*x3^2", "y1^3*y2^3*y3^2", "x1^3*x2^3*y3^2",
                     "y1^3*y2^3*x3^2"]),
        ((4, 2, 2), ["x1^4*x2^2*x3^2", "x1^4*y2^2*y3^2", "x1^4*x2^2*y3^2",
                     "x1^4*y2^2*x3^2"]),
        ((4, 3, 1), ["x1^4*x2^3*x3", "x1^4*y2^3*y3"]),
        ((4, 4, 0), ["x1^4*x2^4"]),
        ((4, 3, 3), ["x1^4*x2^3*y3^3", "x1^4*y2^3*x3^3"]),
        ((4, 4, 4), ["x1^4*x2^4*x3^4"]),
    ]
    primaries = [phi(h) for h in primary_elements(4, 3)]
    return primaries, [(alpha, [mono(s) for s in texts])
                       for alpha, texts in rows]


# ---------------------------------------------------------------------------
# spanning check: monomial lifts + two ideals cover the free algebra


def furnish_check(T, H_gens, K_gens, params, d, resource_cap=None):
    """True iff, in every multidegree of total degree <= d, the component of
    the free algebra is spanned by the T-elements of that multidegree plus
    the degree-truncated ideals generated by H_gens and K_gens.  All three
    families must be stable under coordinate permutations (as spans), so
    only weakly decreasing multidegrees are checked."""
    cap = resolve_resource_cap(resource_cap)
    algebra = free_algebra(params.n, params.m)
    for e in list(T) + list(H_gens) + list(K_gens):
        if e.algebra is not algebra:
            raise ValueError("element from the wrong algebra: %r" % (e,))
    h_ideal = TruncatedIdeal(H_gens, d, cap) if H_gens else None
    k_ideal = TruncatedIdeal(K_gens, d, cap) if K_gens else None
    by_weight = {}
    for e in T:
        w = e.weight()
        if w is None:
            raise ValueError("T-elements must be multihomogeneous")
        by_weight.setdefault(w, []).append(e)
    for t in range(d + 1):
        for alpha in decreasing_multidegrees(params.m, t):
            columns = algebra.monomials_of_weight(alpha)
            if not columns:
                continue
            _guard(len(columns), cap, "free component %r" % (alpha,))
            space = PolynomialSpace(algebra.universe, columns=columns)
            for e in by_weight.get(alpha, ()):
                space.insert(e.poly)
            for ideal in (h_ideal, k_ideal):
                if ideal is None:
                    continue
                for row in ideal.spanning_polys(alpha):
                    space.insert(row)
                    if space.rank == len(columns):
                        break
                if space.rank == len(columns):
                    break
            if space.rank != len(columns):
                return False
    return True


# ---------------------------------------------------------------------------
# GL-ideal generation


def gl_generation_report(n, m, generator_hwvs, D, resource_cap=None):
    """Expand each claimed generator to a basis of its GL-submodule, build
    the truncated ideal, and compare its slice dimensions with the kernel's
    in every weakly decreasing multidegree of total degree <= D.  Returns
    (ok, rows) where rows aggregate both dimensions per total degree."""
    cap = resolve_resource_cap(resource_cap)
    expanded = []
    for g in generator_hwvs:
        if not phi(g).is_zero():
            return False, [{"degree": g.degree(),
                            "ideal_dim": -1, "kernel_dim": -1,
                            "note": "generator not in the kernel"}]
        expanded.extend(submodule_basis(g))
    ideal = TruncatedIdeal(expanded, D, cap)
    ok = True
    rows = []
    for t in range(D + 1):
        ideal_total = 0
        kernel_total = 0
        for alpha in decreasing_multidegrees(m, t):
            kdim = len(kernel_basis_at(n, m, alpha, cap))
            idim = ideal.component_dimension(alpha)
            if idim != kdim:
                ok = False
            size = orbit_size(alpha)
            ideal_total += idim * size
            kernel_total += kdim * size
        rows.append({"degree": t, "ideal_dim": ideal_total,
                     "kernel_dim": kernel_total})
    return ok, rows


def verify_gl_generation(n, m, generator_hwvs, D, resource_cap=None):
    """True iff the GL-ideal generated by the given kernel elements equals
    the full kernel of the presentation in every degree <= D (containment
    is certified by evaluating the presentation map on the generators,
    equality per multidegree by dimension count)."""
    ok, _ = gl_generation_report(n, m, generator_hwvs, D,
                                 resource_cap=resource_cap)
    return ok
