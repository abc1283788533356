"""Partition combinatorics and GL_m-module bookkeeping.

Everything here is exact integer combinatorics: Kostka numbers by semistandard
tableau enumeration, Schur module dimensions, Pieri products, the plethysm
identities for symmetric powers of the quadratic and degree-n generator
spaces, and the graded multiplicity table of the dihedral invariant ring.
The linear-algebra modules verify their kernels against these tables, so this
module deliberately shares no code with them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .exactpoly import compositions


# ---------------------------------------------------------------------------
# partitions


def normalize_partition(lam):
    """Canonical form: tuple of weakly decreasing positive parts (trailing
    zeros stripped).  Errors on negative or increasing data."""
    lam = tuple(int(p) for p in lam)
    for p in lam:
        if p < 0:
            raise ValueError("negative part in partition %r" % (lam,))
    for a, b in zip(lam, lam[1:]):
        if b > a:
            raise ValueError("parts not weakly decreasing: %r" % (lam,))
    return tuple(p for p in lam if p)


def partitions(d, max_height=None):
    """All partitions of d (optionally with at most max_height parts), in
    descending lexicographic order."""
    if d < 0:
        return
    if max_height is None:
        max_height = d

    def rec(remaining, biggest, slots):
        if not remaining:
            yield ()
            return
        if not slots:
            return
        top = min(remaining, biggest)
        for first in range(top, 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    if d == 0:
        yield ()
        return
    yield from rec(d, d, max_height)


def height(lam):
    return len(normalize_partition(lam))


# ---------------------------------------------------------------------------
# Kostka numbers and Schur dimensions


def kostka(lam, alpha):
    """Number of semistandard tableaux of shape lam and content alpha,
    counted by direct cell-by-cell backtracking."""
    lam = normalize_partition(lam)
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValueError("negative content entry in %r" % (alpha,))
    if sum(lam) != sum(alpha):
        raise ValueError("shape size %d != content size %d"
                         % (sum(lam), sum(alpha)))
    if not lam:
        return 1
    nsym = len(alpha)
    if len(lam) > nsym:
        return 0
    rows = len(lam)
    remaining = list(alpha)
    # tableau[r] holds the filled values of row r
    tableau = [[] for _ in range(rows)]

    def fill(r, c):
        if r == rows:
            return 1
        nr, nc = (r, c + 1) if c + 1 < lam[r] else (r + 1, 0)
        lo = r  # 0-based symbol index; column-strictness forces symbol >= row
        if c > 0:
            lo = max(lo, tableau[r][c - 1])
        if r > 0:
            lo = max(lo, tableau[r - 1][c] + 1)
        total = 0
        for v in range(lo, nsym):
            if not remaining[v]:
                continue
            remaining[v] -= 1
            tableau[r].append(v)
            total += fill(nr, nc)
            tableau[r].pop()
            remaining[v] += 1
        return total

    return fill(0, 0)


@lru_cache(maxsize=None)
def _schur_dim_cached(lam, m):
    if len(lam) > m:
        return 0
    if not lam:
        return 1
    return sum(kostka(lam, alpha) for alpha in compositions(sum(lam), m))


def schur_dim(lam, m):
    """Dimension of the irreducible polynomial GL_m module labeled by the
    partition lam: zero when the height exceeds m, else the sum of Kostka
    numbers over all contents of length m."""
    return _schur_dim_cached(normalize_partition(lam), int(m))


def weyl_dim(lam, m):
    """The same dimension by the Weyl product formula
    prod_{i<j} (lam_i - lam_j + j - i)/(j - i); independent cross-check for
    the Kostka-sum route."""
    lam = normalize_partition(lam)
    m = int(m)
    if len(lam) > m:
        return 0
    full = lam + (0,) * (m - len(lam))
    value = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            value *= Fraction(full[i] - full[j] + j - i, j - i)
    assert value.denominator == 1
    return int(value)


# ---------------------------------------------------------------------------
# decomposition reports


def _sort_key(lam):
    return (len(lam), tuple(-p for p in lam))


class DecompositionReport:
    """A nonnegative integer combination of irreducible GL_m modules.

    Partitions of height exceeding m are dropped at construction (the
    corresponding module is zero); multiplicities must be positive.
    Reports support + and -, the latter erroring on any negative result."""

    __slots__ = ("m", "entries")

    def __init__(self, m, entries=None):
        self.m = int(m)
        table = {}
        for lam, mult in (entries or {}).items():
            lam = normalize_partition(lam)
            mult = int(mult)
            if mult < 0:
                raise ValueError("negative multiplicity %d for %r"
                                 % (mult, lam))
            if mult and len(lam) <= self.m:
                table[lam] = table.get(lam, 0) + mult
        self.entries = table

    def multiplicity(self, lam):
        return self.entries.get(normalize_partition(lam), 0)

    def items(self):
        """Deterministic iteration: by height, then descending lex."""
        return sorted(self.entries.items(), key=lambda kv: _sort_key(kv[0]))

    def __bool__(self):
        return bool(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return (isinstance(other, DecompositionReport)
                and self.m == other.m and self.entries == other.entries)

    def __add__(self, other):
        if self.m != other.m:
            raise ValueError("mixed ambient dimensions %d vs %d"
                             % (self.m, other.m))
        merged = dict(self.entries)
        for lam, mult in other.entries.items():
            merged[lam] = merged.get(lam, 0) + mult
        return DecompositionReport(self.m, merged)

    def __sub__(self, other):
        if self.m != other.m:
            raise ValueError("mixed ambient dimensions %d vs %d"
                             % (self.m, other.m))
        merged = dict(self.entries)
        for lam, mult in other.entries.items():
            value = merged.get(lam, 0) - mult
            if value < 0:
                raise ValueError(
                    "negative multiplicity %d for %r in difference"
                    % (value, lam))
            if value:
                merged[lam] = value
            else:
                merged.pop(lam, None)
        return DecompositionReport(self.m, merged)

    def total_dim(self):
        """Dimension of the underlying vector space."""
        return sum(mult * schur_dim(lam, self.m)
                   for lam, mult in self.entries.items())

    def to_rows(self):
        return [{"partition": list(lam), "multiplicity": mult}
                for lam, mult in self.items()]

    def __str__(self):
        if not self.entries:
            return "0"
        parts = []
        for lam, mult in self.items():
            name = "S(%s)" % ",".join(str(p) for p in lam)
            parts.append(name if mult == 1 else "%d*%s" % (mult, name))
        return " + ".join(parts)

    def __repr__(self):
        return "DecompositionReport(m=%d, %s)" % (self.m, str(self))


# ---------------------------------------------------------------------------
# Pieri products and the symmetric-power identities


def pieri_row(lam, k, m):
    """Decomposition of S^lam tensor S^(k): one copy of every mu obtained
    from lam by adding a horizontal strip of k cells, height capped at m."""
    lam = normalize_partition(lam)
    k = int(k)
    if k < 0:
        raise ValueError("strip size must be nonnegative")
    if k == 0:
        return DecompositionReport(m, {lam: 1})
    if not lam:
        return DecompositionReport(m, {(k,): 1})
    rows = len(lam)
    out = {}
    current = []

    def place(i, left):
        # choose mu_i >= lam_i for row i; the strip condition caps mu_i at
        # lam_{i-1}, and one fresh row of at most lam_{rows-1} cells may be
        # appended at the bottom
        if i == rows:
            if left == 0:
                mu = tuple(current)
                out[mu] = out.get(mu, 0) + 1
            elif left <= lam[rows - 1]:
                mu = tuple(current) + (left,)
                out[mu] = out.get(mu, 0) + 1
            return
        hi = lam[i] + left if i == 0 else min(lam[i - 1], lam[i] + left)
        for mu_i in range(lam[i], hi + 1):
            current.append(mu_i)
            place(i + 1, left - (mu_i - lam[i]))
            current.pop()

    place(0, k)
    return DecompositionReport(m, out)


def symd_of_sym2(d, m):
    """Decomposition of the d-th symmetric power of the space of quadratic
    forms in m variables: one copy of S^(2 lam) for every partition lam of d
    with at most m parts."""
    return DecompositionReport(
        m, {tuple(2 * p for p in lam): 1 for lam in partitions(d, m)})


def sym2_of_symn(n, m):
    """Decomposition of the symmetric square of the degree-n binary-form
    space: S^(2n-2j, 2j) for j = 0..n//2."""
    return DecompositionReport(
        m, {(2 * n - 2 * j, 2 * j) if j else (2 * n,): 1
            for j in range(n // 2 + 1)})


def dbar_truncated(m, D):
    """Graded decomposition, through total degree D, of the subalgebra
    generated by the fully polarized quadratic invariants: in each even
    degree 2d one copy of S^(2 lam) for every lam of d with height <= 2."""
    table = {}
    for t in range(D + 1):
        if t % 2:
            table[t] = DecompositionReport(m, {})
        else:
            table[t] = DecompositionReport(
                m, {tuple(2 * p for p in lam): 1
                    for lam in partitions(t // 2, 2)})
    return table


# ---------------------------------------------------------------------------
# the dihedral invariant multiplicity table


def hilbert_h(n, d):
    """Coefficient of t^d in 1/((1-t^2)(1-t^n)): the number of ways to write
    d = 2a + n*b with a, b >= 0."""
    n = int(n)
    d = int(d)
    if d < 0:
        return 0
    count = 0
    for b in range(d // n + 1):
        if (d - n * b) % 2 == 0:
            count += 1
    return count


def invariant_multiplicity(lam, n):
    """Multiplicity of S^lam in the vector invariant ring of the dihedral
    group of order 2n: zero for height > 2, else h(lam1-lam2) when lam2 is
    even and h(lam1-lam2-n) when lam2 is odd."""
    lam = normalize_partition(lam)
    if len(lam) > 2:
        return 0
    l1 = lam[0] if lam else 0
    l2 = lam[1] if len(lam) > 1 else 0
    if l2 % 2 == 0:
        return hilbert_h(n, l1 - l2)
    return hilbert_h(n, l1 - l2 - n)


def invariants_truncated(n, m, D):
    """Graded multiplicity table of the dihedral vector invariant ring,
    through total degree D, as GL_m decompositions."""
    table = {}
    for t in range(D + 1):
        entries = {}
        for lam in partitions(t, 2):
            mult = invariant_multiplicity(lam, n)
            if mult:
                entries[lam] = mult
        table[t] = DecompositionReport(m, entries)
    return table


# ---------------------------------------------------------------------------
# the ambient algebra and the reduced kernel


def ambient_truncated(n, m, D=None):
    """Graded decomposition, through total degree D <= 2n+2, of the reduced
    presentation's domain: the quadratic-generator subalgebra tensored with
    the span of products of at most two degree-n generators.

    Per total degree t this contributes: the even-degree quadratic part; for
    t >= n with t-n even, one degree-n factor times the quadratic part of
    degree t-n (a Pieri product); at t = 2n the symmetric square of the
    degree-n space; and at t = 2n+2 that square times one quadratic factor."""
    n = int(n)
    m = int(m)
    if D is None:
        D = 2 * n + 2
    if D > 2 * n + 2:
        raise ValueError("decomposition formula only covers degree <= 2n+2 "
                         "(asked for %d > %d)" % (D, 2 * n + 2))
    table = {t: DecompositionReport(m, {}) for t in range(D + 1)}
    dbar = dbar_truncated(m, D)
    for t in range(D + 1):
        if t % 2 == 0:
            table[t] = table[t] + dbar[t]
        if t >= n and (t - n) % 2 == 0:
            for lam in partitions((t - n) // 2, 2):
                lam2 = tuple(2 * p for p in lam)
                table[t] = table[t] + pieri_row(lam2, n, m)
        if t == 2 * n:
            table[t] = table[t] + sym2_of_symn(n, m)
        if t == 2 * n + 2:
            total = DecompositionReport(m, {})
            for lam, mult in sym2_of_symn(n, m).items():
                row = pieri_row(lam, 2, m)
                for _ in range(mult):
                    total = total + row
            table[t] = table[t] + total
    return table


def kernel_decomposition(n, m, D=None):
    """Graded GL_m decomposition of the reduced presentation's kernel:
    the ambient table minus the invariant-ring table, degree by degree.
    A negative multiplicity in the difference raises (it would mean one of
    the two tables is wrong)."""
    if D is None:
        D = 2 * n + 2
    ambient = ambient_truncated(n, m, D)
    invariants = invariants_truncated(n, m, D)
    return {t: ambient[t] - invariants[t] for t in range(D + 1)}


def cauchy_dim(m, d):
    """Dimension of the degree-d part of the coordinate ring of m plane
    vectors, binom(2m+d-1, d); the Cauchy identity check compares this with
    a sum of products of Schur dimensions."""
    return comb(2 * m + d - 1, d)
