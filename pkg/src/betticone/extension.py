"""Cohomology tables of an extension under consecutive cancellations.

A short exact sequence 0 -> A -> E -> B -> 0 pins gamma(E) between the split
sum and whatever the connecting maps H^i(B(j)) -> H^{i+1}(A(j)) cancel.  Each
candidate pattern of connecting-map ranks produces one table; the feasible
ones are those the greedy decomposition accepts as cone members, and they
form the integer points of a polytope.
"""

from fractions import Fraction
from itertools import product
from math import floor, prod

from .coh_decomposition import decompose_cohomology
from .errors import BoundViolation, BudgetExceeded, DimensionMismatch, NotInCone
from .tables import CohomologyTable


def cancellation_bounds(A, B):
    """Rank caps min(gamma_i(B)(j), gamma_{i+1}(A)(j)) for the connecting maps."""
    if A.n != B.n:
        raise DimensionMismatch(f"n {A.n} != {B.n}")
    lo = min(A.window[0], B.window[0])
    hi = max(A.window[1], B.window[1])
    bounds = {}
    for i in range(A.n):
        for j in range(lo, hi + 1):
            cap = min(B.value(i, j), A.value(i + 1, j))
            if cap > 0:
                bounds[(i, j)] = cap
    return bounds


def apply_cancellation(A, B, pattern):
    """Table of the extension whose connecting maps have the given ranks.

    Row i at twist j loses c_{i-1,j} + c_{i,j} from the split value; the
    Euler polynomial is untouched because cancellations are chi-neutral.
    """
    bounds = cancellation_bounds(A, B)
    for (i, j), v in sorted(pattern.items()):
        if v < 0 or v > bounds.get((i, j), 0):
            raise BoundViolation(i, j, v, bounds.get((i, j), Fraction(0)))
    lo = min(A.window[0], B.window[0])
    hi = max(A.window[1], B.window[1])
    entries = {}
    for i in range(A.n + 1):
        for j in range(lo, hi + 1):
            v = (A.value(i, j) + B.value(i, j)
                 - pattern.get((i - 1, j), 0) - pattern.get((i, j), 0))
            assert v >= 0  # guaranteed by the rank bounds
            if v != 0:
                entries[(i, j)] = v
    chi = tuple(a + b for a, b in zip(A.chi, B.chi))
    return CohomologyTable(A.n, (lo, hi), entries, chi)


def _serre_orbits(support, n, shift):
    # Pair (i, j) with (n-1-i, -n-1-j+shift); orbits sharing one rank value.
    seen = set()
    orbits = []
    for key in sorted(support):
        if key in seen:
            continue
        i, j = key
        mirror = (n - 1 - i, -n - 1 - j + shift)
        orbit = sorted({key, mirror} & set(support))
        forced_zero = mirror not in support and mirror != key
        seen.update(orbit)
        orbits.append((orbit, forced_zero))
    return orbits


def enumerate_patterns(A, B, mode="full", budget=10 ** 6, serre_shift=0):
    """All candidate integer patterns within the rank bounds, lex ordered.

    ``mode`` is "full" (every integer point of the bound box) or
    "serre-symmetric" (ranks constant on twist pairs mirrored by the
    involution (i, j) <-> (n-1-i, -n-1-j+shift)).  Enumerations larger than
    ``budget`` raise BudgetExceeded before any work is done.
    """
    if mode not in ("full", "serre-symmetric"):
        raise ValueError(f"unknown mode {mode!r}")
    bounds = cancellation_bounds(A, B)
    support = sorted(bounds)
    caps = {key: floor(bounds[key]) for key in support}
    if mode == "full":
        groups = [([key], caps[key]) for key in support]
    else:
        groups = []
        for orbit, forced_zero in _serre_orbits(support, A.n, serre_shift):
            cap = 0 if forced_zero else min(caps[key] for key in orbit)
            groups.append((orbit, cap))
    volume = prod(cap + 1 for _, cap in groups)
    if volume > budget:
        raise BudgetExceeded(f"{volume} candidate patterns exceed budget {budget}")
    patterns = []
    for values in product(*(range(cap + 1) for _, cap in groups)):
        pattern = {}
        for (orbit, _), v in zip(groups, values):
            if v:
                for key in orbit:
                    pattern[key] = v
        patterns.append(pattern)
    patterns.sort(key=lambda p: _vector(p, support))
    return patterns


def feasible_set(A, B, mode="full", budget=10 ** 6, serre_shift=0):
    """Candidate patterns whose extension table stays inside the cone.

    Returns (pattern, table) pairs sorted by the pattern's value vector over
    the bound support; membership is decided by the greedy decomposition.
    """
    support = sorted(cancellation_bounds(A, B))
    results = []
    for pattern in enumerate_patterns(A, B, mode, budget, serre_shift):
        table = apply_cancellation(A, B, pattern)
        try:
            decompose_cohomology(table)
        except NotInCone:
            continue
        results.append((pattern, table))
    results.sort(key=lambda pair: _vector(pair[0], support))
    return results


def _vector(pattern, support):
    return tuple(pattern.get(key, 0) for key in support)


def polytope_vertices(patterns, support):
    """Extreme points of the convex hull of the given integer patterns."""
    vectors = [tuple(Fraction(v) for v in _vector(p, support)) for p in patterns]
    vertices = []
    for k, vec in enumerate(vectors):
        others = vectors[:k] + vectors[k + 1:]
        if not _in_hull(vec, others):
            vertices.append(patterns[k])
    return vertices


def _in_hull(x, points):
    """Exact membership of x in the convex hull of points (phase-I simplex)."""
    if not points:
        return False
    d = len(x)
    rows = d + 1
    m = len(points)
    # Constraints: sum lambda_s * points[s] = x and sum lambda_s = 1.
    A = [[Fraction(p[k]) for p in points] for k in range(d)]
    A.append([Fraction(1)] * m)
    b = [Fraction(v) for v in x] + [Fraction(1)]
    for r in range(rows):
        if b[r] < 0:
            A[r] = [-a for a in A[r]]
            b[r] = -b[r]
    # Tableau with one artificial variable per row; minimize their sum.
    width = m + rows
    tableau = [A[r] + [Fraction(int(r == s)) for s in range(rows)] + [b[r]]
               for r in range(rows)]
    basis = [m + r for r in range(rows)]
    cost = [sum(tableau[r][c] for r in range(rows)) for c in range(width)]
    for r in range(rows):
        cost[m + r] -= 1
    objective = sum(b)
    while True:
        entering = next((c for c in range(width) if cost[c] > 0), None)
        if entering is None:
            break
        pivot_row = None
        best = None
        for r in range(rows):
            a = tableau[r][entering]
            if a > 0:
                ratio = tableau[r][-1] / a
                if best is None or ratio < best or (ratio == best
                                                    and basis[r] < basis[pivot_row]):
                    best, pivot_row = ratio, r
        if pivot_row is None:
            break  # unbounded cannot happen for this bounded program
        pivot = tableau[pivot_row][entering]
        tableau[pivot_row] = [a / pivot for a in tableau[pivot_row]]
        for r in range(rows):
            if r != pivot_row and tableau[r][entering] != 0:
                f = tableau[r][entering]
                tableau[r] = [a - f * p for a, p in zip(tableau[r], tableau[pivot_row])]
        f = cost[entering]
        cost = [a - f * p for a, p in zip(cost, tableau[pivot_row][:-1])]
        objective -= f * tableau[pivot_row][-1]
        basis[pivot_row] = entering
    return objective == 0
