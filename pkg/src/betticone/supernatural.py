"""Supernatural cohomology tables on P^n and root-sequence bookkeeping.

A supernatural table concentrates all cohomology in one row per twist: row i
is supported exactly on f_{i+1} < j < f_i for a strictly decreasing root
sequence f_1 > ... > f_n (with f_0 = +inf, f_{n+1} = -inf), and the entry is
|prod_k (j - f_k)| / n! times the multiplicity.  These are the extremal rays
of the cone of vector-bundle cohomology tables.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import NotStaircase, WindowTooSmall
from .tables import CohomologyTable


@dataclass(frozen=True)
class RootSequence:
    n: int
    roots: tuple

    def __post_init__(self):
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "roots", tuple(int(f) for f in self.roots))
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if len(self.roots) != self.n:
            raise ValueError(f"expected {self.n} roots, got {len(self.roots)}")
        for a, b in zip(self.roots, self.roots[1:]):
            if a <= b:
                raise ValueError(f"roots not strictly decreasing: {self.roots}")

    def __str__(self):
        return ",".join(str(f) for f in self.roots)


@dataclass(frozen=True)
class CohDecomposition:
    """Ordered (coefficient, root sequence) terms against unit tables."""

    terms: tuple

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


def chi_from_roots(roots, lead):
    """Coefficients c_0..c_n of lead * prod_k (x - f_k) in the monomial basis."""
    coeffs = [Fraction(lead)]
    for f in roots:
        shifted = [Fraction(0)] + coeffs
        coeffs = [s - f * c for s, c in zip(shifted, coeffs + [Fraction(0)])]
    return tuple(coeffs)


def _sigma_cells(roots, m, window):
    # Window entries of m * sigma_f; does not insist the window contain the
    # roots, so the second-difference oracle can rebuild edge cases.
    f = roots.roots
    n = roots.n
    unit = Fraction(m, factorial(n))
    lo, hi = window
    entries = {}
    for j in range(lo, hi + 1):
        product = 1
        for fk in f:
            product *= j - fk
        if product == 0:
            continue
        row = sum(1 for fk in f if fk > j)
        entries[(row, j)] = unit * abs(product)
    return entries


def supernatural_table(roots, multiplicity=1, window=None):
    """The rank-one supernatural table of the given roots, scaled.

    The window must contain [f_n - 1, f_1 + 1] so that every corner of the
    staircase is visible; it defaults to exactly that range.
    """
    m = Fraction(multiplicity)
    if m <= 0:
        raise ValueError(f"multiplicity must be positive, got {m}")
    f = roots.roots
    if window is None:
        window = (f[-1] - 1, f[0] + 1)
    lo, hi = window
    if lo > f[-1] - 1 or hi < f[0] + 1:
        raise WindowTooSmall(
            f"window [{lo}, {hi}] must contain [{f[-1] - 1}, {f[0] + 1}]")
    chi = chi_from_roots(f, Fraction(m, factorial(roots.n)))
    return CohomologyTable(roots.n, window, _sigma_cells(roots, m, window), chi)


def line_bundle_table(n, a, window):
    """Cohomology table of O(a) on P^n over the given window.

    Row 0 carries binomial(a + j + n, n) for a + j >= 0, row n carries
    binomial(-a - j - 1, n) for a + j <= -n - 1, nothing else is nonzero.
    """
    lo, hi = window
    entries = {}
    for j in range(lo, hi + 1):
        if a + j >= 0:
            v = comb(a + j + n, n)
            if v:
                entries[(0, j)] = Fraction(v)
        elif a + j <= -n - 1:
            v = comb(-a - j - 1, n)
            if v:
                entries[(n, j)] = Fraction(v)
    chi = chi_from_roots([-a - k for k in range(1, n + 1)],
                         Fraction(1, factorial(n)))
    return CohomologyTable(n, window, entries, chi)


def corner_roots(g):
    """Read the root sequence off the staircase corners of a table.

    f_i is one less than the smallest twist supporting row i - 1, except
    that a row minimum at or above the previous root cannot belong to the
    corner staircase (the corner's row is empty there, so its roots are
    forced consecutive: f_i = f_{i-1} - 1).  Raises NotStaircase when rows
    0 or n are empty on the window.
    """
    minima = {}
    for (i, j) in g.entries:
        if i not in minima or j < minima[i]:
            minima[i] = j
    if 0 not in minima:
        raise NotStaircase("row 0 has no support on the window")
    if g.n not in minima:
        raise NotStaircase(f"row {g.n} has no support on the window")
    roots = [minima[0] - 1]
    for i in range(2, g.n + 1):
        row = i - 1
        if row in minima:
            roots.append(min(minima[row] - 1, roots[-1] - 1))
        else:
            roots.append(roots[-1] - 1)
    for a, b in zip(roots, roots[1:]):
        if a <= b:
            raise NotStaircase(f"corner twists {roots} are not strictly decreasing")
    return RootSequence(g.n, tuple(roots))
