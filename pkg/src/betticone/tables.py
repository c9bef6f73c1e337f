"""Sparse exact tables: graded Betti tables and sheaf cohomology tables.

All values are ``fractions.Fraction`` (arbitrary precision, always reduced,
positive denominator); nothing in this package touches floating point.
Zero entries are never stored, so every emptiness test is a map lookup.
Instances are treated as immutable after construction.
"""

from fractions import Fraction

from .errors import DimensionMismatch, NegativeEntry

ZERO = Fraction(0)


def _as_entries(entries):
    out = {}
    for (i, j), v in dict(entries).items():
        out[(int(i), int(j))] = Fraction(v)
    return out


class BettiTable:
    """Finitely supported map (homological index, internal degree) -> rational.

    ``vars`` is the number of polynomial ring variables; it bounds strand
    lengths during decomposition.  Homological indices may be any integers
    (complexes shift their window), internal degrees likewise.
    """

    __slots__ = ("vars", "entries")

    def __init__(self, vars, entries=()):
        if vars < 1:
            raise ValueError(f"vars must be positive, got {vars}")
        object.__setattr__(self, "vars", int(vars))
        object.__setattr__(self, "entries", _as_entries(entries))

    def __setattr__(self, name, value):
        raise AttributeError("BettiTable is immutable")

    def value(self, i, j):
        return self.entries.get((i, j), ZERO)

    def support(self):
        return sorted(self.entries)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.vars == other.vars and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        cells = ", ".join(f"({i},{j}): {v}" for (i, j), v in sorted(self.entries.items()))
        return f"BettiTable(vars={self.vars}, {{{cells}}})"


class CohomologyTable:
    """Cohomology rows 0..n over a finite twist window, plus the Euler polynomial.

    ``chi`` holds monomial-basis coefficients c_0..c_n of chi(j) = sum c_k j^k.
    Outside the window the table continues implicitly: row 0 carries chi(j)
    to the right, row n carries (-1)^n chi(j) to the left, all other rows
    vanish.  ``value`` materializes those tails.
    """

    __slots__ = ("n", "window", "entries", "chi")

    def __init__(self, n, window, entries=(), chi=None):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        lo, hi = window
        if lo > hi:
            raise ValueError(f"empty window {window}")
        if chi is None:
            chi = [0] * (n + 1)
        chi = tuple(Fraction(c) for c in chi)
        if len(chi) != n + 1:
            raise ValueError(f"chi needs {n + 1} coefficients, got {len(chi)}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "window", (int(lo), int(hi)))
        object.__setattr__(self, "entries", _as_entries(entries))
        object.__setattr__(self, "chi", chi)

    def __setattr__(self, name, value):
        raise AttributeError("CohomologyTable is immutable")

    def chi_at(self, j):
        """Evaluate chi(j) = sum c_k j^k exactly."""
        total = ZERO
        power = 1
        for c in self.chi:
            total += c * power
            power *= j
        return total

    def value(self, i, j):
        """Entry at (i, j), materializing the two polynomial tails."""
        lo, hi = self.window
        if lo <= j <= hi:
            return self.entries.get((i, j), ZERO)
        if j > hi:
            return self.chi_at(j) if i == 0 else ZERO
        if i == self.n:
            return self.chi_at(j) if self.n % 2 == 0 else -self.chi_at(j)
        return ZERO

    def support(self):
        return sorted(self.entries)

    def is_zero(self):
        return not self.entries and not any(self.chi)

    def __eq__(self, other):
        """Semantic equality: same table as a function, windows may differ."""
        if not isinstance(other, CohomologyTable):
            return NotImplemented
        if self.n != other.n or self.chi != other.chi:
            return False
        lo = min(self.window[0], other.window[0])
        hi = max(self.window[1], other.window[1])
        for i in range(self.n + 1):
            for j in range(lo, hi + 1):
                if self.value(i, j) != other.value(i, j):
                    return False
        return True

    __hash__ = None

    def __repr__(self):
        cells = ", ".join(f"({i},{j}): {v}" for (i, j), v in sorted(self.entries.items()))
        return (f"CohomologyTable(n={self.n}, window={self.window}, "
                f"chi={[str(c) for c in self.chi]}, {{{cells}}})")


def chi_eval(t, j):
    """Exact value of the Euler polynomial of a cohomology table at twist j."""
    return t.chi_at(j)


def add_tables(a, b):
    """Entrywise sum.  Cohomology windows are unioned with tails materialized."""
    if isinstance(a, BettiTable) and isinstance(b, BettiTable):
        if a.vars != b.vars:
            raise DimensionMismatch(f"vars {a.vars} != {b.vars}")
        merged = dict(a.entries)
        for key, v in b.entries.items():
            s = merged.get(key, ZERO) + v
            if s == 0:
                merged.pop(key, None)
            else:
                merged[key] = s
        return BettiTable(a.vars, merged)
    if isinstance(a, CohomologyTable) and isinstance(b, CohomologyTable):
        if a.n != b.n:
            raise DimensionMismatch(f"n {a.n} != {b.n}")
        lo = min(a.window[0], b.window[0])
        hi = max(a.window[1], b.window[1])
        merged = {}
        for i in range(a.n + 1):
            for j in range(lo, hi + 1):
                s = a.value(i, j) + b.value(i, j)
                if s != 0:
                    merged[(i, j)] = s
        chi = tuple(x + y for x, y in zip(a.chi, b.chi))
        return CohomologyTable(a.n, (lo, hi), merged, chi)
    raise DimensionMismatch("cannot add a Betti table to a cohomology table")


def scale(t, c):
    """Entrywise multiple by a nonnegative rational; c = 0 gives the zero table."""
    c = Fraction(c)
    if c < 0:
        raise ValueError(f"scale factor must be nonnegative, got {c}")
    if isinstance(t, BettiTable):
        if c == 0:
            return BettiTable(t.vars)
        return BettiTable(t.vars, {k: v * c for k, v in t.entries.items()})
    if c == 0:
        return CohomologyTable(t.n, t.window)
    return CohomologyTable(t.n, t.window,
                           {k: v * c for k, v in t.entries.items()},
                           tuple(x * c for x in t.chi))


def subtract_checked(a, b):
    """Entrywise a - b, refusing to go negative anywhere.

    Entries that reach exactly zero are dropped.  For cohomology tables the
    windows are unioned first (tail values materialized); tail behaviour of
    the difference beyond the union window is governed by the chi difference
    and is the caller's concern (see the peel tail guard).
    """
    if isinstance(a, BettiTable) and isinstance(b, BettiTable):
        if a.vars != b.vars:
            raise DimensionMismatch(f"vars {a.vars} != {b.vars}")
        merged = dict(a.entries)
        for key, v in sorted(b.entries.items()):
            d = merged.get(key, ZERO) - v
            if d < 0:
                raise NegativeEntry(key[0], key[1], d)
            if d == 0:
                merged.pop(key, None)
            else:
                merged[key] = d
        return BettiTable(a.vars, merged)
    if isinstance(a, CohomologyTable) and isinstance(b, CohomologyTable):
        if a.n != b.n:
            raise DimensionMismatch(f"n {a.n} != {b.n}")
        lo = min(a.window[0], b.window[0])
        hi = max(a.window[1], b.window[1])
        merged = {}
        for i in range(a.n + 1):
            for j in range(lo, hi + 1):
                d = a.value(i, j) - b.value(i, j)
                if d < 0:
                    raise NegativeEntry(i, j, d)
                if d != 0:
                    merged[(i, j)] = d
        chi = tuple(x - y for x, y in zip(a.chi, b.chi))
        return CohomologyTable(a.n, (lo, hi), merged, chi)
    raise DimensionMismatch("cannot subtract a Betti table from a cohomology table")


def _leading_coefficient(chi):
    for c in reversed(chi):
        if c != 0:
            return c
    return None


def validate(t):
    """Check every type invariant; returns the (possibly empty) violation list."""
    if isinstance(t, BettiTable):
        return [f"entry ({i}, {j}) = {v} is not positive"
                for (i, j), v in sorted(t.entries.items()) if v <= 0]

    violations = []
    n = t.n
    lo, hi = t.window
    for (i, j), v in sorted(t.entries.items()):
        if v <= 0:
            violations.append(f"entry ({i}, {j}) = {v} is not positive")
        if not 0 <= i <= n:
            violations.append(f"entry ({i}, {j}) lies outside rows 0..{n}")
        elif not lo <= j <= hi:
            violations.append(f"entry ({i}, {j}) lies outside the window [{lo}, {hi}]")
        elif 1 <= i <= n - 1 and (j == lo or j == hi):
            violations.append(f"interior row {i} touches the window edge at j = {j}")
    for j in range(lo, hi + 1):
        alt = sum((v if i % 2 == 0 else -v)
                  for (i, jj), v in t.entries.items() if jj == j and 0 <= i <= n)
        if alt != t.chi_at(j):
            violations.append(f"Euler mismatch at j = {j}: "
                              f"alternating sum {alt} != chi {t.chi_at(j)}")
    for k in range(1, n + 2):
        right = t.chi_at(hi + k)
        if right < 0:
            violations.append(f"right tail negative: chi({hi + k}) = {right}")
        left = t.chi_at(lo - k)
        if n % 2 == 1:
            left = -left
        if left < 0:
            violations.append(f"left tail negative: (-1)^{n} chi({lo - k}) = {left}")
    lead = _leading_coefficient(t.chi)
    if lead is not None and lead < 0:
        violations.append(f"leading chi coefficient {lead} is negative")
    return violations
