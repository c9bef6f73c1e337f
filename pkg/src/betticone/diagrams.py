"""Degree sequences and the pure diagrams they determine.

A degree sequence is a strictly increasing run of integers d_a, ..., d_{a+l}
attached to consecutive homological positions starting at ``start`` = a.
Positions past the last entry are implicitly infinite (a shorter diagram),
and the run can never exceed vars + 1 terms.  Each sequence determines, up
to scale, one pure diagram: the extremal rays of the cone of Betti tables.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm, prod

from .errors import DimensionMismatch
from .tables import BettiTable


@dataclass(frozen=True)
class DegreeSequence:
    start: int
    degrees: tuple
    vars: int

    def __post_init__(self):
        object.__setattr__(self, "start", int(self.start))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        object.__setattr__(self, "vars", int(self.vars))
        if self.vars < 1:
            raise ValueError(f"vars must be positive, got {self.vars}")
        if not 1 <= len(self.degrees) <= self.vars + 1:
            raise ValueError(f"length {len(self.degrees)} not in 1..{self.vars + 1}")
        for a, b in zip(self.degrees, self.degrees[1:]):
            if a >= b:
                raise ValueError(f"degrees not strictly increasing: {self.degrees}")

    def __len__(self):
        return len(self.degrees)

    @property
    def end(self):
        """Last homological position carrying a finite degree."""
        return self.start + len(self.degrees) - 1

    def __str__(self):
        body = ",".join(str(d) for d in self.degrees)
        return f"{self.start}:[{body}]" if self.start else body


@dataclass(frozen=True)
class PureDiagram:
    sequence: DegreeSequence
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(self.values) != len(self.sequence):
            raise ValueError("one value per degree required")
        if any(v <= 0 for v in self.values):
            raise ValueError(f"diagram values must be positive: {self.values}")

    def table(self):
        """The diagram as a sparse Betti table."""
        seq = self.sequence
        entries = {(seq.start + k, d): v
                   for k, (d, v) in enumerate(zip(seq.degrees, self.values))}
        return BettiTable(seq.vars, entries)


class Ordering(Enum):
    LESS_EQ = "<="
    GREATER_EQ = ">="
    EQUAL = "=="
    INCOMPARABLE = "<>"


def normalized_diagram(seq):
    """The pure diagram of ``seq`` normalized so its first entry is 1.

    Entry k is prod_{j != 0} |d_j - d_0| / prod_{j != k} |d_j - d_k|, the
    unique positive solution of the moment equations
    sum_k (-1)^k beta_k d_k^m = 0 for m = 0..l-1 with beta_0 = 1.
    """
    d = seq.degrees
    numerator = prod(abs(dj - d[0]) for dj in d[1:])
    values = []
    for k in range(len(d)):
        denom = prod(abs(dj - d[k]) for m, dj in enumerate(d) if m != k)
        values.append(Fraction(numerator, denom))
    return PureDiagram(seq, tuple(values))


def moment_sums(diagram):
    """The l moment sums sum_k (-1)^k beta_k d_k^m, m = 0..l-1 (all zero iff pure)."""
    d = diagram.sequence.degrees
    sums = []
    for m in range(len(d) - 1):
        total = Fraction(0)
        for k, (deg, v) in enumerate(zip(d, diagram.values)):
            term = v * deg ** m
            total += term if k % 2 == 0 else -term
        sums.append(total)
    return sums


def integral_scale(values):
    """Smallest positive rational multiplier making all values integers."""
    values = [Fraction(v) for v in values]
    den_lcm = lcm(*(v.denominator for v in values))
    scaled = [v.numerator * (den_lcm // v.denominator) for v in values]
    return Fraction(den_lcm, gcd(*scaled))


def smallest_integral(diagram):
    """Rescale to the smallest diagram with all-integer entries (set-gcd 1)."""
    s = integral_scale(diagram.values)
    if s == 1:
        return diagram
    return PureDiagram(diagram.sequence, tuple(v * s for v in diagram.values))


def _dominates(d, e):
    # d <= e in the fan order: window starts ordered, degrees dominated at
    # shared positions, and e may outrun d's end only when d already has the
    # maximal v+1 terms (otherwise d's implicit trailing infinity wins).
    if d.start > e.start:
        return False
    for i in range(e.start, min(d.end, e.end) + 1):
        if d.degrees[i - d.start] > e.degrees[i - e.start]:
            return False
    if e.end > d.end and len(d.degrees) != d.vars + 1:
        return False
    return True


def compare(d, e):
    """Termwise partial order underlying the simplicial fan structure.

    For sequences in the same window this is the classical termwise order
    with infinity padding on the right: a longer sequence that agrees on the
    overlap sits below the shorter one.  Shifted windows compare so that the
    greedy peel order of a decomposable complex table is monotone.
    """
    if d.vars != e.vars:
        raise DimensionMismatch(f"vars {d.vars} != {e.vars}")
    if d == e:
        return Ordering.EQUAL
    le = _dominates(d, e)
    ge = _dominates(e, d)
    if le and ge:  # impossible for distinct valid sequences
        raise AssertionError(f"order violated antisymmetry on {d}, {e}")
    if le:
        return Ordering.LESS_EQ
    if ge:
        return Ordering.GREATER_EQ
    return Ordering.INCOMPARABLE


def is_chain(sequences):
    """True iff consecutive sequences compare LessEq or Equal."""
    seqs = list(sequences)
    return all(compare(a, b) in (Ordering.LESS_EQ, Ordering.EQUAL)
               for a, b in zip(seqs, seqs[1:]))
