"""A family of pure lattice diagrams shaped like algebras with r forms of degree e.

For each p >= 0 the degree sequence (0, e, e(p+2), ..., e(p+n)) with
n = r + p(r-1) determines a pure diagram whose normalized entries are all
integers, with beta_0 = 1 and beta_1 = r at degree e.  These lattice points
look like Betti tables of cyclic algebras but, for p > 0, sit in codimension
n > r and therefore cannot come from one.
"""

from dataclasses import dataclass

from .diagrams import DegreeSequence, normalized_diagram
from .errors import IntegralityViolation


@dataclass(frozen=True)
class StillmanParams:
    e: int
    r: int
    p: int

    def __post_init__(self):
        if self.e < 1:
            raise ValueError(f"e must be >= 1, got {self.e}")
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r}")
        if self.p < 0:
            raise ValueError(f"p must be >= 0, got {self.p}")

    @property
    def n(self):
        return self.r + self.p * (self.r - 1)


@dataclass(frozen=True)
class Obstruction:
    verdict: str  # "not-realizable-as-cyclic" or "inconclusive"
    codim: int
    generators: int


def stillman_sequence(params):
    """Degree sequence (0, e, e(p+2), ..., e(p+n)) on n = r + p(r-1) variables."""
    e, p, n = params.e, params.p, params.n
    degrees = [0, e] + [e * (p + i) for i in range(2, n + 1)]
    return DegreeSequence(0, tuple(degrees), n)


def stillman_diagram(params):
    """Normalized pure diagram of the family member; entries must be integers.

    Integrality is recomputed exactly rather than assumed, so a failure here
    falsifies the family's defining property at these parameters.
    """
    diagram = normalized_diagram(stillman_sequence(params))
    for v in diagram.values:
        if v.denominator != 1:
            raise IntegralityViolation(
                f"entry {v} of the {params} diagram is not an integer")
    return diagram


def realizability_obstruction(diagram, r):
    """Codimension bound: a cyclic algebra with r generators has codim <= r."""
    codim = len(diagram.sequence) - 1
    verdict = "not-realizable-as-cyclic" if codim > r else "inconclusive"
    return Obstruction(verdict, codim, r)


@dataclass(frozen=True)
class ScanRow:
    p: int
    sequence: DegreeSequence
    diagram: object
    integral: bool
    obstruction: Obstruction


def scan(e, r, p_max):
    """Family members for p = 0..p_max, each with its integrality and codim report."""
    rows = []
    for p in range(p_max + 1):
        params = StillmanParams(e, r, p)
        sequence = stillman_sequence(params)
        try:
            diagram = stillman_diagram(params)
            integral = True
        except IntegralityViolation:
            diagram = normalized_diagram(sequence)
            integral = False
        rows.append(ScanRow(p, sequence, diagram, integral,
                            realizability_obstruction(diagram, r)))
    return rows
