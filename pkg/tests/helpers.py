"""Shared test utilities: independent oracles and random table generators."""

from fractions import Fraction

from betticone import (BettiTable, DegreeSequence, RootSequence, add_tables,
                       normalized_diagram, scale, smallest_integral,
                       supernatural_table)


def hk_solve(seq):
    """Solve the moment equations by Gaussian elimination, first entry 1.

    Deliberately independent of the closed-form product the library uses:
    sets up sum_k (-1)^k x_k d_k^m = 0 for m = 0..l-1 with x_0 = 1 and
    eliminates exactly over Fractions.
    """
    d = seq.degrees
    l = len(d) - 1
    if l == 0:
        return (Fraction(1),)
    rows = []
    for m in range(l):
        coeffs = [Fraction((-1) ** k) * Fraction(d[k]) ** m for k in range(1, l + 1)]
        rows.append(coeffs + [-Fraction(d[0]) ** m])
    for col in range(l):
        pivot = next(r for r in range(col, l) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(l):
            if r != col and rows[r][col] != 0:
                f = rows[r][col] / rows[col][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return tuple([Fraction(1)] + [rows[k][-1] / rows[k][k] for k in range(l)])


def random_degree_sequence(rng, max_vars=8, lo=-20, hi=20):
    v = rng.randint(1, max_vars)
    length = rng.randint(1, v + 1)
    degrees = sorted(rng.sample(range(lo, hi + 1), length))
    return DegreeSequence(0, tuple(degrees), v)


def random_chain(rng, vars_count=4, max_terms=4, lo=-10):
    """Random chain of degree sequences under the fan order."""
    length = rng.randint(1, vars_count + 1)
    base = sorted(rng.sample(range(lo, lo + 12), length))
    seqs = [DegreeSequence(0, tuple(base), vars_count)]
    while len(seqs) < max_terms and rng.random() < 0.8:
        prev = seqs[-1]
        if len(prev.degrees) == vars_count + 1 and rng.random() < 0.4:
            shift = rng.randint(1, 2)
            start = prev.start + shift
            degrees = []
            for i in range(start, prev.end + 1):
                floor_val = prev.degrees[i - prev.start]
                if degrees:
                    floor_val = max(floor_val, degrees[-1] + 1)
                degrees.append(floor_val + rng.randint(0, 2))
            if not degrees:
                degrees = [prev.degrees[-1] + rng.randint(0, 3)]
            while len(degrees) < vars_count + 1 and rng.random() < 0.5:
                degrees.append(degrees[-1] + rng.randint(1, 3))
            nxt = DegreeSequence(start, tuple(degrees), vars_count)
        else:
            length = rng.randint(1, len(prev.degrees))
            degrees = []
            for k in range(length):
                floor_val = prev.degrees[k]
                if degrees:
                    floor_val = max(floor_val, degrees[-1] + 1)
                degrees.append(floor_val + rng.randint(0, 2))
            nxt = DegreeSequence(prev.start, tuple(degrees), vars_count)
        if nxt != prev:
            seqs.append(nxt)
    return seqs


def chain_combination(rng, seqs):
    """Random positive combination of the chain's smallest-integral diagrams."""
    terms = []
    total = BettiTable(seqs[0].vars)
    for seq in seqs:
        coeff = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        diagram = smallest_integral(normalized_diagram(seq))
        terms.append((coeff, diagram))
        total = add_tables(total, scale(diagram.table(), coeff))
    return terms, total


def random_root_chain(rng, n, max_terms=4, lo=-8, hi=8):
    """Random termwise nondecreasing chain of distinct root sequences."""
    roots = tuple(sorted(rng.sample(range(lo, hi + 1), n), reverse=True))
    chain = [RootSequence(n, roots)]
    while len(chain) < max_terms and rng.random() < 0.7:
        prev = chain[-1].roots
        new = []
        for k, f in enumerate(prev):
            top = f + 2 if k == 0 else min(f + 2, new[-1] - 1)
            new.append(rng.randint(f, top))
        nxt = RootSequence(n, tuple(new))
        if nxt != chain[-1]:
            chain.append(nxt)
    return chain


def root_chain_combination(rng, chain, slack=2):
    """Integer combination of unit supernatural tables over a generous window."""
    lo = min(r.roots[-1] for r in chain) - 1 - slack
    hi = max(r.roots[0] for r in chain) + 1 + slack
    terms = []
    total = None
    for roots in chain:
        m = rng.randint(1, 4)
        terms.append((Fraction(m), roots))
        table = supernatural_table(roots, m, (lo, hi))
        total = table if total is None else add_tables(total, table)
    return terms, total
