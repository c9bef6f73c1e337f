#!/usr/bin/env python3
"""Scan the virtual pure-diagram family over a parameter grid.

For every (e, r) in the grid this prints the family members p = 0..p_max as
TSV: each looks like the Betti table of an algebra cut out by r forms of
degree e (beta_0 = 1, beta_1 = r), every entry is an integer, and from p = 1
on the codimension exceeds r, so none of them comes from an actual cyclic
module.  Largest default case: r = 4, p = 12 gives a 41-column diagram.
"""

import argparse

from betticone import scan


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--e-max", type=int, default=3)
    parser.add_argument("--r-max", type=int, default=4)
    parser.add_argument("--p-max", type=int, default=12)
    args = parser.parse_args()

    print("e\tr\tp\tcodim\tobstruction\tdegrees\tvalues")
    for e in range(1, args.e_max + 1):
        for r in range(2, args.r_max + 1):
            for row in scan(e, r, args.p_max):
                assert row.integral, (e, r, row.p)
                print(f"{e}\t{r}\t{row.p}\t{row.obstruction.codim}\t"
                      f"{row.obstruction.verdict}\t"
                      f"{','.join(str(d) for d in row.sequence.degrees)}\t"
                      f"{','.join(str(v) for v in row.diagram.values)}")


if __name__ == "__main__":
    main()
