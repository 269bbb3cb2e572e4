"""Which weak combinatorics could a one-conic M-arrangement have?

The counting constraints cut the candidates down to a handful per number of
lines.  Passing them is necessary, not sufficient: nothing here says an
arrangement with that combinatorics exists.

    python demos/enumeration.py [max_lines]
"""
import sys

from mcurves.mtheory import (WeakCombinatorics, admissible_traces, enumerate_one_conic,
                             m_one_conic_exponents, poincare_cl)

max_lines = int(sys.argv[1]) if len(sys.argv) > 1 else 12

for d in range(3, max_lines + 1):
    sols = sorted(enumerate_one_conic(d), reverse=True)
    exps = m_one_conic_exponents(d)
    print(f"d = {d:2d}: exponents {exps}, admissible r {admissible_traces(d)}")
    for n in sols:
        wc = WeakCombinatorics.from_sequence(d, 1, n)
        print(f"      {str(wc):18s} P = {poincare_cl(wc)}")
    if not sols:
        print("      none")
