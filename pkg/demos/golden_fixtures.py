"""Walk through the four shipped arrangements and certify each one.

For every fixture we list the singular points, read off the weak
combinatorics, compute the Jacobian syzygies and compare the Poincare
polynomial with the exponents.

    python demos/golden_fixtures.py
"""
from mcurves import fixtures
from mcurves.arrangement import defining_form, singular_points, weak_combinatorics
from mcurves.mtheory import char_check, m_target, poincare_cl, splits_rationally
from mcurves.syzygy import Syzygies


def show(name):
    arr = fixtures.load(name)
    print(f"== {name}: {arr.d} lines, {arr.k} conics, degree {arr.degree}")
    points = singular_points(arr)
    for p in points[:6]:
        where = p.witness.rational_coords() or f"conjugate orbit of size {p.field_degree}"
        print(f"   {p.multiplicity}-fold point on {', '.join(p.incidence)} at {where}")
    if len(points) > 6:
        print(f"   ... {len(points) - 6} more")
    wc = weak_combinatorics(arr, points=points)
    print(f"   weak combinatorics {wc}")

    rep = Syzygies(defining_form(arr)).report()
    print(f"   tau = {rep.tau} (target {m_target(arr.degree)}), mdr = {rep.mdr}, "
          f"exponents {rep.exponents}")
    p = poincare_cl(wc)
    print(f"   P(t) = {p}, splits as {splits_rationally(p)}")
    v = char_check(wc)
    print(f"   {v.rule}: {v.lhs} = {v.rhs} -> {v.satisfied}")


if __name__ == "__main__":
    for name in fixtures.NAMES:
        show(name)
