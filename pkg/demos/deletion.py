"""Delete the conic from each one-conic fixture and look at what is left.

The Poincare polynomial of the remaining line arrangement is predicted by a
closed formula in d and r; we recompute it from the actual intersection
points and then check whether the line arrangement is free.

    python demos/deletion.py
"""
from mcurves import fixtures
from mcurves.arrangement import (conic_trace, defining_form, delete_component, validate,
                                 weak_combinatorics)
from mcurves.mtheory import mdr_lower_bound_lines, poincare_cl, poincare_of_deletion, splits_rationally
from mcurves.syzygy import Syzygies

for name in ("cl1", "cl2", "cl3"):
    arr = fixtures.load(name)
    r = conic_trace(arr, "C0")
    rest = validate(delete_component(arr, "C0"))
    wc = weak_combinatorics(rest)
    predicted = poincare_of_deletion(arr.d, r)
    actual = poincare_cl(wc)
    print(f"{name}: r = {r}, lines left {wc}")
    print(f"   predicted {predicted}, recomputed {actual}, equal: {predicted == actual}")
    split = splits_rationally(actual)
    print(f"   splitting {split}, mdr lower bound {mdr_lower_bound_lines(rest.d)}")
    rep = Syzygies(defining_form(rest)).report(with_generators=True)
    if rep.is_free:
        print(f"   free with exponents {rep.exponents}")
    else:
        print(f"   not free; minimal generators in degrees {rep.generator_degrees}")
