"""Hilbert functions of Milnor algebras and the two thresholds ct and st.

For a free curve the Castelnuovo-Mumford regularity of M(f) is st(f), and
for an M-curve it depends only on the degree.  We print the Hilbert
function next to the smooth one and mark where they part and where the
Tjurina number is reached.

    python demos/regularity.py
"""
from mcurves import fixtures
from mcurves.arrangement import defining_form
from mcurves.mtheory import m_reg_values
from mcurves.syzygy import Syzygies, smooth_hilbert

for name in fixtures.NAMES:
    f = defining_form(fixtures.load(name))
    syz = Syzygies(f)
    rep = syz.report()
    hil = rep.hilbert
    smooth = [smooth_hilbert(f.degree, k) for k in range(len(hil))]
    print(f"{name} (degree {f.degree}, tau {rep.tau})")
    print("   k      " + " ".join(f"{k:3d}" for k in range(len(hil))))
    print("   M(f)   " + " ".join(f"{v:3d}" for v in hil))
    print("   smooth " + " ".join(f"{v:3d}" for v in smooth))
    print(f"   ct = {rep.ct}, st = {rep.st}, reg M(f) = {rep.reg_M}, reg AR(f) = {rep.reg_AR}; "
          f"predicted {m_reg_values(f.degree)}")
