"""Graded linear algebra on the Jacobian ideal of a reduced plane curve.

Everything is computed degree by degree from the multiplication map

    S_{k-d+1}^3 -> S_k,   (a, b, c) -> a f_x + b f_y + c f_z,

whose cokernel is M(f)_k and whose kernel, read in degree r = k - d + 1,
is AR(f)_r.  Matrix rows and columns follow the graded lex monomial order.
"""
from dataclasses import dataclass, field

import numpy as np

from .arrangement import defining_form, weak_combinatorics
from .errors import (BoundViolated, DegreeTooSmall, InternalInconsistency, NotFree,
                     StabilizationFailure)
from .exactpoly import VARS, monomial_basis, monomial_count, partial
from .linalg import RankBackend, exact_nullspace, exact_rank, nullspace_mod_p, rank_mod_p
from .mtheory import m_target, tau_max, tau_of


def _index(degree):
    return {e: i for i, e in enumerate(monomial_basis(degree))}


def _int_parts(polys):
    # coefficient tables of integer forms as Python ints
    return [{e: int(c) for e, c in p.terms()} for p in polys]


def multiplication_matrix(polys, degree, src):
    """Matrix of (m_1, ..., m_n) -> sum m_i p_i from S_src^n to S_{src+degree}.

    ``polys`` are integer coefficient tables of forms of the given degree.
    Columns are ordered by polynomial, then by source monomial.
    """
    target = _index(src + degree)
    basis = monomial_basis(src)
    mat = np.zeros((len(target), len(polys) * len(basis)), dtype=object)
    col = 0
    for p in polys:
        for m in basis:
            for e, c in p.items():
                mat[target[(e[0] + m[0], e[1] + m[1], e[2] + m[2])], col] = c
            col += 1
    return mat


def _compact(mat):
    m = np.asarray(mat)
    if m.size and max(abs(int(v)) for v in m.ravel()) < 2 ** 62:
        return m.astype(np.int64)
    return m


def smooth_hilbert(d, k):
    """dim M(g)_k for a smooth curve g of degree d: the coefficient of t^k
    in (1 + t + ... + t^(d-2))^3."""
    if d < 2 or k < 0:
        return 1 if k == 0 else 0
    return sum(1 for a in range(d - 1) for b in range(d - 1)
               if 0 <= k - a - b <= d - 2)


@dataclass
class SyzygyReport:
    d: int
    hilbert: list
    tau: int
    mdr: int
    mdr_e: object
    is_free: bool
    exponents: object
    ct: object
    st: int
    reg_M: object
    reg_AR: object
    is_m_curve: bool
    dpw_bound: int
    ct_direct: object = None
    m_target: object = None
    generator_degrees: object = field(default=None)

    def as_dict(self):
        return {
            "degree": self.d, "hilbert": list(self.hilbert), "tau": self.tau,
            "mdr": self.mdr, "mdr_e": self.mdr_e, "is_free": self.is_free,
            "exponents": list(self.exponents) if self.exponents else None,
            "ct": self.ct, "ct_direct": self.ct_direct, "st": self.st,
            "reg_M": self.reg_M, "reg_AR": self.reg_AR,
            "is_m_curve": self.is_m_curve, "m_target": self.m_target,
            "dpw_bound": self.dpw_bound,
            "generator_degrees": (list(self.generator_degrees)
                                  if self.generator_degrees is not None else None),
        }


class Syzygies:
    """Cached degree-wise computations for one form."""

    def __init__(self, f, backend=None):
        if f.degree < 1:
            raise ValueError("need a form of positive degree")
        self.f = f.primitive()
        self.d = f.degree
        self.backend = backend if backend is not None else RankBackend()
        self.parts = _int_parts([partial(self.f, v) for v in VARS])
        self._jac = {}
        self._kos = {}
        self._tau = None

    # -- raw ranks ------------------------------------------------------

    def jacobian_matrix(self, k):
        return _compact(multiplication_matrix(self.parts, self.d - 1, k - self.d + 1))

    def jacobian_rank(self, k, critical=False):
        """Rank of S_{k-d+1}^3 -> S_k."""
        if k - self.d + 1 < 0:
            return 0
        cached = self._jac.get(k)
        if cached is not None and (cached[1] or not critical):
            return cached[0]
        r = self.backend.rank(self.jacobian_matrix(k), f"jac:{k}", critical=critical)
        self._jac[k] = (r, critical or self.backend.mode == "exact")
        return r

    def koszul_matrix(self, r):
        fx, fy, fz = self.parts
        neg = lambda p: {e: -c for e, c in p.items()}
        src = r - self.d + 1
        blocks = [(fy, neg(fx), {}), (fz, {}, neg(fx)), ({}, fz, neg(fy))]
        n_src = monomial_count(src)
        n_tgt = monomial_count(r)
        mat = np.zeros((3 * n_tgt, 3 * n_src), dtype=object)
        for g, comps in enumerate(blocks):
            for slot, p in enumerate(comps):
                if not p:
                    continue
                sub = multiplication_matrix([p], self.d - 1, src)
                mat[slot * n_tgt:(slot + 1) * n_tgt, g * n_src:(g + 1) * n_src] = sub
        return _compact(mat)

    # -- Milnor algebra ---------------------------------------------------

    def hilbert(self, k, critical=False):
        return monomial_count(k) - self.jacobian_rank(k, critical)

    def hilbert_sequence(self, k_max):
        return [self.hilbert(k) for k in range(k_max + 1)]

    def window(self):
        return 3 * self.d - 6, 3 * self.d - 4

    def tau(self):
        """Stable value of dim M(f)_k, read on [3d-6, 3d-4] and pushed
        forward up to 5d if the values there disagree."""
        if self._tau is not None:
            return self._tau[0]
        lo, hi = self.window()
        lo = max(lo, 0)
        hi = max(hi, lo + 2)
        while True:
            vals = [self.hilbert(k, critical=True) for k in range(lo, hi + 1)]
            if len(set(vals)) == 1:
                self._tau = (vals[0], hi)
                return vals[0]
            if hi >= 5 * self.d:
                raise StabilizationFailure(f"Hilbert function not stable up to {hi}: {vals}")
            lo += 1
            hi += 1

    def window_end(self):
        self.tau()
        return self._tau[1]

    def st(self):
        t = self.tau()
        end = self.window_end()
        q = end
        while q > 0 and self.hilbert(q - 1) == t:
            q -= 1
        # certify the boundary region exactly
        for k in range(max(q - 1, 0), end + 1):
            self.hilbert(k, critical=True)
        q = end
        while q > 0 and self.hilbert(q - 1) == t:
            q -= 1
        return q

    def ct_direct(self):
        """Largest q with dim M(f)_k equal to the smooth value for all k <= q."""
        end = self.window_end()
        for k in range(end + 1):
            if self.hilbert(k) != smooth_hilbert(self.d, k):
                return k - 1
        return None

    # -- syzygies ---------------------------------------------------------

    def ar_dimension(self, r, critical=False):
        if r < 0:
            return 0
        return 3 * monomial_count(r) - self.jacobian_rank(r + self.d - 1, critical)

    def mdr(self):
        for r in range(0, self.d):
            if self.ar_dimension(r) > 0 and self.ar_dimension(r, critical=True) > 0:
                if r > 0:
                    self.ar_dimension(r - 1, critical=True)
                return r
        raise InternalInconsistency("no Jacobian relation up to degree d-1")

    def koszul_dimension(self, r, critical=False):
        if r - self.d + 1 < 0:
            return 0
        cached = self._kos.get(r)
        if cached is not None and (cached[1] or not critical):
            return cached[0]
        rank = self.backend.rank(self.koszul_matrix(r), f"kos:{r}", critical=critical)
        self._kos[r] = (rank, critical or self.backend.mode == "exact")
        return rank

    def essential_dimension(self, r, critical=False):
        return self.ar_dimension(r, critical) - self.koszul_dimension(r, critical)

    def mdr_e(self):
        """Minimal degree of a non-Koszul syzygy, None for smooth curves."""
        r0 = self.mdr()
        if r0 < self.d - 1:
            return r0
        for r in range(self.d - 1, 2 * self.d - 3):
            if self.essential_dimension(r) > 0 and self.essential_dimension(r, True) > 0:
                return r
        return None

    def dpw_verdict(self):
        t = self.tau()
        r = self.mdr()
        bound = tau_max(self.d, r)
        if t > bound:
            raise BoundViolated(f"tau = {t} exceeds tau_max({self.d}, {r}) = {bound}")
        free = 2 * r < self.d and t == bound
        return {"is_free": free, "tau": t, "tau_max": bound, "r": r}

    def exponents(self):
        v = self.dpw_verdict()
        if not v["is_free"]:
            raise NotFree("curve is not free")
        return (v["r"], self.d - 1 - v["r"])

    def ar_basis(self, r, exact):
        """Basis of AR(f)_r as rows over S_r^3 coordinates (exact integers or
        residues mod the given prime)."""
        mat = self.jacobian_matrix(r + self.d - 1)
        if exact is True:
            return exact_nullspace(mat)
        return nullspace_mod_p(mat, exact)

    def _shift_matrix(self, basis, r):
        # columns: x, y, z times each basis vector of AR_{r-1}, in S_r^3
        src = monomial_basis(r - 1)
        tgt = _index(r)
        n_src, n_tgt = len(src), len(tgt)
        cols = []
        for vec in basis:
            for v in range(3):
                col = np.zeros(3 * n_tgt, dtype=object)
                for slot in range(3):
                    for i, m in enumerate(src):
                        c = vec[slot * n_src + i]
                        if c:
                            e = list(m)
                            e[v] += 1
                            col[slot * n_tgt + tgt[tuple(e)]] = c
                cols.append(col)
        if not cols:
            return np.zeros((3 * n_tgt, 0), dtype=object)
        return np.array(cols, dtype=object).T

    def generators_in_degree(self, r):
        """Number of minimal generators of AR(f) in degree r."""
        dim_r = self.ar_dimension(r, critical=True)
        if r == 0 or self.ar_dimension(r - 1, critical=True) == 0:
            return dim_r
        if self.backend.mode == "exact":
            image = exact_rank(self._shift_matrix(self.ar_basis(r - 1, True), r))
        else:
            want = self.ar_dimension(r - 1)
            ranks = []
            for p in self.backend.primes_for(f"gen:{r}"):
                basis = self.ar_basis(r - 1, p)
                if len(basis) == want:
                    ranks.append(rank_mod_p(self._shift_matrix(basis, r), p))
            image = max(ranks) if ranks else -1
            exact_image = exact_rank(self._shift_matrix(self.ar_basis(r - 1, True), r))
            self.backend.exact_checks += 1
            if exact_image != image:
                self.backend.exact_fallback_triggered = True
                image = exact_image
        return dim_r - image

    def generator_degrees(self, r_max=None):
        if r_max is None:
            r_max = self.d - 1
        out = []
        for r in range(0, r_max + 1):
            out.extend([r] * self.generators_in_degree(r))
        return out

    # -- thresholds and regularity ----------------------------------------

    def thresholds(self):
        d = self.d
        me = self.mdr_e()
        ct = me + d - 2 if me is not None else None
        st = self.st()
        if self.dpw_verdict()["is_free"]:
            d1, d2 = self.exponents()
            if ct + st != 3 * (d - 2) or st != d - 3 + d2:
                raise InternalInconsistency(
                    f"free curve with ct = {ct}, st = {st}, exponents ({d1}, {d2})")
        return {"ct": ct, "st": st}

    def regularity(self):
        if not self.dpw_verdict()["is_free"]:
            return {"reg_M": None, "reg_AR": None, "st": self.st()}
        st = self.st()
        return {"reg_M": st, "reg_AR": st - self.d + 3, "st": st}

    def report(self, with_generators=False, r_max=None):
        t = self.tau()
        verdict = self.dpw_verdict()
        th = self.thresholds()
        reg = self.regularity()
        hil = self.hilbert_sequence(self.window_end())
        ct_d = self.ct_direct()
        if th["ct"] is not None and ct_d != th["ct"]:
            raise InternalInconsistency(f"ct from mdr_e ({th['ct']}) != ct from Hilbert ({ct_d})")
        try:
            target = m_target(self.d)
        except DegreeTooSmall:
            target = None
        rep = SyzygyReport(
            d=self.d, hilbert=hil, tau=t, mdr=verdict["r"], mdr_e=self.mdr_e(),
            is_free=verdict["is_free"],
            exponents=self.exponents() if verdict["is_free"] else None,
            ct=th["ct"], st=th["st"], reg_M=reg["reg_M"], reg_AR=reg["reg_AR"],
            is_m_curve=target is not None and t == target and verdict["is_free"],
            dpw_bound=verdict["tau_max"], ct_direct=ct_d, m_target=target)
        if with_generators:
            rep.generator_degrees = self.generator_degrees(r_max)
        return rep


# ---------------------------------------------------------------------------
# function interface


def milnor_hilbert(f, k_max, backend=None):
    """dim M(f)_k for k = 0..k_max."""
    return Syzygies(f, backend).hilbert_sequence(k_max)


def tau(f, backend=None):
    return Syzygies(f, backend).tau()


def ar_dimension(f, r, backend=None):
    return Syzygies(f, backend).ar_dimension(r, critical=True)


def mdr(f, backend=None):
    return Syzygies(f, backend).mdr()


def koszul_dimension(f, r, backend=None):
    return Syzygies(f, backend).koszul_dimension(r, critical=True)


def mdr_e(f, backend=None):
    return Syzygies(f, backend).mdr_e()


def dpw_verdict(f, backend=None):
    return Syzygies(f, backend).dpw_verdict()


def exponents(f, backend=None):
    return Syzygies(f, backend).exponents()


def generator_degrees(f, r_max=None, backend=None):
    return Syzygies(f, backend).generator_degrees(r_max)


def thresholds(f, backend=None):
    return Syzygies(f, backend).thresholds()


def regularity(f, backend=None):
    return Syzygies(f, backend).regularity()


def analyze(f, backend=None, with_generators=False, r_max=None):
    return Syzygies(f, backend).report(with_generators, r_max)


def m_curve_certify(arr, backend=None, seed=0, points=None, syz=None):
    """Decide whether a validated arrangement with ordinary singularities is
    an M-arrangement: total Tjurina number equal to the degree target and at
    least one ordinary quadruple point."""
    D = arr.degree
    target = m_target(D)
    wc = weak_combinatorics(arr, seed=seed, points=points)
    if syz is None:
        syz = Syzygies(defining_form(arr), backend)
    actual = syz.tau()
    combinatorial = tau_of(wc)
    if actual != combinatorial:
        raise InternalInconsistency(
            f"tau from syzygies ({actual}) != tau from combinatorics ({combinatorial})")
    return {
        "is_m_arrangement": actual == target and wc.n(4) >= 1,
        "target_tau": target,
        "actual_tau": actual,
        "details": {"weak_combinatorics": str(wc), "n4": wc.n(4),
                    "degree": D, "is_free": syz.dpw_verdict()["is_free"]},
    }


__all__ = ["SyzygyReport", "Syzygies", "milnor_hilbert", "tau", "ar_dimension", "mdr",
           "koszul_dimension", "mdr_e", "dpw_verdict", "exponents", "generator_degrees",
           "thresholds", "regularity", "analyze", "m_curve_certify", "smooth_hilbert",
           "multiplication_matrix"]
