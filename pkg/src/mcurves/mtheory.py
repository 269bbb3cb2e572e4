"""Numerical constraints on weak combinatorics of M-arrangements of conics
and lines, and their combinatorial Poincare polynomials.

All checks here are necessary conditions only: passing them never implies
that an arrangement with the given combinatorics exists.

Throughout, ``d`` is the number of lines, ``l`` is defined by d = 2l or
d = 2l + 1, and ``r`` is the number of points where the conic meets the
lines.
"""
from dataclasses import dataclass
from math import comb, isqrt

from .arrangement import WeakCombinatorics, bezout_pairs
from .errors import DegreeTooSmall, OutOfRange, UnsupportedMultiplicity


@dataclass(frozen=True)
class ConstraintVerdict:
    rule: str
    satisfied: bool
    lhs: int
    rhs: object
    note: str = ""

    def as_dict(self):
        return {"rule": self.rule, "satisfied": self.satisfied,
                "lhs": self.lhs, "rhs": self.rhs, "note": self.note}


def _equality(rule, lhs, rhs, note=""):
    return ConstraintVerdict(rule, lhs == rhs, lhs, rhs, note)


@dataclass(frozen=True)
class PoincarePolynomial:
    """1 + c1 t + c2 t^2."""
    c1: int
    c2: int
    c0: int = 1

    def __post_init__(self):
        if self.c0 != 1:
            raise ValueError("constant term must be 1")

    def coefficients(self):
        return (self.c0, self.c1, self.c2)

    def __str__(self):
        return f"{self.c2}t^2 + {self.c1}t + 1"


def _half(d):
    return d // 2


def _require_small_multiplicities(wc):
    high = [r for r, n in wc.counts if r > 4 and n]
    if high:
        raise UnsupportedMultiplicity(f"points of multiplicity {high} are out of scope")


# ---------------------------------------------------------------------------
# counts


def tau_of(wc):
    """Total Tjurina number of an arrangement with ordinary quasi-homogeneous
    points: sum of (r-1)^2 n_r."""
    return sum((r - 1) ** 2 * n for r, n in wc.counts)


def bezout_check(wc):
    """Pairwise intersections counted two ways:
    4 C(k,2) + 2kd + C(d,2) = sum C(r,2) n_r."""
    lhs = bezout_pairs(wc.d, wc.k)
    rhs = sum(comb(r, 2) * n for r, n in wc.counts)
    return _equality("bezout", lhs, rhs)


def char_check(wc):
    """n2 + 2 n3 + 3 n4 against (k+l)^2 + l - k - 3 (d even) or
    (k+l)^2 + 2l - 1 (d odd)."""
    _require_small_multiplicities(wc)
    if wc.k < 1 or wc.d < 3:
        raise OutOfRange("needs at least one conic and three lines")
    lhs = wc.n(2) + 2 * wc.n(3) + 3 * wc.n(4)
    ell = _half(wc.d)
    if wc.d % 2 == 0:
        return _equality("char(i)", lhs, (wc.k + ell) ** 2 + ell - wc.k - 3)
    return _equality("char(ii)", lhs, (wc.k + ell) ** 2 + 2 * ell - 1)


def _one_conic_targets(d):
    ell = _half(d)
    if d % 2 == 0:
        return 3 * ell - 6, ell * ell + 3
    return 3 * ell - 2, ell * ell + ell + 2


def one_conic_check(wc):
    """The pair of equations on (n2 + n3, n3 + 3 n4) for one conic."""
    if wc.k != 1:
        raise OutOfRange("the one-conic equations need exactly one conic")
    if wc.d < 3:
        raise OutOfRange("needs at least three lines")
    _require_small_multiplicities(wc)
    a, b = _one_conic_targets(wc.d)
    case = "i" if wc.d % 2 == 0 else "ii"
    return (_equality(f"one_conic({case}).1", wc.n(2) + wc.n(3), a),
            _equality(f"one_conic({case}).2", wc.n(3) + 3 * wc.n(4), b))


def enumerate_one_conic(d):
    """All non-negative (n2, n3, n4) solving the one-conic system for d lines."""
    if d < 3:
        raise OutOfRange("needs at least three lines")
    a, b = _one_conic_targets(d)
    out = set()
    for n3 in range(0, min(a, b) + 1):
        n2 = a - n3
        rest = b - n3
        if rest % 3 == 0:
            out.add((n2, n3, rest // 3))
    return out


# ---------------------------------------------------------------------------
# the conic trace


def mvp_allowed(d, r):
    """Whether r points of the conic on the lines is possible for an
    M-arrangement of d lines and one conic.

    The verdict's lhs is m (r = 2m or 2m + 1) and rhs spells out the
    admissible set.  For d = 2l and r = 2l + 4 the note records that the
    deletion would be forced to have an mdr below the line-arrangement
    bound, so this branch is not realizable.
    """
    if d < 3 or r < 1:
        raise OutOfRange("needs d >= 3 and r >= 1")
    ell = _half(d)
    m, odd = divmod(r, 2)
    note = ""
    if d % 2 == 0:
        if odd:
            rule, ok, rhs = "mvp(a)(ii)", m <= ell - 2, f"m <= {ell - 2}"
        else:
            rule, ok, rhs = "mvp(a)(i)", m == ell + 2 or m <= ell - 1, f"m = {ell + 2} or m <= {ell - 1}"
            if m == ell + 2:
                p = poincare_of_deletion(d, r)
                split = splits_rationally(p)
                if split is not None and split[0] < mdr_lower_bound_lines(d):
                    note = (f"deletion polynomial splits as {split}, below the "
                            f"line-arrangement mdr bound {mdr_lower_bound_lines(d)}")
    else:
        if odd:
            rule, ok, rhs = "mvp(b)(ii)", m <= ell - 1, f"m <= {ell - 1}"
        else:
            rule, ok, rhs = "mvp(b)(i)", m == ell + 2 or m <= ell, f"m = {ell + 2} or m <= {ell}"
    if addition_never_free_advisory(d, r):
        note = (note + "; " if note else "") + "r = 2d: adding the conic never gives a free curve"
    return ConstraintVerdict(rule, ok, m, rhs, note)


def addition_never_free_advisory(d, r):
    """True when the conic meets the lines in the Bezout-maximal 2d points."""
    return r == 2 * d


def admissible_traces(d):
    return [r for r in range(1, 2 * d + 1) if mvp_allowed(d, r).satisfied]


# ---------------------------------------------------------------------------
# Poincare polynomials


def poincare_cl(wc):
    """1 + (2k + d - 1) t + (sum (r-1) n_r - d + 1) t^2."""
    c2 = sum((r - 1) * n for r, n in wc.counts) - wc.d + 1
    return PoincarePolynomial(2 * wc.k + wc.d - 1, c2)


def poincare_curve(degree, tau):
    """1 + (e-1) t + ((e-1)^2 - tau) t^2 for a reduced curve of degree e."""
    return PoincarePolynomial(degree - 1, (degree - 1) ** 2 - tau)


def poincare_from_exponents(d1, d2):
    return PoincarePolynomial(d1 + d2, d1 * d2)


def splits_rationally(p):
    """(d1, d2) with d1 <= d2 and p = (1 + d1 t)(1 + d2 t), or None."""
    disc = p.c1 * p.c1 - 4 * p.c2
    if disc < 0:
        return None
    root = isqrt(disc)
    if root * root != disc or (p.c1 + root) % 2:
        return None
    return ((p.c1 - root) // 2, (p.c1 + root) // 2)


def m_one_conic_exponents(d):
    """Exponents of a one-conic M-arrangement with d lines:
    (l-1, l+2) for d = 2l and (l, l+2) for d = 2l + 1."""
    ell = _half(d)
    return (ell - 1, ell + 2) if d % 2 == 0 else (ell, ell + 2)


def poincare_of_deletion(d, r):
    """Poincare polynomial of the line arrangement left after deleting the
    conic from a one-conic M-arrangement with d lines."""
    if d < 3 or r < 1:
        raise OutOfRange("needs d >= 3 and r >= 1")
    ell = _half(d)
    if d % 2 == 0:
        return PoincarePolynomial(2 * ell - 1, ell * ell + ell - 2 - r)
    return PoincarePolynomial(2 * ell, ell * ell + 2 * ell - r)


def deletion_identity_check(p_cl, p_l, r):
    """P(CL) = P(L) + 2t + r t^2, coefficientwise."""
    lhs = p_cl.coefficients()
    rhs = (p_l.c0, p_l.c1 + 2, p_l.c2 + r)
    return ConstraintVerdict("deletion", lhs == rhs, list(lhs), list(rhs))


def mdr_lower_bound_lines(d):
    """ceil(d/2) - 2.  Stated for even d; the odd value is advisory."""
    return -(-d // 2) - 2


# ---------------------------------------------------------------------------
# M-curve targets and regularity


def m_target(D):
    """Required total Tjurina number of an M-curve of degree D."""
    if D < 5:
        raise DegreeTooSmall(f"M-curves have degree at least 5, got {D}")
    m = D // 2
    return 3 * m * m - 3 * m + 3 if D % 2 == 0 else 3 * m * m + 1


def m_exponents(D):
    """Exponents of an M-curve of degree D."""
    if D < 5:
        raise DegreeTooSmall(f"M-curves have degree at least 5, got {D}")
    m = D // 2
    return (m - 2, m + 1) if D % 2 == 0 else (m - 1, m + 1)


def m_reg_values(D):
    """Castelnuovo-Mumford regularities of M(f) and AR(f) for an M-curve."""
    if D < 5:
        raise DegreeTooSmall(f"M-curves have degree at least 5, got {D}")
    m = D // 2
    reg_m = 3 * m - 2 if D % 2 == 0 else 3 * m - 1
    return {"reg_M": reg_m, "reg_AR": m + 1}


def tau_max(d, r):
    """Upper bound for the total Tjurina number given mdr = r."""
    base = (d - 1) * (d - r - 1) + r * r
    if 2 * r < d:
        return base
    return base - comb(2 * r - d + 2, 2)


def check_all(wc):
    """Every applicable verdict for a weak combinatorics."""
    out = [bezout_check(wc)]
    if wc.k >= 1 and wc.d >= 3:
        out.append(char_check(wc))
    if wc.k == 1 and wc.d >= 3:
        out.extend(one_conic_check(wc))
    return out


__all__ = [
    "ConstraintVerdict", "PoincarePolynomial", "WeakCombinatorics",
    "tau_of", "bezout_check", "char_check", "one_conic_check", "enumerate_one_conic",
    "mvp_allowed", "addition_never_free_advisory", "admissible_traces", "poincare_cl",
    "poincare_curve", "poincare_from_exponents", "splits_rationally",
    "m_one_conic_exponents", "poincare_of_deletion", "deletion_identity_check",
    "mdr_lower_bound_lines", "m_target", "m_exponents", "m_reg_values", "tau_max",
    "check_all",
]
