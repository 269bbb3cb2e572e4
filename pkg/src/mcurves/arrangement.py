"""Conic-line arrangements and their ordinary singular points.

Components are addressed by identifiers ``L0, L1, ...`` for lines and
``C0, C1, ...`` for conics, numbered in input order.

Singular points are found exactly.  Points lying on at least one line are
located by restricting every other component to that line and matching
irreducible factors of the restrictions; a point is reported by the line of
smallest index through it.  Points lying on conics only are located from
pairwise resultants after a random change of coordinates, and their
coordinates are carried in the residue field of the relevant factor.  Every
point is then re-evaluated against all components and checked to be
ordinary (pairwise distinct tangents).
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import (DuplicateComponent, InternalInconsistency, InvalidComponent,
                     MultiplicityTooHigh, NonOrdinarySingularity, ShearExhausted,
                     SingularConic, TooFewComponents, UnknownComponent, ZeroForm)
from .exactpoly import (HForm, UniPoly, dehomogenize, irreducible_factors,
                        line_parametrization, product, restrict_to_line,
                        resultant_eliminating)
from .numfield import NumberField, proportional

MAX_MULTIPLICITY = 4
SHEAR_ATTEMPTS = 16
SHEAR_RANGE = 20


@dataclass(frozen=True)
class Arrangement:
    lines: tuple = ()
    conics: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "conics", tuple(self.conics))

    @property
    def d(self):
        return len(self.lines)

    @property
    def k(self):
        return len(self.conics)

    @property
    def degree(self):
        return self.d + 2 * self.k

    def component_ids(self):
        return [f"L{i}" for i in range(self.d)] + [f"C{j}" for j in range(self.k)]

    def components(self):
        return list(zip(self.component_ids(), self.lines + self.conics))

    def component(self, cid):
        kind, idx = _parse_id(cid)
        pool = self.lines if kind == "L" else self.conics
        if idx >= len(pool):
            raise UnknownComponent(f"no component {cid}")
        return pool[idx]

    def transform(self, matrix):
        """Arrangement of the forms f(M v); M must be invertible."""
        return Arrangement([f.compose(matrix) for f in self.lines],
                           [f.compose(matrix) for f in self.conics])


@dataclass(frozen=True)
class Witness:
    """Exact location of a singular point.

    ``coords`` are projective coordinates, Fractions for rational points and
    elements of Q[a]/(modulus) otherwise.  ``origin`` names the components
    whose intersection produced the point.
    """
    modulus: UniPoly
    coords: tuple
    origin: tuple

    def rational_coords(self):
        if self.modulus.degree != 1:
            return None
        return _primitive_point(self.coords)


@dataclass(frozen=True)
class SingularPoint:
    incidence: tuple
    local_count: int
    multiplicity: int
    field_degree: int
    witness: Witness = field(compare=False, repr=False)


@dataclass(frozen=True)
class WeakCombinatorics:
    """The vector C(d, k; n_2, ..., n_t)."""
    d: int
    k: int
    counts: tuple = ()

    def __post_init__(self):
        counts = dict(self.counts)
        if self.d < 0 or self.k < 0:
            raise ValueError("d and k must be non-negative")
        for r, n in counts.items():
            if r < 2:
                raise ValueError(f"multiplicity {r} < 2")
            if n < 0:
                raise ValueError(f"negative count n_{r} = {n}")
        object.__setattr__(
            self, "counts", tuple(sorted((r, n) for r, n in counts.items() if n)))

    @classmethod
    def from_sequence(cls, d, k, ns):
        """Counts given as n_2, n_3, ... in order."""
        return cls(d, k, {r: n for r, n in enumerate(ns, start=2)})

    def n(self, r):
        return dict(self.counts).get(r, 0)

    @property
    def t(self):
        return max((r for r, _ in self.counts), default=1)

    def sequence(self):
        return [self.n(r) for r in range(2, self.t + 1)]

    def __str__(self):
        return f"C({self.d},{self.k};{','.join(map(str, self.sequence()))})"


def _parse_id(cid):
    if not isinstance(cid, str) or len(cid) < 2 or cid[0] not in "LC" or not cid[1:].isdigit():
        raise UnknownComponent(f"bad component identifier {cid!r}")
    return cid[0], int(cid[1:])


def component_sort_key(cid):
    kind, idx = _parse_id(cid)
    return (0 if kind == "L" else 1, idx)


def _primitive_point(coords):
    den = 1
    for c in coords:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in coords]
    g = 0
    for v in ints:
        g = _gcd(g, v)
    first = next(v for v in ints if v)
    if first < 0:
        g = -g
    return tuple(v // g for v in ints)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _conic_matrix(q):
    a, b, c = q.coefficient((2, 0, 0)), q.coefficient((0, 2, 0)), q.coefficient((0, 0, 2))
    d, e, f = q.coefficient((1, 1, 0)), q.coefficient((1, 0, 1)), q.coefficient((0, 1, 1))
    return [[a, d / 2, e / 2], [d / 2, b, f / 2], [e / 2, f / 2, c]]


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def validate(arr):
    """Check the standing hypotheses and return the normalized arrangement.

    Each form is scaled to coprime integer coefficients with positive
    leading coefficient (graded lex order).
    """
    lines, conics = [], []
    for cid, form in arr.components():
        if form.is_zero():
            raise ZeroForm(f"{cid} is the zero form")
        want = 1 if cid[0] == "L" else 2
        if form.degree != want:
            raise InvalidComponent(f"{cid} has degree {form.degree}, expected {want}")
        norm = form.primitive()
        if cid[0] == "C" and _det3(_conic_matrix(norm)) == 0:
            raise SingularConic(f"{cid} is a singular conic: {norm}")
        (lines if cid[0] == "L" else conics).append(norm)
    out = Arrangement(lines, conics)
    seen = {}
    for cid, form in out.components():
        if form in seen:
            raise DuplicateComponent(f"{cid} is proportional to {seen[form]}")
        seen[form] = cid
    return out


# ---------------------------------------------------------------------------
# singular points


def _restriction_factors(form, line):
    """Irreducible factors of the binary form form|line as hashable keys with
    multiplicities.  Keys: ('inf',) for the point P1 of the parametrization,
    ('r', root) for s = root, ('q', c0, c1) for s^2 + c1 s + c0."""
    rest = restrict_to_line(form, line)
    if rest.is_zero():
        raise InternalInconsistency("a component contains a line")
    out = []
    drop = form.degree - rest.degree
    if drop:
        out.append((("inf",), drop))
    for fac, mult in irreducible_factors(rest):
        if fac.degree == 1:
            out.append((("r", -fac.coeffs[0]), mult))
        elif fac.degree == 2:
            out.append((("q", fac.coeffs[0], fac.coeffs[1]), mult))
        else:
            raise InternalInconsistency("restriction factor of degree > 2")
    return out


def _point_on_line(key, line):
    p1, p2 = line_parametrization(line)
    if key[0] == "inf":
        return UniPoly([0, 1]), tuple(p1)
    if key[0] == "r":
        s = key[1]
        return UniPoly([0, 1]), tuple(s * a + b for a, b in zip(p1, p2))
    K = NumberField(UniPoly([key[1], key[2], 1]))
    s = K.gen()
    return K.modulus, tuple(s * a + b for a, b in zip(p1, p2))


def _points_on_lines(arr):
    comps = arr.components()
    raw = []
    for i, line in enumerate(arr.lines):
        lid = f"L{i}"
        clusters = {}
        for cid, form in comps:
            if cid == lid:
                continue
            for key, mult in _restriction_factors(form, line):
                if mult > 1:
                    raise NonOrdinarySingularity(f"{cid} is tangent to {lid}")
                clusters.setdefault(key, []).append(cid)
        for key in sorted(clusters, key=repr):
            incidence = [lid] + clusters[key]
            if any(c[0] == "L" and int(c[1:]) < i for c in incidence):
                continue
            modulus, coords = _point_on_line(key, line)
            raw.append((tuple(sorted(incidence, key=component_sort_key)),
                        modulus, coords, (lid, clusters[key][0])))
    return raw


def _random_shear(rng):
    while True:
        m = [[rng.randint(-SHEAR_RANGE, SHEAR_RANGE) for _ in range(3)] for _ in range(3)]
        if _det3(m) != 0:
            return [[Fraction(v) for v in row] for row in m]


def _conic_only_points(arr, rng):
    """Points of the union that lie on conics only (needs k >= 2)."""
    comps = arr.components()
    conic_ids = [f"C{j}" for j in range(arr.k)]
    for _ in range(SHEAR_ATTEMPTS):
        shear = _random_shear(rng)
        moved = {cid: arr.component(cid).compose(shear) for cid in conic_ids}
        found = {}
        ok = True
        for a in range(len(conic_ids)):
            for b in range(a + 1, len(conic_ids)):
                ca, cb = conic_ids[a], conic_ids[b]
                found_pair = _pair_points(moved[ca], moved[cb], shear, comps, (ca, cb))
                if found_pair is None:
                    ok = False
                    break
                for key, pt in found_pair:
                    found.setdefault(key, pt)
            if not ok:
                break
        if ok:
            return [found[key] for key in sorted(found, key=repr)]
    raise ShearExhausted(f"no separating projection after {SHEAR_ATTEMPTS} shears")


def _pair_points(f, g, shear, comps, origin):
    """Intersection points of two sheared conics that lie on no line, or
    None when this projection does not separate them."""
    if f.coefficient((0, 0, 2)) == 0 or g.coefficient((0, 0, 2)) == 0:
        return None
    res = resultant_eliminating(f, g, "z")
    if res.is_zero():
        raise InternalInconsistency(f"{origin[0]} and {origin[1]} share a component")
    if res.coefficient((res.degree, 0, 0)) == 0:
        return None
    fz = f.coefficients_in("z")
    gz = g.coefficients_in("z")
    fz += [HForm(0)] * (3 - len(fz))
    gz += [HForm(0)] * (3 - len(gz))
    out = []
    for fac, mult in irreducible_factors(dehomogenize(res, "x", "y")):
        K = NumberField(fac)
        base = (K.gen(), K(1), K(0))
        f0, f1, f2 = (c.evaluate(base) for c in fz)
        g0, g1, g2 = (c.evaluate(base) for c in gz)
        lin = g2 * f1 - f2 * g1
        if lin == 0:
            return None
        zval = -(g2 * f0 - f2 * g0) / lin
        if mult > 1:
            raise NonOrdinarySingularity(f"{origin[0]} and {origin[1]} are tangent")
        moved_pt = (K.gen(), K(1), zval)
        pt = tuple(sum((shear[i][j] * moved_pt[j] for j in range(3)), K(0)) for i in range(3))
        if K.degree == 1:
            pt = tuple(c.rational() for c in pt)
        incidence = tuple(cid for cid, form in comps if form.evaluate(pt) == 0)
        if any(c[0] == "L" for c in incidence):
            continue
        if origin[0] not in incidence or origin[1] not in incidence:
            raise InternalInconsistency("resultant root does not lie on both conics")
        key = (incidence, fac.degree, _orbit_signature(pt, K))
        out.append((key, (incidence, K.modulus, pt, origin)))
    return out


def _orbit_signature(pt, K):
    # A shear-independent label for a Galois orbit: the minimal data of a
    # rational point, or the field plus a normalized coordinate vector.
    if K.degree == 1:
        return _primitive_point(pt)
    for i, c in enumerate(pt):
        if c != 0:
            inv = c.inverse()
            return (K.modulus.coeffs, i, tuple((v * inv).poly.coeffs for v in pt))
    raise InternalInconsistency("zero point")


def singular_points(arr, seed=0):
    """All singular points of the union of the components, with exact
    multiplicities.  ``arr`` must be validated.  ``seed`` drives the random
    projections used for conic-only points."""
    if arr.d + arr.k < 2:
        return []
    raw = _points_on_lines(arr)
    if arr.k >= 2:
        raw += _conic_only_points(arr, random.Random(seed))
    comps = arr.components()
    points = []
    for incidence, modulus, coords, origin in raw:
        mult = len(incidence)
        if mult > MAX_MULTIPLICITY:
            raise MultiplicityTooHigh(
                f"{mult} components pass through one point: {', '.join(incidence)}")
        vanishing = tuple(cid for cid, form in comps if form.evaluate(coords) == 0)
        if tuple(sorted(vanishing, key=component_sort_key)) != incidence:
            raise InternalInconsistency(f"incidence mismatch at point on {incidence}")
        grads = [arr.component(cid).gradient(coords) for cid in incidence]
        for a in range(mult):
            for b in range(a + 1, mult):
                if proportional(grads[a], grads[b]):
                    raise NonOrdinarySingularity(
                        f"{incidence[a]} and {incidence[b]} are tangent at a common point")
        if modulus.degree == 1:
            coords = _primitive_point(coords)
        points.append(SingularPoint(incidence=incidence, local_count=modulus.degree,
                                    multiplicity=mult, field_degree=modulus.degree,
                                    witness=Witness(modulus, tuple(coords), origin)))
    points.sort(key=lambda p: (-p.multiplicity,
                               [component_sort_key(c) for c in p.incidence],
                               p.field_degree, repr(p.witness.coords)))
    return points


def tally(arr, points):
    counts = {}
    for p in points:
        counts[p.multiplicity] = counts.get(p.multiplicity, 0) + p.local_count
    return WeakCombinatorics(arr.d, arr.k, counts)


def weak_combinatorics(arr, seed=0, points=None):
    """Weak combinatorics of a validated arrangement, cross-checked against
    the Bezout count of pairwise intersections."""
    from .mtheory import bezout_check

    if points is None:
        points = singular_points(arr, seed=seed)
    wc = tally(arr, points)
    verdict = bezout_check(wc)
    if not verdict.satisfied:
        raise InternalInconsistency(
            f"Bezout count {verdict.lhs} != {verdict.rhs} detected pairs for {wc}")
    return wc


def bezout_pairs(d, k):
    """Number of pairwise intersections counted with Bezout multiplicity."""
    return 4 * comb(k, 2) + 2 * k * d + comb(d, 2)


def conic_trace(arr, conic_id, seed=0, points=None):
    """Number of distinct points of the conic lying on another component."""
    if not conic_id.startswith("C"):
        raise UnknownComponent(f"{conic_id} is not a conic")
    arr.component(conic_id)
    if points is None:
        points = singular_points(arr, seed=seed)
    return sum(p.local_count for p in points if conic_id in p.incidence)


def delete_component(arr, cid):
    kind, idx = _parse_id(cid)
    arr.component(cid)
    if arr.d + arr.k - 1 < 2:
        raise TooFewComponents("deletion would leave fewer than two components")
    if kind == "L":
        return Arrangement(arr.lines[:idx] + arr.lines[idx + 1:], arr.conics)
    return Arrangement(arr.lines, arr.conics[:idx] + arr.conics[idx + 1:])


def defining_form(arr):
    """Product of all components, of degree d + 2k."""
    return product(arr.lines + arr.conics)
