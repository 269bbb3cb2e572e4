"""Shared builders for tests: random arrangements and brute-force oracles."""
import random
from fractions import Fraction
from itertools import combinations

from mcurves.arrangement import Arrangement, validate
from mcurves.errors import InputError, UnsupportedSingularity
from mcurves.exactpoly import HForm
from mcurves.arrangement import singular_points


def _line_through(p, q):
    return HForm.linear(p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
                        p[0] * q[1] - p[1] * q[0])


def _conic_through(pts):
    """A conic through five points (first nullspace vector), or None."""
    import sympy
    rows = [[a * a, b * b, c * c, a * b, a * c, b * c] for a, b, c in pts]
    ker = sympy.Matrix(rows).nullspace()
    if len(ker) != 1:
        return None
    v = ker[0]
    return HForm.conic(*[Fraction(int(sympy.numer(t)), int(sympy.denom(t))) for t in v])


def random_arrangement(rng, max_lines=7, max_conics=2, coeff=2):
    """A validated arrangement with only supported singularities, or None.

    Components are drawn through a small pool of points so that triple and
    quadruple points, including ones on conics, occur often.
    """
    d = rng.randint(0, max_lines)
    k = rng.randint(0, max_conics)
    if d + 2 * k < 3 or d + k < 2:
        return None
    pool = [tuple(rng.randint(-coeff, coeff) for _ in range(3)) for _ in range(7)]
    pool = [p for p in pool if any(p)]
    if len(pool) < 5:
        return None
    lines = []
    for _ in range(d):
        if rng.random() < 0.7:
            p, q = rng.sample(pool, 2)
            lines.append(_line_through(p, q))
        else:
            lines.append(HForm.linear(*[rng.randint(-coeff, coeff) for _ in range(3)]))
    conics = []
    for _ in range(k):
        c = _conic_through(rng.sample(pool, 5)) if rng.random() < 0.7 else None
        conics.append(c if c is not None else
                      HForm.conic(*[rng.randint(-coeff, coeff) for _ in range(6)]))
    try:
        arr = validate(Arrangement(lines, conics))
        singular_points(arr)
    except (InputError, UnsupportedSingularity):
        return None
    return arr


def random_arrangements(n, seed, **kw):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        arr = random_arrangement(rng, **kw)
        if arr is not None:
            out.append(arr)
    return out


def line_points_by_cross_products(lines):
    """Oracle for line arrangements: group pairwise cross products."""
    groups = {}
    for i, j in combinations(range(len(lines)), 2):
        u = [lines[i].coefficient(e) for e in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
        v = [lines[j].coefficient(e) for e in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
        p = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
        lead = next(c for c in p if c)
        key = tuple(Fraction(c) / lead for c in p)
        groups.setdefault(key, set()).update((i, j))
    counts = {}
    for members in groups.values():
        counts[len(members)] = counts.get(len(members), 0) + 1
    return counts


def random_invertible(rng, bound=3):
    while True:
        m = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        if det:
            return m
