"""Exact arithmetic for ternary forms and univariate polynomials over Q.

Coefficients are :class:`fractions.Fraction` throughout.  Monomials of a
ternary form are exponent triples ``(a, b, c)`` standing for x^a y^b z^c and
are ordered graded-lexicographically with x > y > z.
"""
from fractions import Fraction
from itertools import permutations
from math import isqrt

VARS = ("x", "y", "z")


def _var_index(var):
    if isinstance(var, int):
        if var not in (0, 1, 2):
            raise ValueError(f"bad variable index {var}")
        return var
    try:
        return VARS.index(var)
    except ValueError:
        raise ValueError(f"unknown variable {var!r}") from None


def monomial_basis(degree):
    """All exponent triples of total ``degree`` in graded lex order (x > y > z).

    >>> monomial_basis(1)
    [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    """
    if degree < 0:
        return []
    return [(a, b, degree - a - b)
            for a in range(degree, -1, -1)
            for b in range(degree - a, -1, -1)]


def monomial_count(degree):
    return (degree + 1) * (degree + 2) // 2 if degree >= 0 else 0


def _sort_key(exp):
    # descending lex order on exponent triples
    return (-exp[0], -exp[1], -exp[2])


class HForm:
    """Homogeneous polynomial in x, y, z with rational coefficients.

    Instances are immutable.  The zero form keeps its declared degree but
    may be added to a form of any degree.
    """

    __slots__ = ("degree", "_coeffs", "_hash")

    def __init__(self, degree, coeffs=None):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        table = {}
        for exp, c in (coeffs or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != 3 or min(exp) < 0 or sum(exp) != degree:
                raise ValueError(f"exponent {exp} does not have degree {degree}")
            c = Fraction(c)
            if c:
                table[exp] = table.get(exp, 0) + c
        self.degree = degree
        self._coeffs = {e: c for e, c in table.items() if c}
        self._hash = None

    @classmethod
    def variable(cls, var):
        exp = [0, 0, 0]
        exp[_var_index(var)] = 1
        return cls(1, {tuple(exp): 1})

    @classmethod
    def constant(cls, c):
        return cls(0, {(0, 0, 0): c})

    @classmethod
    def linear(cls, a, b, c):
        """The form ax + by + cz."""
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @classmethod
    def conic(cls, a, b, c, d, e, f):
        """The form ax^2 + by^2 + cz^2 + dxy + exz + fyz."""
        return cls(2, {(2, 0, 0): a, (0, 2, 0): b, (0, 0, 2): c,
                       (1, 1, 0): d, (1, 0, 1): e, (0, 1, 1): f})

    # -- inspection ---------------------------------------------------

    def is_zero(self):
        return not self._coeffs

    def coefficient(self, exp):
        return self._coeffs.get(tuple(exp), Fraction(0))

    def terms(self):
        """(exponent, coefficient) pairs in graded lex order."""
        return sorted(self._coeffs.items(), key=lambda t: _sort_key(t[0]))

    def coefficient_vector(self):
        return [self.coefficient(e) for e in monomial_basis(self.degree)]

    def degree_in(self, var):
        i = _var_index(var)
        return max((e[i] for e in self._coeffs), default=-1)

    def coefficients_in(self, var):
        """Split as sum_j F_j * var^j; returns [F_0, F_1, ...] with var absent from F_j."""
        i = _var_index(var)
        top = self.degree_in(var)
        parts = [dict() for _ in range(top + 1)]
        for exp, c in self._coeffs.items():
            j = exp[i]
            e = list(exp)
            e[i] = 0
            parts[j][tuple(e)] = c
        return [HForm(self.degree - j, p) for j, p in enumerate(parts)]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, HForm):
            if other == 0:
                return self
            other = HForm.constant(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        table = dict(self._coeffs)
        for e, c in other._coeffs.items():
            table[e] = table.get(e, 0) + c
        return HForm(self.degree, table)

    __radd__ = __add__

    def __neg__(self):
        return HForm(self.degree, {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HForm):
            return multiply(self, other)
        c = Fraction(other)
        return HForm(self.degree, {e: v * c for e, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __pow__(self, n):
        result = HForm.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, HForm):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self):
        return f"HForm({self.degree}, {self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        out = []
        for exp, c in self.terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, exp) if k)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    # -- calculus and substitution -------------------------------------

    def partial(self, var):
        return partial(self, var)

    def evaluate(self, point):
        """Evaluate at a point whose coordinates support + and * (rationals,
        number field elements, ...)."""
        xs = list(point)
        powers = [[1] for _ in range(3)]
        for i in range(3):
            for _ in range(self.degree):
                powers[i].append(powers[i][-1] * xs[i])
        total = 0
        for (a, b, c), coef in self._coeffs.items():
            total = total + powers[0][a] * powers[1][b] * powers[2][c] * coef
        return total

    def gradient(self, point):
        return tuple(partial(self, v).evaluate(point) for v in VARS)

    def compose(self, matrix):
        """The form v -> f(M v) for a 3x3 rational matrix M (list of rows)."""
        images = [HForm.linear(*row) for row in matrix]
        powers = [[HForm.constant(1)] for _ in range(3)]
        for i in range(3):
            for _ in range(self.degree):
                powers[i].append(powers[i][-1] * images[i])
        total = HForm(self.degree)
        for (a, b, c), coef in self._coeffs.items():
            total = total + powers[0][a] * powers[1][b] * powers[2][c] * coef
        return total

    def primitive(self):
        """Scaled copy with coprime integer coefficients, leading one positive."""
        if self.is_zero():
            return self
        terms = self.terms()
        den = 1
        for _, c in terms:
            den = den * c.denominator // _gcd(den, c.denominator)
        nums = [int(c * den) for _, c in terms]
        g = 0
        for n in nums:
            g = _gcd(g, n)
        if nums[0] < 0:
            g = -g
        return HForm(self.degree, {e: n // g for (e, _), n in zip(terms, nums)})

    def integer_coefficients(self):
        """Coefficient table of the primitive integer multiple, as Python ints."""
        return {e: int(c) for e, c in self.primitive()._coeffs.items()}


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def multiply(a, b):
    """Exact product of two forms."""
    if a.is_zero() or b.is_zero():
        return HForm(a.degree + b.degree)
    table = {}
    for ea, ca in a._coeffs.items():
        for eb, cb in b._coeffs.items():
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            table[e] = table.get(e, 0) + ca * cb
    return HForm(a.degree + b.degree, table)


def product(forms):
    result = HForm.constant(1)
    for f in forms:
        result = multiply(result, f)
    return result


def partial(f, var):
    """Formal partial derivative; a constant differentiates to the zero form."""
    i = _var_index(var)
    if f.degree == 0:
        return HForm(0)
    table = {}
    for exp, c in f._coeffs.items():
        if exp[i]:
            e = list(exp)
            e[i] -= 1
            table[tuple(e)] = c * exp[i]
    return HForm(f.degree - 1, table)


# ---------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Dense univariate polynomial over Q; ``coeffs[i]`` multiplies s^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, n, c=1):
        return cls([0] * n + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self):
        if self.is_zero():
            return self
        lead = self.lc()
        return UniPoly([c / lead for c in self.coeffs])

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, s):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    def __add__(self, other):
        other = _as_uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_uni(other))

    def __rsub__(self, other):
        return _as_uni(other) - self

    def __mul__(self, other):
        other = _as_uni(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = UniPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _as_uni(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lc()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"


def _as_uni(v):
    return v if isinstance(v, UniPoly) else UniPoly([v])


def gcd_uni(a, b):
    """Monic gcd over Q."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def ext_gcd_uni(a, b):
    """(g, u, v) with u*a + v*b = g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly([1]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lead = r0.lc()
    return r0.monic(), s0 * (1 / lead), t0 * (1 / lead)


def is_squarefree(p):
    if p.degree <= 1:
        return True
    return gcd_uni(p, p.derivative()).degree == 0


def _rational_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def irreducible_factors(p):
    """Monic irreducible factors over Q with multiplicities, sorted by
    (degree, coefficients).

    Degrees one and two are handled directly; higher degrees go through
    sympy's univariate factorizer.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    p = p.monic()
    if p.degree <= 0:
        return []
    if p.degree == 1:
        return [(p, 1)]
    if p.degree == 2:
        c0, c1, _ = p.coeffs
        root = _rational_sqrt(c1 * c1 - 4 * c0)
        if root is None:
            return [(p, 1)]
        r1, r2 = (-c1 + root) / 2, (-c1 - root) / 2
        if r1 == r2:
            return [(UniPoly([-r1, 1]), 2)]
        return sorted([(UniPoly([-r1, 1]), 1), (UniPoly([-r2, 1]), 1)],
                      key=lambda t: t[0].coeffs)
    return _sympy_factors(p)


def _sympy_factors(p):
    import sympy

    s = sympy.Symbol("s")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                       for c in reversed(p.coeffs)], s, domain="QQ")
    _, facs = poly.factor_list()
    out = []
    for fac, mult in facs:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        out.append((UniPoly(cs).monic(), int(mult)))
    return sorted(out, key=lambda t: (t[0].degree, t[0].coeffs))


# ---------------------------------------------------------------------------
# lines and resultants


def line_parametrization(line):
    """Two rational points spanning the line ax + by + cz = 0.

    Rule: if c != 0 use (c, 0, -a) and (0, c, -b); otherwise if b != 0 use
    (b, -a, 0) and (0, 0, 1); otherwise (the line x = 0) use (0, 1, 0) and
    (0, 0, 1).  The point s*P1 + t*P2 is what restrictions substitute.
    """
    from .errors import InvalidComponent

    if line.degree != 1 or line.is_zero():
        raise InvalidComponent("a line must be a nonzero linear form")
    a, b, c = (line.coefficient(e) for e in monomial_basis(1))
    if c:
        return (c, Fraction(0), -a), (Fraction(0), c, -b)
    if b:
        return (b, -a, Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))
    return (Fraction(0), Fraction(1), Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))


def restrict_to_line(f, line):
    """Restriction of f to the line, as a polynomial in s with t = 1.

    The restriction is really the binary form f(s*P1 + t*P2) of degree
    ``f.degree``; when the returned polynomial has smaller degree the
    difference is the multiplicity of the root t = 0, i.e. of the point P1.
    Root multiplicities are intersection multiplicities with the line.
    """
    p1, p2 = line_parametrization(line)
    coords = [UniPoly([p2[i], p1[i]]) for i in range(3)]
    return f.evaluate(coords) if not f.is_zero() else UniPoly()


def _det(matrix):
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = None
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        term = None
        for i, j in enumerate(perm):
            entry = matrix[i][j]
            if entry is None:
                term = None
                break
            term = entry if term is None else term * entry
        else:
            if term is None:
                continue
            term = term if sign > 0 else -term
            total = term if total is None else total + term
    return total


def _perm_sign(perm):
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def resultant_eliminating(f, g, var):
    """Sylvester resultant of f and g with respect to ``var``.

    The result is a form in the two remaining variables.  Both inputs must
    actually involve ``var``.
    """
    from .errors import InvalidComponent

    fs = f.coefficients_in(var)
    gs = g.coefficients_in(var)
    m, n = len(fs) - 1, len(gs) - 1
    if m < 1 or n < 1:
        raise InvalidComponent(f"both forms must involve {var}; shear first")
    size = m + n
    rows = []
    for i in range(n):
        row = [None] * size
        for j, c in enumerate(reversed(fs)):
            row[i + j] = None if c.is_zero() else c
        rows.append(row)
    for i in range(m):
        row = [None] * size
        for j, c in enumerate(reversed(gs)):
            row[i + j] = None if c.is_zero() else c
        rows.append(row)
    res = _det(rows)
    degree = f.degree * n + g.degree * m - m * n
    if res is None or res.is_zero():
        return HForm(degree)
    return res


def dehomogenize(form, var, unit):
    """Polynomial in ``var`` obtained by setting ``unit`` to 1 in a form
    that involves only those two variables."""
    i, j = _var_index(var), _var_index(unit)
    coeffs = [Fraction(0)] * (form.degree + 1)
    for exp, c in form.terms():
        if exp[i] + exp[j] != form.degree:
            raise ValueError("form involves a third variable")
        coeffs[exp[i]] = c
    return UniPoly(coeffs)
