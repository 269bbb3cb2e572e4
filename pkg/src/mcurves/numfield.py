"""Arithmetic in simple extensions Q[a]/(m(a)) for small irreducible m.

Used to hold coordinates of singular points that are not rational.  The
modulus is assumed irreducible; inverting a zero divisor raises
``ZeroDivisionError``.
"""
from fractions import Fraction

from .exactpoly import UniPoly, ext_gcd_uni


class NumberField:
    __slots__ = ("modulus",)

    def __init__(self, modulus):
        modulus = modulus.monic()
        if modulus.degree < 1:
            raise ValueError("modulus must have positive degree")
        self.modulus = modulus

    @classmethod
    def rationals(cls):
        return cls(UniPoly([0, 1]))

    @property
    def degree(self):
        return self.modulus.degree

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to another field")
            return value
        if isinstance(value, UniPoly):
            return FieldElement(self, value % self.modulus)
        return FieldElement(self, UniPoly([value]))

    def gen(self):
        return self(UniPoly([0, 1]))

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({list(map(str, self.modulus.coeffs))})"


class FieldElement:
    __slots__ = ("field", "poly")

    def __init__(self, field, poly):
        self.field = field
        self.poly = poly

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, UniPoly([other]))
        return NotImplemented

    def is_zero(self):
        return self.poly.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, -self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, (self.poly * other.poly) % self.field.modulus)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, u, _ = ext_gcd_uni(self.poly, self.field.modulus)
        if g.degree != 0:
            raise ZeroDivisionError("modulus is reducible: hit a zero divisor")
        return FieldElement(self.field, u % self.field.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def rational(self):
        """The value as a Fraction when it lies in Q, else None."""
        if self.poly.degree <= 0:
            return self.poly.coeffs[0] if self.poly.coeffs else Fraction(0)
        return None

    def __repr__(self):
        return f"FieldElement({[str(c) for c in self.poly.coeffs]})"


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def proportional(u, v):
    """True when two vectors over a common field are linearly dependent."""
    return all(c == 0 for c in cross(u, v))
