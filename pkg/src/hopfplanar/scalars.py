"""Exact arithmetic in the quadratic field Q(delta), delta**2 = n.

The loop parameter of the planar algebra attached to an n-dimensional Hopf
algebra satisfies delta**2 = n, so every quantity the engine computes lives
in Q(delta).  A scalar is stored as a pair of rationals (rat, coef) meaning
rat + coef*delta.  When n is a perfect square the field collapses to Q: delta
is the integer sqrt(n) and coef is normalised to zero at construction, so
equality stays a plain component comparison in both regimes.  Division is by
conjugation: 1/(c + d*delta) = (c - d*delta)/(c**2 - d**2*n).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


class ScalarField:
    """The field Q(delta) with delta**2 = n, for a fixed integer n >= 1."""

    __slots__ = ("n", "sqrt")

    def __init__(self, n):
        if not isinstance(n, int) or n < 1:
            raise ValueError("field parameter n must be a positive integer")
        self.n = n
        r = isqrt(n)
        # rational value of delta when n is a perfect square, else None
        self.sqrt = r if r * r == n else None

    def __eq__(self, other):
        if isinstance(other, ScalarField):
            return self.n == other.n
        return NotImplemented

    def __hash__(self):
        return hash(("ScalarField", self.n))

    def __repr__(self):
        return f"ScalarField(n={self.n})"

    def scalar(self, rat=0, coef=0):
        """Build the scalar rat + coef*delta, collapsing delta if rational."""
        rat = Fraction(rat)
        coef = Fraction(coef)
        if coef and self.sqrt is not None:
            rat += coef * self.sqrt
            coef = Fraction(0)
        return Scalar(self, rat, coef)

    @property
    def zero(self):
        return Scalar(self, Fraction(0), Fraction(0))

    @property
    def one(self):
        return Scalar(self, Fraction(1), Fraction(0))

    @property
    def delta(self):
        return self.scalar(0, 1)


def make_delta(n, sign=1):
    """The chosen square root sign*sqrt(n) as a Scalar of ScalarField(n)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return ScalarField(n).scalar(0, sign)


class Scalar:
    """An element rat + coef*delta of Q(delta).

    Arithmetic freely mixes Scalars with int and Fraction operands; two
    Scalars may be combined when they share a field or when one of them is
    purely rational (coef == 0), in which case it is coerced into the other
    field.
    """

    __slots__ = ("field", "rat", "coef")

    def __init__(self, field, rat, coef):
        self.field = field
        self.rat = rat
        self.coef = coef

    # -- coercion -----------------------------------------------------------

    def _pair(self, other):
        """Return (a, b) with matching fields, or None if incompatible."""
        if isinstance(other, Scalar):
            if other.field.n == self.field.n:
                return self, other
            if other.coef == 0:
                return self, Scalar(self.field, other.rat, Fraction(0))
            if self.coef == 0:
                return Scalar(other.field, self.rat, Fraction(0)), other
            raise ValueError(
                f"cannot mix scalars of Q(sqrt {self.field.n}) "
                f"and Q(sqrt {other.field.n})"
            )
        if isinstance(other, (int, Fraction)):
            return self, Scalar(self.field, Fraction(other), Fraction(0))
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Scalar(a.field, a.rat + b.rat, a.coef + b.coef)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, -self.rat, -self.coef)

    def __pos__(self):
        return self

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Scalar(a.field, a.rat - b.rat, a.coef - b.coef)

    def __rsub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Scalar(a.field, b.rat - a.rat, b.coef - a.coef)

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = a.field.n
        return Scalar(
            a.field,
            a.rat * b.rat + a.coef * b.coef * n,
            a.rat * b.coef + a.coef * b.rat,
        )

    __rmul__ = __mul__

    def inverse(self):
        c, d, n = self.rat, self.coef, self.field.n
        norm = c * c - d * d * n
        if norm == 0:
            # c**2 == n*d**2 forces c == d == 0: n is never a rational square
            # here, since perfect squares collapse coef to 0 at construction.
            raise ZeroDivisionError("scalar is zero")
        return Scalar(self.field, c / norm, -d / norm)

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = Scalar(self.field, Fraction(1), Fraction(0))
        for _ in range(abs(exponent)):
            result = result * base
        return result

    # -- predicates and hashing ---------------------------------------------

    def __bool__(self):
        return bool(self.rat) or bool(self.coef)

    @property
    def is_rational(self):
        return self.coef == 0

    def as_fraction(self):
        if self.coef != 0:
            raise ValueError(f"{self} is irrational")
        return self.rat

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if self.coef == 0 and other.coef == 0:
                return self.rat == other.rat
            return self.field.n == other.field.n and \
                self.rat == other.rat and self.coef == other.coef
        if isinstance(other, (int, Fraction)):
            return self.coef == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.coef == 0:
            return hash(self.rat)
        return hash((self.rat, self.coef, self.field.n))

    # -- rendering and serialisation ----------------------------------------

    def __str__(self):
        if self.coef == 0:
            return str(self.rat)
        if self.coef == 1:
            delta = "δ"
        elif self.coef == -1:
            delta = "-δ"
        else:
            delta = f"{self.coef}·δ"
        if self.rat == 0:
            return delta
        sign = "-" if delta.startswith("-") else "+"
        return f"{self.rat} {sign} {delta.lstrip('-')}"

    def __repr__(self):
        return f"Scalar({self})"

    def canonical_text(self):
        """Fixed-shape rendering "a + b·δ" used in machine-readable reports."""
        return f"{self.rat} + {self.coef}·δ"

    def to_json(self):
        """JSON form {"rat": [p, q], "delta": [r, s]} with q, s > 0 reduced."""
        return {
            "rat": [self.rat.numerator, self.rat.denominator],
            "delta": [self.coef.numerator, self.coef.denominator],
        }

    @classmethod
    def from_json(cls, field, data):
        rat = Fraction(int(data["rat"][0]), int(data["rat"][1]))
        coef = Fraction(int(data["delta"][0]), int(data["delta"][1]))
        return field.scalar(rat, coef)
