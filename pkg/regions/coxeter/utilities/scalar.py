# Copyright 2021 Canonical Ltd.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact arithmetic in Q and in the real quadratic field Q(r5).

A :class:`Scalar` is ``a + b*r5`` with ``a`` and ``b`` arbitrary precision
rationals and ``r5`` the positive square root of 5. Nothing is ever rounded;
the sign of a value is decided exactly by comparing squares.

The text syntax accepted by :meth:`Scalar.parse` is the one used in
arrangement files::

    3        -1/2       r5      -r5      1/2*r5      1/2+3/4*r5      2-r5
"""

import functools
import math
import re
from fractions import Fraction

import sympy

import regions.coxeter.utilities.exceptions as regions_exceptions

FIELD_Q = 'Q'
FIELD_QR5 = 'Qr5'
FIELDS = (FIELD_Q, FIELD_QR5)

_ZERO = Fraction(0)
_SYMPY_R5 = sympy.sqrt(5)

_RATIONAL = r'[+-]?\d+(?:/\d+)?'
_SCALAR_RE = re.compile(
    r'^(?P<a>{q})?'
    r'(?:(?P<bsign>^[+-]?|[+-])(?:(?P<b>\d+(?:/\d+)?)\*)?r5)?$'.format(
        q=_RATIONAL))


def _sign_of_fraction(value):
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


@functools.total_ordering
class Scalar:
    """Immutable element of Q or Q(r5)."""

    __slots__ = ('a', 'b')

    def __init__(self, a=0, b=0):
        """Create a scalar ``a + b*r5``.

        :param a: Rational part
        :type a: Union[int, Fraction, str]
        :param b: Coefficient of r5
        :type b: Union[int, Fraction, str]
        """
        object.__setattr__(self, 'a', Fraction(a))
        object.__setattr__(self, 'b', Fraction(b))

    def __setattr__(self, name, value):
        """Refuse mutation; scalars are values."""
        raise AttributeError("Scalar is immutable")

    @property
    def is_rational(self):
        """Whether the r5 coefficient vanishes."""
        return not self.b

    @property
    def field(self):
        """Smallest field tag containing this value."""
        return FIELD_Q if not self.b else FIELD_QR5

    @classmethod
    def parse(cls, text):
        """Parse the arrangement-file scalar syntax.

        :param text: Text such as ``-1/2`` or ``1/2+3/4*r5``
        :type text: str
        :returns: Parsed value
        :rtype: Scalar
        :raises: regions_exceptions.ParseError
        """
        text = text.strip()
        match = _SCALAR_RE.match(text)
        if not text or not match or (match.group('a') is None and
                                     'r5' not in text):
            raise regions_exceptions.ParseError(
                "not a scalar: '{}'".format(text))
        try:
            a = Fraction(match.group('a')) if match.group('a') else _ZERO
            b = _ZERO
            if 'r5' in text:
                b = (Fraction(match.group('b')) if match.group('b')
                     else Fraction(1))
                if match.group('bsign') == '-':
                    b = -b
        except ZeroDivisionError:
            raise regions_exceptions.ParseError(
                "zero denominator in scalar: '{}'".format(text))
        return cls(a, b)

    @classmethod
    def from_sympy(cls, expr):
        """Convert a sympy number of the form ``a + b*sqrt(5)``.

        :param expr: Rational or element of Q(sqrt(5)) as a sympy expression
        :type expr: sympy.Expr
        :returns: The same value as a Scalar
        :rtype: Scalar
        :raises: regions_exceptions.InputError for any other number
        """
        expr = sympy.sympify(expr)
        if expr.is_Rational:
            return cls(Fraction(int(expr.p), int(expr.q)))
        expr = sympy.expand(sympy.radsimp(expr))
        b = expr.coeff(_SYMPY_R5)
        a = sympy.expand(expr - b * _SYMPY_R5)
        if not (a.is_Rational and b.is_Rational):
            raise regions_exceptions.InputError(
                "not an element of Q(r5): {}".format(expr))
        return cls(Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q)))

    def to_sympy(self):
        """Return the value as an exact sympy expression."""
        value = sympy.Rational(self.a.numerator, self.a.denominator)
        if self.b:
            value += sympy.Rational(self.b.numerator,
                                    self.b.denominator) * _SYMPY_R5
        return value

    def sign(self):
        """Return the exact sign of the value under r5 > 0.

        :returns: -1, 0 or 1
        :rtype: int
        """
        sa = _sign_of_fraction(self.a)
        sb = _sign_of_fraction(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # a and b*r5 have opposite signs: the larger square wins
        a2 = self.a * self.a
        b2 = 5 * self.b * self.b
        if a2 == b2:
            return 0
        return sa if a2 > b2 else sb

    def conjugate(self):
        """Return ``a - b*r5``."""
        return Scalar(self.a, -self.b)

    def norm(self):
        """Return the field norm ``a^2 - 5 b^2``.

        :rtype: Fraction
        """
        return self.a * self.a - 5 * self.b * self.b

    def __add__(self, other):
        """Add two scalars."""
        other = as_scalar(other)
        return Scalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        """Subtract two scalars."""
        other = as_scalar(other)
        return Scalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        """Subtract from a plain number."""
        return as_scalar(other) - self

    def __mul__(self, other):
        """Multiply two scalars."""
        other = as_scalar(other)
        if not self.b and not other.b:
            return Scalar(self.a * other.a)
        return Scalar(self.a * other.a + 5 * self.b * other.b,
                      self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Divide exactly, using the conjugate for quadratic divisors."""
        other = as_scalar(other)
        if not other:
            raise ZeroDivisionError("division by zero scalar")
        if not other.b:
            return Scalar(self.a / other.a, self.b / other.a)
        numerator = self * other.conjugate()
        norm = other.norm()
        return Scalar(numerator.a / norm, numerator.b / norm)

    def __rtruediv__(self, other):
        """Divide a plain number by a scalar."""
        return as_scalar(other) / self

    def __neg__(self):
        """Negate."""
        return Scalar(-self.a, -self.b)

    def __abs__(self):
        """Absolute value."""
        return -self if self.sign() < 0 else self

    def __bool__(self):
        """Return True unless the value is zero."""
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        """Exact equality."""
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __lt__(self, other):
        """Exact ordering via the sign of the difference."""
        return (self - as_scalar(other)).sign() < 0

    def __hash__(self):
        """Hash compatible with Fraction for rational values."""
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def __repr__(self):
        """Return a readable representation."""
        return "Scalar('{}')".format(self)

    def __str__(self):
        """Render in the arrangement-file syntax."""
        if not self.b:
            return str(self.a)
        if self.b == 1:
            tail = 'r5'
        elif self.b == -1:
            tail = '-r5'
        else:
            tail = '{}*r5'.format(self.b)
        if not self.a:
            return tail
        if not tail.startswith('-'):
            tail = '+' + tail
        return '{}{}'.format(self.a, tail)


def as_scalar(value):
    """Coerce ints, Fractions and numeric strings into a Scalar.

    :param value: Value to coerce
    :type value: Union[Scalar, int, Fraction, str]
    :returns: The value as a Scalar
    :rtype: Scalar
    :raises: TypeError for floats and other types
    """
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar(value)
    if isinstance(value, str):
        return Scalar.parse(value)
    raise TypeError("cannot use {!r} as an exact scalar".format(value))


ZERO = Scalar(0)
ONE = Scalar(1)
R5 = Scalar(0, 1)
# golden ratio (1 + r5) / 2
GOLDEN = Scalar(Fraction(1, 2), Fraction(1, 2))


class Vector:
    """Fixed-length immutable sequence of scalars with a field tag."""

    __slots__ = ('coords', 'field', '_hash')

    def __init__(self, coords, field=None):
        """Create a vector.

        :param coords: Coordinates; anything :func:`as_scalar` accepts
        :type coords: Iterable
        :param field: Declared field tag; inferred from coordinates if unset
        :type field: Optional[str]
        :raises: regions_exceptions.InputError for an unknown field tag
        """
        coords = tuple(as_scalar(c) for c in coords)
        inferred = FIELD_QR5 if any(c.b for c in coords) else FIELD_Q
        if field is None:
            field = inferred
        if field not in FIELDS:
            raise regions_exceptions.InputError(
                "unknown field '{}'".format(field))
        if field == FIELD_Q and inferred == FIELD_QR5:
            raise regions_exceptions.InputError(
                "irrational coordinate in a vector declared over Q")
        self.coords = coords
        self.field = field
        self._hash = None

    @classmethod
    def parse(cls, line, field=None):
        """Parse whitespace separated scalars.

        :param line: One line of coordinates
        :type line: str
        :param field: Declared field tag
        :type field: Optional[str]
        :rtype: Vector
        """
        return cls([Scalar.parse(token) for token in line.split()],
                   field=field)

    @property
    def dim(self):
        """Ambient dimension."""
        return len(self.coords)

    def is_zero(self):
        """Whether every coordinate vanishes."""
        return not any(self.coords)

    def dot(self, other):
        """Return the standard inner product.

        :param other: Vector or coordinate sequence of equal length
        :type other: Union[Vector, Sequence[Scalar]]
        :rtype: Scalar
        """
        coords = other.coords if isinstance(other, Vector) else other
        total = ZERO
        for x, y in zip(self.coords, coords):
            if x and y:
                total = total + x * y
        return total

    def scale(self, factor):
        """Multiply every coordinate by ``factor``."""
        factor = as_scalar(factor)
        return Vector([c * factor for c in self.coords], field=self.field)

    def with_field(self, field):
        """Return the same coordinates tagged with ``field``."""
        return Vector(self.coords, field=field)

    def __add__(self, other):
        """Coordinatewise sum."""
        return Vector([x + y for x, y in zip(self.coords, other.coords)],
                      field=_join_field(self.field, other.field))

    def __sub__(self, other):
        """Coordinatewise difference."""
        return Vector([x - y for x, y in zip(self.coords, other.coords)],
                      field=_join_field(self.field, other.field))

    def __neg__(self):
        """Negate every coordinate."""
        return Vector([-c for c in self.coords], field=self.field)

    def __len__(self):
        """Return the dimension."""
        return len(self.coords)

    def __iter__(self):
        """Iterate over coordinates."""
        return iter(self.coords)

    def __getitem__(self, index):
        """Return one coordinate."""
        return self.coords[index]

    def __eq__(self, other):
        """Compare coordinates; the field tag is not part of equality."""
        if not isinstance(other, Vector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        """Hash the coordinates."""
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def __lt__(self, other):
        """Lexicographic order on the (a, b) parts of the coordinates."""
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        """Key for the canonical lexicographic sort of normals."""
        return tuple((c.a, c.b) for c in self.coords)

    def __repr__(self):
        """Return a readable representation."""
        return "Vector([{}], field='{}')".format(
            ', '.join(str(c) for c in self.coords), self.field)

    def __str__(self):
        """Whitespace separated coordinates in file syntax."""
        return ' '.join(str(c) for c in self.coords)


def _join_field(first, second):
    return FIELD_QR5 if FIELD_QR5 in (first, second) else FIELD_Q


def sign(value):
    """Return the exact sign of ``value``.

    :param value: Value to inspect
    :type value: Union[Scalar, int, Fraction]
    :returns: -1, 0 or 1
    :rtype: int
    """
    return as_scalar(value).sign()


def canonicalize_normal(vector):
    """Return the canonical representative of the line spanned by ``vector``.

    The vector is divided by its first nonzero coordinate, then multiplied by
    the positive rational that makes every rational and r5 part an integer
    with no common factor. Two vectors span the same line exactly when their
    canonical forms are equal.

    :param vector: Nonzero vector
    :type vector: Vector
    :returns: Canonical normal with first nonzero coordinate positive
    :rtype: Vector
    :raises: regions_exceptions.ZeroVector
    """
    lead = next((c for c in vector.coords if c), None)
    if lead is None:
        raise regions_exceptions.ZeroVector(
            "cannot canonicalize the zero vector")
    coords = [c / lead if c else ZERO for c in vector.coords]
    parts = [p for c in coords for p in (c.a, c.b)]
    denominator = 1
    for part in parts:
        denominator = denominator * part.denominator // math.gcd(
            denominator, part.denominator)
    numerators = [int(p * denominator) for p in parts]
    content = 0
    for n in numerators:
        content = math.gcd(content, n)
    factor = Fraction(denominator, content)
    return Vector([Scalar(c.a * factor, c.b * factor) for c in coords],
                  field=vector.field)
