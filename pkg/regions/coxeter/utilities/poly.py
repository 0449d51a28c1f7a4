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

"""Univariate integer polynomials and products of q-integers."""

import regions.coxeter.utilities.exceptions as regions_exceptions


class Polynomial:
    """Immutable polynomial with integer coefficients, low degree first."""

    __slots__ = ('coefficients',)

    def __init__(self, coefficients=()):
        """Create a polynomial, trimming trailing zeros.

        :param coefficients: Coefficients c0, c1, ...
        :type coefficients: Iterable[int]
        """
        coefficients = [int(c) for c in coefficients]
        while coefficients and not coefficients[-1]:
            coefficients.pop()
        self.coefficients = tuple(coefficients)

    @classmethod
    def monomial(cls, degree, coefficient=1):
        """Return ``coefficient * t^degree``."""
        return cls([0] * degree + [coefficient])

    @classmethod
    def parse_text(cls, text):
        """Parse the text form ``c0 c1 c2 ...``.

        :raises: regions_exceptions.ParseError
        """
        try:
            return cls(int(token) for token in text.split())
        except ValueError:
            raise regions_exceptions.ParseError(
                "not a coefficient list: '{}'".format(text))

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, degree):
        """Return the coefficient of ``t^degree``."""
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def __call__(self, value):
        """Evaluate at an integer by Horner's rule."""
        result = 0
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def __add__(self, other):
        """Sum."""
        other = _as_polynomial(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(self.coefficient(i) + other.coefficient(i)
                          for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        """Negation."""
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        """Difference."""
        return self + (-_as_polynomial(other))

    def __rsub__(self, other):
        """Difference with a constant on the left."""
        return _as_polynomial(other) - self

    def __mul__(self, other):
        """Product."""
        other = _as_polynomial(other)
        if not self.coefficients or not other.coefficients:
            return Polynomial()
        result = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    result[i + j] += a * b
        return Polynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        """Nonnegative integer power."""
        result = Polynomial([1])
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, degree):
        """Return ``t^degree`` times this polynomial."""
        if not self.coefficients:
            return self
        return Polynomial([0] * degree + list(self.coefficients))

    def divide_linear(self, root):
        """Divide by ``t - root`` using synthetic division.

        :returns: Quotient and remainder
        :rtype: Tuple[Polynomial, int]
        """
        quotient = []
        carry = 0
        for c in reversed(self.coefficients):
            carry = carry * root + c
            quotient.append(carry)
        remainder = quotient.pop() if quotient else 0
        return Polynomial(reversed(quotient)), remainder

    def is_palindromic(self):
        """Whether the coefficients read the same both ways."""
        return self.coefficients == tuple(reversed(self.coefficients))

    def __eq__(self, other):
        """Exact coefficient comparison."""
        if isinstance(other, int):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        """Hash the coefficient tuple."""
        return hash(self.coefficients)

    def __bool__(self):
        """Return False for the zero polynomial."""
        return bool(self.coefficients)

    def text(self):
        """Return the coefficient list form ``c0 c1 ...``."""
        return ' '.join(str(c) for c in self.coefficients) or '0'

    def pretty(self, variable='t'):
        """Return the readable form, e.g. ``1 + 2t + 2t^2 + t^3``."""
        terms = []
        for degree, c in enumerate(self.coefficients):
            if not c:
                continue
            if degree == 0:
                body = str(abs(c))
            else:
                power = variable if degree == 1 else '{}^{}'.format(
                    variable, degree)
                body = power if abs(c) == 1 else '{}{}'.format(abs(c), power)
            if not terms:
                terms.append(body if c > 0 else '-' + body)
            else:
                terms.append(('+ ' if c > 0 else '- ') + body)
        return ' '.join(terms) or '0'

    def __repr__(self):
        """Return a readable representation."""
        return "Polynomial([{}])".format(
            ', '.join(str(c) for c in self.coefficients))

    __str__ = pretty


def _as_polynomial(value):
    if isinstance(value, Polynomial):
        return value
    return Polynomial([value])


def q_integer(exponent):
    """Return ``1 + t + ... + t^exponent``."""
    return Polynomial([1] * (exponent + 1))


def f_product(exponents):
    """Return the product of ``1 + t + ... + t^e`` over ``exponents``.

    :param exponents: Multiset of nonnegative integers
    :type exponents: Iterable[int]
    :rtype: Polynomial
    """
    result = Polynomial([1])
    for e in sorted(exponents):
        if e < 0:
            raise regions_exceptions.InvalidParams(
                "negative exponent {}".format(e))
        result = result * q_integer(e)
    return result


def value_at_one(exponents):
    """Return the product of ``e + 1``, the value of F at t = 1."""
    result = 1
    for e in exponents:
        result *= e + 1
    return result


def factors_as(zeta, exponents):
    """Whether ``zeta`` equals ``f_product(exponents)`` exactly.

    Value at one and degree are compared first.

    :param zeta: Rank generating function
    :type zeta: Polynomial
    :param exponents: Multiset of exponents
    :type exponents: Iterable[int]
    :rtype: bool
    """
    exponents = list(exponents)
    if zeta(1) != value_at_one(exponents):
        return False
    if zeta.degree != sum(exponents):
        return False
    return zeta == f_product(exponents)


def integer_roots(polynomial, candidates=None):
    """Strip integer roots by repeated synthetic division.

    :param polynomial: Nonzero polynomial
    :type polynomial: Polynomial
    :param candidates: Candidate roots; by default every nonnegative integer
                       up to the Cauchy bound
    :type candidates: Optional[Iterable[int]]
    :returns: Roots with multiplicity (ascending) and the cofactor
    :rtype: Tuple[List[int], Polynomial]
    """
    if candidates is None:
        lead = abs(polynomial.coefficients[-1])
        bound = 1 + max(abs(c) for c in polynomial.coefficients) // lead
        candidates = range(0, bound + 1)
    roots = []
    remaining = polynomial
    for root in candidates:
        while remaining.degree > 0:
            quotient, remainder = remaining.divide_linear(root)
            if remainder:
                break
            roots.append(root)
            remaining = quotient
    return roots, remaining
