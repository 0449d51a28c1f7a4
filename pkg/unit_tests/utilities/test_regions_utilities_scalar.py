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

import decimal
import random
from fractions import Fraction

import sympy

import unit_tests.utils as ut_utils
import regions.coxeter.utilities.exceptions as regions_exceptions
from regions.coxeter.utilities import scalar


class TestScalar(ut_utils.BaseTestCase):

    def test_parse_and_render(self):
        for text in ('3', '-1/2', 'r5', '-r5', '1/2*r5', '1/2+3/4*r5',
                     '2-r5'):
            self.assertEqual(str(scalar.Scalar.parse(text)), text)
        self.assertEqual(scalar.Scalar.parse('1/2+1/2*r5'), scalar.GOLDEN)
        self.assertEqual(scalar.Scalar.parse('-3/4*r5'),
                         scalar.Scalar(0, Fraction(-3, 4)))

    def test_parse_rejects_garbage(self):
        for text in ('', 'x', '1.5', 'r7', '1/2**r5'):
            with self.assertRaises(regions_exceptions.ParseError):
                scalar.Scalar.parse(text)

    def test_sign_is_exact(self):
        self.assertEqual(scalar.Scalar(2, -1).sign(), -1)
        self.assertEqual(scalar.Scalar(3, -1).sign(), 1)
        self.assertEqual(scalar.Scalar(-3, 1).sign(), -1)
        self.assertEqual(scalar.Scalar(0, 0).sign(), 0)
        # golden ratio squared is golden ratio plus one
        self.assertEqual(scalar.GOLDEN * scalar.GOLDEN - scalar.GOLDEN,
                         scalar.ONE)
        self.assertEqual(scalar.sign(Fraction(-1, 3)), -1)

    def test_field_arithmetic(self):
        x = scalar.Scalar(1, 2)
        y = scalar.Scalar(Fraction(1, 3), -1)
        self.assertEqual((x * y) / y, x)
        self.assertEqual(x - x, scalar.ZERO)
        self.assertEqual(x.conjugate(), scalar.Scalar(1, -2))
        self.assertEqual(x.norm(), 1 - 20)
        self.assertEqual(1 / scalar.GOLDEN, scalar.GOLDEN - 1)
        with self.assertRaises(ZeroDivisionError):
            x / scalar.ZERO

    def test_ordering_and_hash(self):
        self.assertLess(scalar.Scalar(2), scalar.R5)
        self.assertLess(scalar.R5, scalar.Scalar(Fraction(9, 4)))
        self.assertEqual(hash(scalar.Scalar(Fraction(1, 2))),
                         hash(Fraction(1, 2)))
        self.assertEqual(scalar.Scalar(3), 3)
        self.assertTrue(scalar.Scalar(1).is_rational)
        self.assertEqual(scalar.R5.field, scalar.FIELD_QR5)

    def test_immutable(self):
        with self.assertRaises(AttributeError):
            scalar.ONE.a = 2

    def test_as_scalar_refuses_floats(self):
        with self.assertRaises(TypeError):
            scalar.as_scalar(0.5)
        self.assertEqual(scalar.as_scalar('1/3'),
                         scalar.Scalar(Fraction(1, 3)))


class TestVector(ut_utils.BaseTestCase):

    def test_parse_dot_and_arithmetic(self):
        v = scalar.Vector.parse('1 -1/2 r5')
        w = scalar.Vector([2, 2, 1])
        self.assertEqual(v.field, scalar.FIELD_QR5)
        self.assertEqual(v.dim, 3)
        self.assertEqual(v.dot(w), scalar.Scalar(1, 1))
        self.assertEqual(v + w, scalar.Vector.parse('3 3/2 1+r5'))
        self.assertEqual(-w, scalar.Vector([-2, -2, -1]))
        self.assertEqual(w.scale(Fraction(1, 2)),
                         scalar.Vector([1, 1, Fraction(1, 2)]))
        self.assertTrue(scalar.Vector([0, 0]).is_zero())

    def test_field_tags(self):
        with self.assertRaises(regions_exceptions.InputError):
            scalar.Vector(['r5'], field=scalar.FIELD_Q)
        with self.assertRaises(regions_exceptions.InputError):
            scalar.Vector([1], field='Qr7')
        tagged = scalar.Vector([1, 0], field=scalar.FIELD_QR5)
        self.assertEqual(tagged, scalar.Vector([1, 0]))
        self.assertEqual(tagged.with_field(scalar.FIELD_Q).field,
                         scalar.FIELD_Q)

    def test_canonicalize_normal(self):
        self.assertEqual(
            scalar.canonicalize_normal(scalar.Vector(
                [0, Fraction(-2, 3), Fraction(4, 3)])),
            scalar.Vector([0, 1, -2]))
        self.assertEqual(
            scalar.canonicalize_normal(scalar.Vector([-3, 6, 9])),
            scalar.canonicalize_normal(scalar.Vector([1, -2, -3])))
        golden = scalar.Vector([scalar.GOLDEN, 1])
        self.assertEqual(
            scalar.canonicalize_normal(golden),
            scalar.canonicalize_normal(golden.scale(scalar.R5)))
        with self.assertRaises(regions_exceptions.ZeroVector):
            scalar.canonicalize_normal(scalar.Vector([0, 0]))


def _random_scalar(rng, rational=False):
    a = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
    b = 0 if rational else Fraction(rng.randint(-40, 40), rng.randint(1, 12))
    return scalar.Scalar(a, b)


def _decimal_value(value):
    # a + b*r5 to 60 significant digits
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        r5 = decimal.Decimal(5).sqrt()
        a = decimal.Decimal(value.a.numerator) / value.a.denominator
        b = decimal.Decimal(value.b.numerator) / value.b.denominator
        return a + b * r5


class TestScalarProperties(ut_utils.BaseTestCase):

    def test_sign_is_multiplicative(self):
        rng = random.Random(3)
        for _ in range(1000):
            s, t = _random_scalar(rng), _random_scalar(rng)
            self.assertEqual((s * t).sign(), s.sign() * t.sign())

    def test_sign_of_sum_matches_decimal_evaluation(self):
        rng = random.Random(5)
        tolerance = decimal.Decimal(10) ** -50
        for _ in range(1000):
            total = _random_scalar(rng) + _random_scalar(rng)
            approx = _decimal_value(total)
            if not total:
                self.assertLess(abs(approx), tolerance)
                continue
            # exact values in this range are never that close to zero
            self.assertGreater(abs(approx), tolerance)
            self.assertEqual(total.sign(), 1 if approx > 0 else -1)

    def test_sign_near_cancellation(self):
        # 9 - 4*r5 and 161 - 72*r5 are tiny positive units
        for a, b in ((9, -4), (161, -72), (-161, 72)):
            value = scalar.Scalar(a, b)
            self.assertEqual(value.sign(),
                             1 if _decimal_value(value) > 0 else -1)

    def test_canonicalize_normal_is_idempotent_and_scale_invariant(self):
        rng = random.Random(7)
        for _ in range(300):
            rational = rng.random() < 0.5
            coords = [_random_scalar(rng, rational) for _ in range(3)]
            if not any(coords):
                continue
            vector = scalar.Vector(coords, field=scalar.FIELD_QR5)
            canonical = scalar.canonicalize_normal(vector)
            self.assertEqual(scalar.canonicalize_normal(canonical),
                             canonical)
            factor = _random_scalar(rng, rational)
            if not factor:
                continue
            for lam in (factor, -factor):
                self.assertEqual(
                    scalar.canonicalize_normal(vector.scale(lam)),
                    canonical)


class TestScalarSympy(ut_utils.BaseTestCase):

    def test_round_trip(self):
        for value in (scalar.Scalar(Fraction(-3, 7)), scalar.GOLDEN,
                      scalar.R5, scalar.Scalar(2, -1), scalar.ZERO):
            self.assertEqual(scalar.Scalar.from_sympy(value.to_sympy()),
                             value)

    def test_from_sympy_simplifies_quotients(self):
        expr = 1 / (1 + sympy.sqrt(5))
        self.assertEqual(scalar.Scalar.from_sympy(expr),
                         scalar.Scalar(Fraction(-1, 4), Fraction(1, 4)))

    def test_from_sympy_rejects_other_numbers(self):
        for expr in (sympy.sqrt(2), sympy.pi, sympy.Symbol('x')):
            with self.assertRaises(regions_exceptions.InputError):
                scalar.Scalar.from_sympy(expr)


class TestScalarParseErrors(ut_utils.BaseTestCase):

    def test_zero_denominator(self):
        for text in ('1/0', '1/2+1/0*r5', '-3/0'):
            with self.assertRaises(regions_exceptions.ParseError):
                scalar.Scalar.parse(text)
