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

from fractions import Fraction

import mock

import unit_tests.utils as ut_utils
import regions.coxeter.utilities.exceptions as regions_exceptions
from regions.coxeter.utilities import simplex
from regions.coxeter.utilities.scalar import Scalar, as_scalar


class TestSimplexTableau(ut_utils.BaseTestCase):

    def test_maximize(self):
        # max x + y subject to x + 2y <= 4, 3x + y <= 6
        tableau = simplex.SimplexTableau(
            [[1, 2], [3, 1]], [4, 6], [1, 1])
        value, solution = tableau.maximize()
        self.assertEqual(value, Fraction(14, 5))
        self.assertEqual(solution, [Fraction(8, 5), Fraction(6, 5)])

    def test_negative_rhs_rejected(self):
        with self.assertRaises(regions_exceptions.InputError):
            simplex.SimplexTableau([[1]], [-1], [1])

    def test_unbounded(self):
        tableau = simplex.SimplexTableau([[-1]], [1], [1])
        with self.assertRaises(regions_exceptions.InputError):
            tableau.maximize()


class TestMaximizeSlack(ut_utils.BaseTestCase):

    def _check_interior(self, normals, signs, point):
        for normal, s in zip(normals, signs):
            value = sum((as_scalar(a) * b for a, b in zip(normal, point)),
                        Scalar(0))
            self.assertEqual(value.sign(), s)

    def test_open_cone(self):
        normals = [[1, -1, 0], [0, 1, -1], [1, 0, -1]]
        signs = [1, 1, 1]
        slack, point = simplex.maximize_slack(normals, signs)
        self.assertEqual(slack.sign(), 1)
        self._check_interior(normals, signs, point)

    def test_empty_cone(self):
        # x1 > x2, x2 > x3 but x1 < x3
        slack, _ = simplex.maximize_slack(
            [[1, -1, 0], [0, 1, -1], [1, 0, -1]], [1, 1, -1])
        self.assertEqual(slack.sign(), 0)

    def test_stop_when_positive(self):
        normals = [[1, 0], [0, 1], [1, 1]]
        slack, point = simplex.maximize_slack(
            normals, [1, -1, 1], stop_when_positive=True)
        self.assertEqual(slack.sign(), 1)
        self._check_interior(normals, [1, -1, 1], point)

    def test_golden_normals(self):
        normals = [[1, 0], [Scalar.parse('1/2+1/2*r5'), -1]]
        slack, point = simplex.maximize_slack(normals, [1, -1])
        self.assertEqual(slack.sign(), 1)
        self._check_interior(normals, [1, -1], point)

    def test_rational_programs_use_sympy(self):
        self.patch_object(simplex, 'linprog', new=mock.MagicMock(
            wraps=simplex.linprog), name='linprog')
        self.patch_object(simplex, 'SimplexTableau', new=mock.MagicMock(
            wraps=simplex.SimplexTableau), name='tableau')
        normals = [[1, -1], [0, 1]]
        slack, point = simplex.maximize_slack(normals, [1, 1])
        # x = (1, 1/2) gives both forms 1/2
        self.assertEqual(slack, Fraction(1, 2))
        self._check_interior(normals, [1, 1], point)
        self.assertTrue(self.linprog.called)
        self.assertFalse(self.tableau.called)

    def test_golden_programs_use_tableau(self):
        self.patch_object(simplex, 'linprog', name='linprog')
        normals = [[1, 0], [Scalar.parse('1/2+1/2*r5'), -1]]
        slack, point = simplex.maximize_slack(normals, [1, 1])
        self.assertEqual(slack.sign(), 1)
        self._check_interior(normals, [1, 1], point)
        self.assertFalse(self.linprog.called)

    def test_sympy_and_tableau_agree(self):
        normals = [[1, -1, 0], [0, 1, -1], [1, 1, 1], [2, -1, 3]]
        for signs in ([1, 1, 1, 1], [1, -1, 1, -1], [-1, -1, 1, 1]):
            rows = [[as_scalar(c) for c in n] for n in normals]
            sympy_slack, _ = simplex._slack_with_linprog(rows, signs)
            tableau_slack, _ = simplex._slack_with_tableau(
                rows, signs, False)
            self.assertEqual(sympy_slack, tableau_slack)
