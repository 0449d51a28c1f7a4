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

import sympy

import unit_tests.utils as ut_utils
import regions.coxeter.utilities.exceptions as regions_exceptions
from regions.coxeter.utilities import linalg
from regions.coxeter.utilities.scalar import GOLDEN, Scalar


class TestLinalg(ut_utils.BaseTestCase):

    def test_rref_and_rank(self):
        rows, pivots = linalg.rref([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        self.assertEqual(pivots, (0, 1))
        self.assertEqual(rows, ((1, 0, 1), (0, 1, 1)))
        self.assertEqual(linalg.rank([[1, 1], [2, 2]]), 1)
        self.assertEqual(linalg.rank([], 3), 0)

    def test_in_row_space(self):
        basis, pivots = linalg.rref([[1, -1, 0], [0, 1, -1]])
        self.assertTrue(linalg.in_row_space(basis, pivots, [1, 0, -1]))
        self.assertFalse(linalg.in_row_space(basis, pivots, [1, 1, 1]))

    def test_nullspace_one_vector_per_free_column(self):
        basis = linalg.nullspace([[1, -1, 0, 0]], 4)
        self.assertEqual(basis, [(1, 1, 0, 0), (0, 0, 1, 0),
                                 (0, 0, 0, 1)])
        self.assertEqual(linalg.nullspace([[1, 0], [0, 1]], 2), [])

    def test_solve(self):
        solution = linalg.solve([[2, -1], [-1, 2]], [1, 1])
        self.assertEqual(solution, (1, 1))
        golden = linalg.solve([[2, -GOLDEN], [-GOLDEN, 2]], [1, 0])
        self.assertEqual(2 * golden[0] - GOLDEN * golden[1], 1)
        with self.assertRaises(regions_exceptions.InputError):
            linalg.solve([[1, 2], [2, 4]], [1, 1])

    def test_coordinates(self):
        basis = [(1, 1, 0), (0, 0, 1)]
        self.assertEqual(linalg.coordinates(basis, (3, 3, Fraction(1, 2))),
                         (3, Fraction(1, 2)))
        self.assertIsNone(linalg.coordinates(basis, (1, 0, 0)))
        self.assertEqual(linalg.coordinates([], (0, 0)), ())
        self.assertIsNone(linalg.coordinates([], (0, 1)))

    def test_matrix_helpers(self):
        m = [[1, 2], [3, 4]]
        self.assertEqual(linalg.transpose(m), [(1, 3), (2, 4)])
        self.assertEqual(linalg.mat_vec(m, [1, Scalar(0, 1)]),
                         (Scalar(1, 2), Scalar(3, 4)))
        self.assertEqual(linalg.mat_mul(m, linalg.identity(2)),
                         [(1, 2), (3, 4)])

    def test_domain_matrix_field(self):
        self.assertEqual(linalg.domain_matrix([[1, 2]], 2).domain, sympy.QQ)
        golden = linalg.domain_matrix([[1, GOLDEN]], 2)
        self.assertEqual(golden.domain, linalg.QQ_R5)

    def test_rref_over_golden_field(self):
        # the second row is tau times the first
        rows, pivots = linalg.rref([[1, GOLDEN], [GOLDEN, GOLDEN + 1]])
        self.assertEqual(pivots, (0,))
        self.assertEqual(rows, ((1, GOLDEN),))
        rows, pivots = linalg.rref([[2, -GOLDEN], [-GOLDEN, 2]])
        self.assertEqual(pivots, (0, 1))
        self.assertEqual(rows, ((1, 0), (0, 1)))

    def test_nullspace_over_golden_field(self):
        (vector,) = linalg.nullspace([[1, -GOLDEN]], 2)
        self.assertEqual(vector, (GOLDEN, 1))
