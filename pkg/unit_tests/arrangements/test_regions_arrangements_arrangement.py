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

import unit_tests.utils as ut_utils
import regions.coxeter.utilities.exceptions as regions_exceptions
from regions.coxeter.arrangements import arrangement as arrangement_module
from regions.coxeter.arrangements import roots as roots_module
from regions.coxeter.utilities import linalg
from regions.coxeter.utilities.scalar import (
    FIELD_QR5,
    Vector,
    canonicalize_normal,
)

A2_TEXT = """# the braid arrangement of A2
dim 3 field Q
0 1 -1
1 -1 0
1 0 -1
"""


def reflection_arrangement(label):
    return roots_module.coxeter_arrangement(roots_module.root_system(label))


class TestArrangement(ut_utils.BaseTestCase):

    def test_from_normals_merges_and_sorts(self):
        arrangement = arrangement_module.from_normals(
            [[2, -2, 0], [0, 1, -1], [-1, 0, 1], [1, -1, 0]])
        self.assertEqual(len(arrangement), 3)
        self.assertEqual(arrangement.normals,
                         (Vector([0, 1, -1]), Vector([1, -1, 0]),
                          Vector([1, 0, -1])))
        self.assertEqual(arrangement.rank, 2)
        self.assertEqual(arrangement.center_dimension, 1)
        self.assertEqual(arrangement.index_of([-3, 0, 3]), 2)

    def test_from_normals_errors(self):
        with self.assertRaises(regions_exceptions.ZeroVector):
            arrangement_module.from_normals([[0, 0], [1, 0]])
        with self.assertRaises(regions_exceptions.MixedField):
            arrangement_module.from_normals(
                [Vector([1, 0]), Vector(['r5', 1])])
        with self.assertRaises(regions_exceptions.InputError):
            arrangement_module.from_normals([[1, 0], [1, 0, 0]])
        with self.assertRaises(regions_exceptions.InputError):
            arrangement_module.from_normals([])

    def test_flats(self):
        arrangement = reflection_arrangement('A3')
        flat = arrangement.flat_of([0, 1])
        self.assertEqual(flat.rank, 2)
        self.assertEqual(flat.dim, 2)
        self.assertTrue(arrangement.contains_flat(flat))
        self.assertEqual(len(flat.hyperplanes), 3)
        with self.assertRaises(regions_exceptions.FlatNotInLattice):
            arrangement.flat_spanned([[1, 0, 0, 0]])

    def test_localize_and_restrict(self):
        arrangement = reflection_arrangement('A3')
        flat = arrangement.flat_spanned([[1, -1, 0, 0]])
        self.assertEqual(len(arrangement_module.localize(arrangement, flat)),
                         1)
        restricted = arrangement_module.restrict(arrangement, flat)
        self.assertEqual(len(restricted), 3)
        self.assertEqual(restricted.dim, 3)
        self.assertEqual(restricted.rank, 2)
        plane = reflection_arrangement('B2')
        with self.assertRaises(regions_exceptions.InvalidParams):
            arrangement_module.restrict(plane, plane.flat_of([0, 1]))

    def test_restriction_order_does_not_matter(self):
        arrangement = reflection_arrangement('A4')
        first = arrangement.flat_of([0])
        step = arrangement_module.restrict(arrangement, first)
        basis = arrangement_module.restriction_basis(first)
        for other in range(1, len(arrangement)):
            if other in first.hyperplanes:
                continue
            image = [arrangement.normals[other].dot(b) for b in basis]
            two_step = arrangement_module.restrict(
                step, step.flat_of([step.index_of(image)]))
            direct = arrangement_module.restrict(
                arrangement, arrangement.flat_of([0, other]))
            self.assertEqual(len(two_step), len(direct))
            self.assertIsNotNone(
                arrangement_module.find_isomorphism(two_step, direct))

    def test_lattice_and_characteristic_polynomial(self):
        lattice = arrangement_module.intersection_lattice(
            reflection_arrangement('A3'))
        # partitions of a four element set
        self.assertEqual(len(lattice), 15)
        self.assertPolynomial(
            arrangement_module.characteristic_polynomial(
                reflection_arrangement('B2')), 3, -4, 1)

    def test_exponents(self):
        self.assertEqual(
            arrangement_module.exponents(reflection_arrangement('A3')),
            arrangement_module.Exponents((1, 2, 3), 3, 1))
        self.assertEqual(
            arrangement_module.exponents(
                reflection_arrangement('I2(5)')).values, (1, 4))
        self.assertEqual(
            arrangement_module.exponents(
                reflection_arrangement('H3')).values, (1, 5, 9))

    def test_exponents_not_split(self):
        generic = arrangement_module.from_normals(
            [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
        with self.assertRaises(regions_exceptions.NotIntegerSplit):
            arrangement_module.exponents(generic)

    def test_lattice_guard(self):
        with self.assertRaises(regions_exceptions.LatticeTooLarge):
            arrangement_module.intersection_lattice(
                reflection_arrangement('A3'),
                {'max_lattice_hyperplanes': 5})
        with self.assertRaises(regions_exceptions.LatticeTooLarge):
            arrangement_module.exponents(
                reflection_arrangement('A3'), {'max_lattice_rank': 2})

    def test_essentialize(self):
        arrangement = reflection_arrangement('A2')
        essential, pivots = arrangement.essentialize()
        self.assertEqual(essential.dim, 2)
        self.assertEqual(len(essential), 3)
        point = arrangement.lift_point((1, 2), pivots)
        self.assertEqual(point.dim, 3)


class TestArrangementFiles(ut_utils.BaseTestCase):

    def test_parse_and_format(self):
        arrangement = arrangement_module.parse_arrangement(A2_TEXT)
        self.assertEqual(arrangement, reflection_arrangement('A2'))
        self.assertEqual(arrangement_module.format_arrangement(arrangement),
                         A2_TEXT.split('\n', 1)[1])

    def test_golden_round_trip(self):
        arrangement = reflection_arrangement('H3')
        text = arrangement_module.format_arrangement(arrangement)
        self.assertTrue(text.startswith('dim 3 field Qr5\n'))
        again = arrangement_module.parse_arrangement(text)
        self.assertEqual(again, arrangement)
        self.assertEqual(again.field, FIELD_QR5)

    def test_parse_errors_name_the_line(self):
        cases = [
            ("dim 2 field Q\n1 0\n1 x\n", 3),
            ("dim 2 field Q\n1 0 0\n", 2),
            ("dim 2 field Q\n\n0 0\n", 3),
            ("dim 2 field Q\nr5 1\n", 2),
            ("dim two field Q\n", 1),
        ]
        for text, line in cases:
            with self.assertRaises(regions_exceptions.ParseError) as ctx:
                arrangement_module.parse_arrangement(text, source='a.txt')
            self.assertEqual(ctx.exception.line, line)
            self.assertIn('a.txt:{}'.format(line), str(ctx.exception))
        with self.assertRaises(regions_exceptions.ParseError):
            arrangement_module.parse_arrangement("# nothing\n")

    def test_read_and_write(self):
        arrangement = reflection_arrangement('A2')
        with ut_utils.patch_open() as (_open, _file):
            arrangement_module.write_arrangement(arrangement, 'a2.txt')
            _open.assert_called_once_with('a2.txt', 'w')
            _file.write.assert_called_once_with(
                arrangement_module.format_arrangement(arrangement))
        with ut_utils.patch_open() as (_open, _file):
            _file.read.return_value = A2_TEXT
            self.assertEqual(arrangement_module.read_arrangement('a2.txt'),
                             arrangement)


class TestIsomorphism(ut_utils.BaseTestCase):

    def _assert_maps(self, first, second, matrix):
        source = first.essentialize()[0]
        target = set(second.essentialize()[0].normals)
        images = {canonicalize_normal(Vector(linalg.mat_vec(matrix, n)))
                  for n in source.normals}
        self.assertEqual(images, target)

    def test_type_a_restrictions(self):
        for n in range(2, 6):
            arrangement = reflection_arrangement('A{}'.format(n))
            smaller = reflection_arrangement('A{}'.format(n - 1))
            for i in range(len(arrangement)):
                restricted = arrangement_module.restrict(
                    arrangement, arrangement.flat_of([i]))
                matrix = arrangement_module.find_isomorphism(
                    restricted, smaller)
                self.assertIsNotNone(matrix, 'A{} hyperplane {}'.format(n, i))
                self._assert_maps(restricted, smaller, matrix)

    def test_type_b_restrictions(self):
        for n in range(2, 5):
            arrangement = reflection_arrangement('B{}'.format(n))
            smaller = reflection_arrangement('B{}'.format(n - 1))
            for i in range(len(arrangement)):
                restricted = arrangement_module.restrict(
                    arrangement, arrangement.flat_of([i]))
                matrix = arrangement_module.find_isomorphism(
                    restricted, smaller)
                self.assertIsNotNone(matrix, 'B{} hyperplane {}'.format(n, i))
                self._assert_maps(restricted, smaller, matrix)

    def test_not_isomorphic(self):
        self.assertIsNone(arrangement_module.find_isomorphism(
            reflection_arrangement('A2'), reflection_arrangement('B2')))
        # four lines whose cross ratio is not harmonic
        generic = arrangement_module.from_normals(
            [[1, 0], [0, 1], [1, 1], [1, 3]])
        self.assertIsNone(arrangement_module.find_isomorphism(
            generic, reflection_arrangement('B2')))

    def test_no_frame(self):
        with self.assertRaises(regions_exceptions.NoFrame):
            arrangement_module.find_isomorphism(
                reflection_arrangement('A1xA2'),
                reflection_arrangement('A1xA2'))
