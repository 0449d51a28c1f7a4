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

"""Central hyperplane arrangements over Q and Q(r5).

An arrangement is stored as its canonical normals in lexicographic order;
sign vectors everywhere in the package refer to that order.

The text format is::

    # comment
    dim 3 field Q
    1 -1 0
    0 1 -1
"""

import collections
import itertools
import logging

import regions.coxeter.utilities.exceptions as regions_exceptions
import regions.coxeter.utilities.generic as generic_utils
import regions.coxeter.utilities.linalg as linalg
from regions.coxeter.utilities.poly import Polynomial, integer_roots
from regions.coxeter.utilities.scalar import (
    FIELD_Q,
    FIELDS,
    ONE,
    ZERO,
    Vector,
    canonicalize_normal,
)

Exponents = collections.namedtuple(
    'Exponents', ['values', 'rank', 'nonessential'])


class Flat:
    """Intersection of hyperplanes, stored by the echelon basis of X^perp.

    :ivar basis: Reduced echelon rows spanning the orthogonal complement
    :ivar pivots: Pivot columns of ``basis``
    :ivar hyperplanes: Indices of the hyperplanes containing the flat
    :ivar ambient: Ambient dimension
    """

    __slots__ = ('basis', 'pivots', 'hyperplanes', 'ambient')

    def __init__(self, basis, pivots, hyperplanes, ambient):
        """Create a flat; use :meth:`Arrangement.flat_of` instead."""
        self.basis = basis
        self.pivots = pivots
        self.hyperplanes = frozenset(hyperplanes)
        self.ambient = ambient

    @property
    def rank(self):
        """Codimension of the flat."""
        return len(self.basis)

    @property
    def dim(self):
        """Dimension of the flat."""
        return self.ambient - len(self.basis)

    def __eq__(self, other):
        """Flats are equal when their echelon bases are."""
        if not isinstance(other, Flat):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        """Hash the echelon basis."""
        return hash(self.basis)

    def __repr__(self):
        """Return a readable representation."""
        return "Flat(dim={}, hyperplanes={})".format(
            self.dim, sorted(self.hyperplanes))


class Arrangement:
    """Finite central arrangement with canonical, sorted normals."""

    def __init__(self, dim, normals, field):
        """Create an arrangement; use :func:`from_normals` instead.

        :param dim: Ambient dimension
        :type dim: int
        :param normals: Canonical normals, sorted and distinct
        :type normals: Tuple[Vector, ...]
        :param field: Field tag
        :type field: str
        """
        self.dim = dim
        self.normals = tuple(normals)
        self.field = field
        self._index = {n: i for i, n in enumerate(self.normals)}
        self._rank = None

    def __len__(self):
        """Return the number of hyperplanes."""
        return len(self.normals)

    def __eq__(self, other):
        """Equal when the canonical normals and ambient dimension agree."""
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.dim == other.dim and self.normals == other.normals

    def __hash__(self):
        """Hash ambient dimension and normals."""
        return hash((self.dim, self.normals))

    def __repr__(self):
        """Return a readable representation."""
        return "Arrangement(dim={}, hyperplanes={}, field='{}')".format(
            self.dim, len(self.normals), self.field)

    @property
    def rank(self):
        """Dimension of the span of the normals."""
        if self._rank is None:
            self._rank = linalg.rank(self.normals, self.dim)
        return self._rank

    @property
    def center_dimension(self):
        """Dimension of the intersection of all hyperplanes."""
        return self.dim - self.rank

    def index_of(self, normal):
        """Return the index of the hyperplane with the given normal.

        :param normal: Any nonzero normal of the hyperplane
        :type normal: Vector
        :rtype: int
        :raises: KeyError if the hyperplane is not in the arrangement
        """
        return self._index[canonicalize_normal(Vector(normal))]

    def flat_of(self, indices):
        """Return the flat cut out by the hyperplanes with given indices.

        :param indices: Hyperplane indices
        :type indices: Iterable[int]
        :rtype: Flat
        """
        return self._flat_from_rows([self.normals[i] for i in indices])

    def _flat_from_rows(self, rows):
        basis, pivots = linalg.rref(rows, self.dim)
        hyperplanes = [i for i, n in enumerate(self.normals)
                       if linalg.in_row_space(basis, pivots, n)]
        return Flat(basis, pivots, hyperplanes, self.dim)

    def flat_spanned(self, vectors):
        """Return the flat orthogonal to ``vectors``.

        :raises: regions_exceptions.FlatNotInLattice when that subspace is
                 not an intersection of hyperplanes of the arrangement
        """
        flat = self._flat_from_rows(list(vectors))
        if not self.contains_flat(flat):
            raise regions_exceptions.FlatNotInLattice(
                "subspace is not an intersection of hyperplanes")
        return flat

    def contains_flat(self, flat):
        """Whether ``flat`` belongs to the intersection lattice."""
        if flat.ambient != self.dim:
            return False
        expected = linalg.rref(
            [n for n in self.normals
             if linalg.in_row_space(flat.basis, flat.pivots, n)],
            self.dim)[0]
        return expected == flat.basis

    def essential_normals(self):
        """Return the pivot columns and the normals restricted to them.

        The order of the normals is kept, so sign vectors carry over.

        :rtype: Tuple[Tuple[int, ...], List[Tuple[Scalar, ...]]]
        """
        pivots = linalg.rref(self.normals, self.dim)[1]
        return pivots, [tuple(n[p] for p in pivots) for n in self.normals]

    def essentialize(self):
        """Return the essential arrangement and the kept coordinates.

        :rtype: Tuple[Arrangement, Tuple[int, ...]]
        """
        pivots, projected = self.essential_normals()
        return (from_normals(projected, dim=len(pivots), field=self.field),
                pivots)

    def lift_point(self, point, pivots):
        """Map a point of the essentialization back to the ambient space."""
        coords = [ZERO] * self.dim
        for value, p in zip(point, pivots):
            coords[p] = value
        return Vector(coords, field=self.field)


def from_normals(vectors, dim=None, field=None):
    """Build an arrangement from arbitrary nonzero normals.

    :param vectors: Normals; proportional ones are merged
    :type vectors: Iterable[Union[Vector, Sequence[Scalar]]]
    :param dim: Ambient dimension, needed for an empty arrangement
    :type dim: Optional[int]
    :param field: Field tag; by default the common declared tag
    :type field: Optional[str]
    :rtype: Arrangement
    :raises: regions_exceptions.ZeroVector, regions_exceptions.MixedField
    """
    vectors = [v if isinstance(v, Vector) else Vector(v, field=field)
               for v in vectors]
    declared = {v.field for v in vectors}
    if len(declared) > 1 or (field is not None and declared - {field}):
        raise regions_exceptions.MixedField(declared | {field or FIELD_Q})
    if field is None:
        field = declared.pop() if declared else FIELD_Q
    if field not in FIELDS:
        raise regions_exceptions.InputError(
            "unknown field '{}'".format(field))
    if dim is None:
        if not vectors:
            raise regions_exceptions.InputError(
                "dimension of an empty arrangement must be given")
        dim = vectors[0].dim
    if any(v.dim != dim for v in vectors):
        raise regions_exceptions.InputError(
            "all normals must have dimension {}".format(dim))
    canonical = {canonicalize_normal(v.with_field(field)) for v in vectors}
    normals = sorted(canonical, key=Vector.sort_key)
    return Arrangement(dim, normals, field)


def localize(arrangement, flat):
    """Return the hyperplanes containing ``flat``.

    :rtype: Arrangement
    :raises: regions_exceptions.FlatNotInLattice
    """
    if not arrangement.contains_flat(flat):
        raise regions_exceptions.FlatNotInLattice(
            "flat does not belong to the intersection lattice")
    return from_normals(
        [arrangement.normals[i] for i in sorted(flat.hyperplanes)],
        dim=arrangement.dim, field=arrangement.field)


def restriction_basis(flat):
    """Return the basis of ``flat`` used for restricted coordinates."""
    return linalg.nullspace(flat.basis, flat.ambient)


def restrict(arrangement, flat):
    """Return the arrangement induced inside ``flat``.

    Coordinates are taken in the basis of :func:`restriction_basis`.

    :rtype: Arrangement
    :raises: regions_exceptions.FlatNotInLattice,
             regions_exceptions.InvalidParams for the zero flat
    """
    if not arrangement.contains_flat(flat):
        raise regions_exceptions.FlatNotInLattice(
            "flat does not belong to the intersection lattice")
    if flat.dim == 0:
        raise regions_exceptions.InvalidParams(
            "cannot restrict to the zero subspace")
    basis = restriction_basis(flat)
    images = []
    for i, normal in enumerate(arrangement.normals):
        if i in flat.hyperplanes:
            continue
        images.append(Vector([normal.dot(b) for b in basis],
                             field=arrangement.field))
    restricted = from_normals(images, dim=len(basis), field=arrangement.field)
    logging.debug("Restriction to a flat of dimension {}: {} hyperplanes"
                  .format(flat.dim, len(restricted)))
    return restricted


class FlatLattice:
    """Intersection lattice with Moebius values mu(V, X)."""

    def __init__(self, arrangement, by_rank, mobius):
        """Create a lattice; use :func:`intersection_lattice` instead."""
        self.arrangement = arrangement
        self.by_rank = by_rank
        self.mobius = mobius

    def __len__(self):
        """Return the number of flats."""
        return sum(len(level) for level in self.by_rank)

    def __iter__(self):
        """Iterate over flats by increasing rank."""
        return itertools.chain.from_iterable(self.by_rank)

    def __contains__(self, flat):
        """Whether ``flat`` is one of the flats."""
        return flat in self.mobius


def check_lattice_guard(arrangement, guards=None):
    """Raise LatticeTooLarge when the arrangement exceeds the guards."""
    max_rank = generic_utils.guard_value(guards, 'max_lattice_rank')
    max_size = generic_utils.guard_value(guards, 'max_lattice_hyperplanes')
    if arrangement.rank > max_rank:
        raise regions_exceptions.LatticeTooLarge(
            'max_lattice_rank', max_rank, arrangement.rank)
    if len(arrangement) > max_size:
        raise regions_exceptions.LatticeTooLarge(
            'max_lattice_hyperplanes', max_size, len(arrangement))


def intersection_lattice(arrangement, guards=None):
    """Build every flat by iterated closure and compute Moebius values.

    :param arrangement: Arrangement
    :type arrangement: Arrangement
    :param guards: Guard values, see generic_utils.DEFAULT_GUARDS
    :type guards: Optional[Dict[str, int]]
    :rtype: FlatLattice
    :raises: regions_exceptions.LatticeTooLarge
    """
    check_lattice_guard(arrangement, guards)
    whole = arrangement.flat_of([])
    by_rank = [[whole]]
    while True:
        level = {}
        for flat in by_rank[-1]:
            for i in range(len(arrangement)):
                if i in flat.hyperplanes:
                    continue
                basis, pivots = linalg.rref(
                    flat.basis + (arrangement.normals[i],), arrangement.dim)
                if basis in level:
                    continue
                hyperplanes = [
                    j for j, n in enumerate(arrangement.normals)
                    if j in flat.hyperplanes or j == i or
                    linalg.in_row_space(basis, pivots, n)]
                level[basis] = Flat(basis, pivots, hyperplanes,
                                    arrangement.dim)
        if not level:
            break
        by_rank.append(sorted(level.values(),
                              key=lambda f: sorted(f.hyperplanes)))
    mobius = {whole: 1}
    for rank in range(1, len(by_rank)):
        for flat in by_rank[rank]:
            total = 0
            for lower in range(rank):
                for other in by_rank[lower]:
                    if other.hyperplanes < flat.hyperplanes:
                        total += mobius[other]
            mobius[flat] = -total
    logging.debug("Intersection lattice with {} flats".format(len(mobius)))
    return FlatLattice(arrangement, by_rank, mobius)


def characteristic_polynomial(arrangement, guards=None):
    """Return the sum of mu(V, X) t^dim(X) over the lattice.

    :rtype: Polynomial
    """
    lattice = intersection_lattice(arrangement, guards)
    coefficients = [0] * (arrangement.dim + 1)
    for flat, value in lattice.mobius.items():
        coefficients[flat.dim] += value
    return Polynomial(coefficients)


def exponents(arrangement, guards=None):
    """Return the exponents of the arrangement from its integer roots.

    :rtype: Exponents
    :raises: regions_exceptions.NotIntegerSplit
    """
    chi = characteristic_polynomial(arrangement, guards)
    roots, cofactor = integer_roots(chi, range(0, len(arrangement) + 1))
    if cofactor.degree > 0:
        raise regions_exceptions.NotIntegerSplit(
            "characteristic polynomial {} does not split over the integers"
            .format(chi.pretty()))
    values = tuple(sorted(r for r in roots if r))
    zeros = len(roots) - len(values)
    return Exponents(values, arrangement.rank, zeros)


def format_arrangement(arrangement):
    """Render the arrangement in the text file format."""
    lines = ['dim {} field {}'.format(arrangement.dim, arrangement.field)]
    lines.extend(str(n) for n in arrangement.normals)
    return '\n'.join(lines) + '\n'


def write_arrangement(arrangement, path):
    """Write the arrangement to ``path`` in the text file format."""
    with open(path, 'w') as stream:
        stream.write(format_arrangement(arrangement))
    logging.info("Wrote {} hyperplanes to {}".format(len(arrangement), path))


def parse_arrangement(text, source=None):
    """Parse the text file format.

    :param text: File content
    :type text: str
    :param source: Name used in error messages
    :type source: Optional[str]
    :rtype: Arrangement
    :raises: regions_exceptions.ParseError
    """
    header = None
    vectors = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if header is None:
            tokens = line.split()
            if (len(tokens) != 4 or tokens[0] != 'dim' or
                    tokens[2] != 'field' or tokens[3] not in FIELDS or
                    not tokens[1].isdigit()):
                raise regions_exceptions.ParseError(
                    "expected 'dim <n> field <Q|Qr5>'", source, number)
            header = (int(tokens[1]), tokens[3])
            continue
        try:
            vector = Vector.parse(line, field=header[1])
        except regions_exceptions.InputError as error:
            raise regions_exceptions.ParseError(str(error), source, number)
        if vector.dim != header[0]:
            raise regions_exceptions.ParseError(
                "expected {} coordinates, found {}".format(
                    header[0], vector.dim), source, number)
        if vector.is_zero():
            raise regions_exceptions.ParseError(
                "zero normal", source, number)
        vectors.append(vector)
    if header is None:
        raise regions_exceptions.ParseError("missing header line", source)
    return from_normals(vectors, dim=header[0], field=header[1])


def read_arrangement(path):
    """Read an arrangement file.

    :rtype: Arrangement
    :raises: regions_exceptions.ParseError
    """
    with open(path, 'r') as stream:
        return parse_arrangement(stream.read(), source=path)


def _pair_sizes(normals):
    """Return the size of the rank two flat through each pair of normals."""
    sizes = {}
    for i, j in itertools.combinations(range(len(normals)), 2):
        basis, pivots = linalg.rref([normals[i], normals[j]])
        size = sum(1 for n in normals
                   if linalg.in_row_space(basis, pivots, n))
        sizes[(i, j)] = sizes[(j, i)] = size
    return sizes


def _find_frame(normals, rank):
    """Return r independent normals and one normal with full support."""
    for chosen in itertools.combinations(range(len(normals)), rank):
        rows = [normals[i] for i in chosen]
        if linalg.rank(rows) != rank:
            continue
        for extra in range(len(normals)):
            if extra in chosen:
                continue
            coefficients = linalg.coordinates(rows, normals[extra])
            if coefficients is not None and all(coefficients):
                return list(chosen), extra, coefficients
    raise regions_exceptions.NoFrame(
        "no projective frame among {} normals of rank {}".format(
            len(normals), rank))


def find_isomorphism(first, second):
    """Find a linear map identifying two arrangements.

    Both arrangements are essentialized. The returned matrix M acts on
    normals of the essentialization of ``first`` and sends each of them to
    a multiple of a normal of the essentialization of ``second``,
    bijectively.

    :param first: Source arrangement
    :type first: Arrangement
    :param second: Target arrangement
    :type second: Arrangement
    :returns: Matrix rows, or None if no identification exists
    :rtype: Optional[List[Tuple[Scalar, ...]]]
    :raises: regions_exceptions.NoFrame
    """
    source = first.essentialize()[0]
    target = second.essentialize()[0]
    if source.dim != target.dim or len(source) != len(target):
        return None
    rank = source.dim
    a = [tuple(n) for n in source.normals]
    b = [tuple(n) for n in target.normals]
    if rank == 0:
        return []
    if len(a) == rank:
        return _map_basis(a, b, [ONE] * rank)
    chosen, extra, c = _find_frame(a, rank)
    order = chosen + [extra]
    sizes_a = _pair_sizes(a)
    sizes_b = _pair_sizes(b)
    targets = set(target.normals)
    assignment = []

    def extend():
        position = len(assignment)
        for candidate in range(len(b)):
            if candidate in assignment:
                continue
            if any(sizes_a[(order[p], order[position])] !=
                   sizes_b[(assignment[p], candidate)]
                   for p in range(position)):
                continue
            rows = [b[k] for k in assignment[:rank]]
            if position < rank:
                if linalg.rank(rows + [b[candidate]]) != position + 1:
                    continue
                assignment.append(candidate)
                found = extend()
                if found is not None:
                    return found
                assignment.pop()
                continue
            d = linalg.coordinates(rows, b[candidate])
            if d is None or not all(d):
                continue
            scales = [dl / cl for dl, cl in zip(d, c)]
            matrix = _map_basis([a[k] for k in chosen], rows, scales)
            if all(canonicalize_normal(Vector(linalg.mat_vec(matrix, n)))
                   in targets for n in a):
                return matrix
        return None

    return extend()


def _map_basis(sources, images, scales):
    """Return M with M sources[l] = scales[l] * images[l]."""
    rows = []
    for t in range(len(sources[0])):
        rhs = [s * image[t] for s, image in zip(scales, images)]
        rows.append(linalg.solve(sources, rhs))
    return rows
