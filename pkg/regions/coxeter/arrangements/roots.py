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

"""Finite root systems, their Coxeter groups and Dynkin type recognition.

Root systems live in concrete coordinates: ``A_n`` uses ``n + 1``
coordinates, the exceptional ``E`` types live inside ``R^8`` and ``H3``,
``H4`` and ``I2(5)`` need the golden ratio. Positive roots are decided by
the sign of the pairing with the dominant point.
"""

import collections
import itertools
import logging
import math
import re
from fractions import Fraction

import regions.coxeter.utilities.exceptions as regions_exceptions
import regions.coxeter.utilities.generic as generic_utils
import regions.coxeter.utilities.linalg as linalg
from regions.coxeter.arrangements import arrangement as arrangement_module
from regions.coxeter.utilities.poly import Polynomial
from regions.coxeter.utilities.scalar import (
    FIELD_Q,
    FIELD_QR5,
    GOLDEN,
    ONE,
    ZERO,
    Scalar,
    Vector,
)

HALF = Fraction(1, 2)

_COMPONENT = r'[A-Z]\d+(?:\(\d+\))?'
_COMPONENT_RE = re.compile(r'([A-Z])(\d+)(?:\((\d+)\))?')
_TYPE_RE = re.compile(r'^(?:{c})(?:x?(?:{c}))*$'.format(c=_COMPONENT))

EXCEPTIONAL_DEGREES = {
    'E6': (2, 5, 6, 8, 9, 12),
    'E7': (2, 6, 8, 10, 12, 14, 18),
    'E8': (2, 8, 12, 14, 18, 20, 24, 30),
    'F4': (2, 6, 8, 12),
    'H3': (2, 6, 10),
    'H4': (2, 12, 20, 30),
}

EXCEPTIONAL_ORDERS = {
    'E6': 51840,
    'E7': 2903040,
    'E8': 696729600,
    'F4': 1152,
    'H3': 120,
    'H4': 14400,
}


def _component_key(label):
    match = _COMPONENT_RE.match(label)
    family, rank, m = match.groups()
    return (family, int(rank), int(m or 0))


def _normalize_component(family, rank, m):
    """Return the normalized labels of one irreducible component."""
    if family == 'I':
        if rank != 2 or m is None:
            raise regions_exceptions.UnsupportedType(
                "I2 needs a parameter, e.g. I2(5)")
        return _normalize_component('I2', None, m)
    if family == 'I2':
        return {2: ['A1', 'A1'], 3: ['A2'], 4: ['B2'],
                5: ['I2(5)'], 6: ['I2(6)']}.get(m) or _unsupported(
                    'I2({})'.format(m))
    if m is not None:
        _unsupported('{}{}({})'.format(family, rank, m))
    if family == 'G' and rank == 2:
        return ['I2(6)']
    if family == 'H' and rank == 2:
        return ['I2(5)']
    if family == 'C':
        family = 'B'
    if family == 'B' and rank == 1:
        family = 'A'
    if family == 'D':
        if rank == 2:
            return ['A1', 'A1']
        if rank == 3:
            return ['A3']
    valid = (
        (family == 'A' and rank >= 1) or
        (family == 'B' and rank >= 2) or
        (family == 'D' and rank >= 4) or
        (family == 'E' and rank in (6, 7, 8)) or
        (family == 'F' and rank == 4) or
        (family == 'H' and rank in (3, 4)))
    if not valid:
        _unsupported('{}{}'.format(family, rank))
    return ['{}{}'.format(family, rank)]


def _unsupported(label):
    raise regions_exceptions.UnsupportedType(
        "Unsupported root system type {}".format(label))


def parse_type(label):
    """Parse a type label into sorted normalized components.

    ``C_n`` is identified with ``B_n``, ``D3`` with ``A3``, ``D2`` with
    ``A1xA1``, ``I2(3)`` with ``A2`` and ``I2(4)`` with ``B2``. Primes and
    one pair of enclosing parentheses, as used in preset names, are ignored.

    :param label: Label such as ``A1xA2``, ``(A1A3)''`` or ``I2(5)``
    :type label: str
    :returns: Component labels
    :rtype: Tuple[str, ...]
    :raises: regions_exceptions.UnsupportedType
    """
    text = label.strip().replace("'", '')
    if text.startswith('(') and text.endswith(')'):
        text = text[1:-1]
    if not _TYPE_RE.match(text):
        raise regions_exceptions.UnsupportedType(
            "Cannot parse type label '{}'".format(label))
    components = []
    for family, rank, m in _COMPONENT_RE.findall(text):
        components.extend(_normalize_component(
            family, int(rank), int(m) if m else None))
    return tuple(sorted(components, key=_component_key))


def format_type(components):
    """Join component labels with ``x``."""
    return 'x'.join(components)


def _component_rank(label):
    family, rank, _ = _component_key(label)
    return rank


def type_rank(components):
    """Return the rank of a parsed type."""
    return sum(_component_rank(c) for c in components)


def degrees_of_type(components):
    """Return the degrees of the basic invariants of a parsed type."""
    result = []
    for label in components:
        family, rank, m = _component_key(label)
        if label in EXCEPTIONAL_DEGREES:
            result.extend(EXCEPTIONAL_DEGREES[label])
        elif family == 'A':
            result.extend(range(2, rank + 2))
        elif family == 'B':
            result.extend(range(2, 2 * rank + 1, 2))
        elif family == 'D':
            result.extend(range(2, 2 * rank - 1, 2))
            result.append(rank)
        elif family == 'I':
            result.extend((2, m))
    return sorted(result)


def exponents_of_type(components):
    """Return the exponents (degrees minus one) of a parsed type."""
    return [d - 1 for d in degrees_of_type(components)]


def group_order(components):
    """Return the order of the Coxeter group of a parsed type."""
    order = 1
    for label in components:
        family, rank, m = _component_key(label)
        if label in EXCEPTIONAL_ORDERS:
            order *= EXCEPTIONAL_ORDERS[label]
        elif family == 'A':
            order *= math.factorial(rank + 1)
        elif family == 'B':
            order *= 2 ** rank * math.factorial(rank)
        elif family == 'D':
            order *= 2 ** (rank - 1) * math.factorial(rank)
        elif family == 'I':
            order *= 2 * m
    return order


def _unit(n, i, value=1):
    coords = [0] * n
    coords[i] = value
    return coords


def _difference(n, i, j):
    coords = [0] * n
    coords[i] = 1
    coords[j] = -1
    return coords


def _simple_roots(family, rank, m=None):
    """Return simple roots of an irreducible type in standard coordinates."""
    if family == 'A':
        return [_difference(rank + 1, i, i + 1) for i in range(rank)]
    if family in ('B', 'C', 'D'):
        roots = [_difference(rank, i, i + 1) for i in range(rank - 1)]
        if family == 'B':
            roots.append(_unit(rank, rank - 1))
        elif family == 'C':
            roots.append(_unit(rank, rank - 1, 2))
        else:
            last = [0] * rank
            last[rank - 2] = 1
            last[rank - 1] = 1
            roots.append(last)
        return roots
    if family == 'E':
        roots = [[HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF],
                 [1, 1, 0, 0, 0, 0, 0, 0]]
        roots.extend(_difference(8, i + 1, i) for i in range(6))
        return roots[:rank]
    if family == 'F':
        return [[0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 0, 1],
                [HALF, -HALF, -HALF, -HALF]]
    if family in ('H', 'I'):
        tau = GOLDEN
        sigma = GOLDEN - ONE
        h4 = [[1, 0, 0, 0],
              [-tau * HALF, HALF, sigma * HALF, 0],
              [0, -1, 0, 0],
              [0, HALF, -tau * HALF, sigma * HALF]]
        if family == 'I':
            if m == 6:
                return [[1, -1, 0], [-2, 1, 1]]
            return [row[:3] for row in h4[:2]]
        if rank == 3:
            return [row[:3] for row in h4[:3]]
        return h4
    _unsupported('{}{}'.format(family, rank))


class RootSystem:
    """A finite reduced root system given by simple roots.

    :ivar label: Normalized type label, e.g. ``E6`` or ``A1xA2``
    :ivar simple_roots: Simple roots
    :ivar positive_roots: Positive roots, simple roots first
    :ivar roots: Positive roots followed by their negatives
    :ivar gram: Inner products of the simple roots
    """

    def __init__(self, simple_roots, label=None, field=None):
        """Build the root system generated by ``simple_roots``.

        :param simple_roots: Linearly independent simple roots
        :type simple_roots: Sequence[Sequence[Scalar]]
        :param label: Type label; recognized from the Coxeter graph if unset
        :type label: Optional[str]
        :param field: Field tag shared by every root
        :type field: Optional[str]
        """
        vectors = [Vector(r) for r in simple_roots]
        if field is None:
            field = (FIELD_QR5 if any(v.field == FIELD_QR5 for v in vectors)
                     else FIELD_Q)
        self.field = field
        self.simple_roots = tuple(v.with_field(field) for v in vectors)
        self.rank = len(self.simple_roots)
        self.dim = self.simple_roots[0].dim if self.simple_roots else 0
        if linalg.rank(self.simple_roots, self.dim) != self.rank:
            raise regions_exceptions.InputError(
                "simple roots must be linearly independent")
        self.gram = tuple(tuple(a.dot(b) for b in self.simple_roots)
                          for a in self.simple_roots)
        if label is None:
            label = format_type(classify_graph(
                *coxeter_graph(self, range(self.rank))))
        self.label = label
        self.components = parse_type(label) if label else ()
        self._dominant = self._solve_dominant_point()
        self.positive_roots = self._close()
        self.roots = self.positive_roots + tuple(
            -r for r in self.positive_roots)
        self.index = {r: i for i, r in enumerate(self.roots)}
        self._tables = None

    def __repr__(self):
        """Return a readable representation."""
        return "RootSystem('{}')".format(self.label or 'trivial')

    @property
    def order(self):
        """Order of the Coxeter group."""
        return group_order(self.components)

    @property
    def exponents(self):
        """Exponents of the Coxeter group."""
        return exponents_of_type(self.components)

    def _solve_dominant_point(self):
        if not self.rank:
            return Vector([ZERO] * self.dim, field=self.field)
        coefficients = linalg.solve(self.gram, [ONE] * self.rank)
        point = [ZERO] * self.dim
        for c, root in zip(coefficients, self.simple_roots):
            point = [p + c * x for p, x in zip(point, root)]
        return Vector(point, field=self.field)

    def dominant_point(self):
        """Return the point x in the span of the roots with <a_i, x> = 1.

        :rtype: Vector
        """
        return self._dominant

    def reflect(self, vector, i):
        """Apply the simple reflection ``s_i`` to ``vector``.

        :param vector: Vector to reflect
        :type vector: Vector
        :param i: 0-based simple root index
        :type i: int
        :rtype: Vector
        """
        alpha = self.simple_roots[i]
        factor = 2 * vector.dot(alpha) / self.gram[i][i]
        if not factor:
            return vector
        return vector - alpha.scale(factor)

    def is_positive(self, root):
        """Whether ``root`` pairs positively with the dominant point."""
        return root.dot(self._dominant).sign() > 0

    def _close(self):
        """Close the simple roots under simple reflections."""
        found = list(self.simple_roots)
        seen = set(found)
        queue = collections.deque(found)
        while queue:
            root = queue.popleft()
            for i in range(self.rank):
                image = self.reflect(root, i)
                if not self.is_positive(image):
                    continue
                if image not in seen:
                    seen.add(image)
                    found.append(image)
                    queue.append(image)
        logging.debug("Root system {} has {} positive roots".format(
            self.label, len(found)))
        return tuple(found)

    @property
    def simple_reflection_tables(self):
        """Each simple reflection as a permutation of root indices.

        :rtype: Tuple[Tuple[int, ...], ...]
        """
        if self._tables is None:
            self._tables = tuple(
                tuple(self.index[self.reflect(root, i)] for root in self.roots)
                for i in range(self.rank))
        return self._tables

    def is_positive_index(self, index):
        """Whether a root index refers to a positive root."""
        return index < len(self.positive_roots)

    def simple_root_indices(self):
        """Root indices of the simple roots."""
        return tuple(range(self.rank))


def build_root_system(family, rank_or_m):
    """Build an irreducible root system in standard coordinates.

    :param family: One of ``A B C D E F H I``
    :type family: str
    :param rank_or_m: Rank, or ``m`` for the dihedral family ``I``
    :type rank_or_m: int
    :rtype: RootSystem
    :raises: regions_exceptions.UnsupportedType
    """
    family = family.upper()
    if family == 'I':
        m = int(rank_or_m)
        label = format_type(_normalize_component('I2', None, m))
        if m in (2, 3, 4):
            return root_system(label)
        return RootSystem(_simple_roots('I', 2, m), label=label)
    rank = int(rank_or_m)
    label = format_type(_normalize_component(family, rank, None))
    if family in ('A', 'B', 'C', 'D', 'E', 'F', 'H') and rank >= 1:
        if family == 'D' and rank < 4:
            return root_system(label)
        if family in ('B', 'C') and rank == 1:
            return root_system(label)
        return RootSystem(_simple_roots(family, rank), label=label)
    _unsupported('{}{}'.format(family, rank))


def root_system(label):
    """Build the root system of a possibly reducible type label.

    Components are placed in orthogonal blocks of coordinates.

    :param label: Label such as ``B3`` or ``A1xA2``
    :type label: str
    :rtype: RootSystem
    """
    components = parse_type(label)
    blocks = []
    for component in components:
        family, rank, m = _component_key(component)
        if family == 'I':
            blocks.append(_simple_roots('I', 2, m))
        else:
            blocks.append(_simple_roots(family, rank))
    if len(blocks) == 1:
        return RootSystem(blocks[0], label=format_type(components))
    width = sum(len(block[0]) for block in blocks)
    simple = []
    offset = 0
    for block in blocks:
        size = len(block[0])
        for root in block:
            row = [0] * width
            row[offset:offset + size] = root
            simple.append(row)
        offset += size
    return RootSystem(simple, label=format_type(components))


def coxeter_arrangement(rs):
    """Return the reflection arrangement of ``rs``.

    :rtype: arrangement_module.Arrangement
    """
    return arrangement_module.from_normals(
        rs.positive_roots, dim=rs.dim, field=rs.field)


def _edge_label(rs, i, j):
    """Return m(a_i, a_j) from exact inner products."""
    g = rs.gram
    q = 4 * g[i][j] * g[i][j] / (g[i][i] * g[j][j])
    if not q:
        return 2
    for value, m in ((1, 3), (2, 4), (3, 6)):
        if q == value:
            return m
    if q == GOLDEN * GOLDEN:
        return 5
    raise regions_exceptions.UnsupportedType(
        "roots {} and {} do not span a finite dihedral system".format(i, j))


def coxeter_graph(rs, indices=None):
    """Return the Coxeter graph of the simple roots with given indices.

    :param rs: Root system
    :type rs: RootSystem
    :param indices: 0-based simple root indices, all of them by default
    :type indices: Optional[Iterable[int]]
    :returns: Nodes and edges ``{(i, j): m}`` with ``m >= 3``
    :rtype: Tuple[Tuple[int, ...], Dict[Tuple[int, int], int]]
    """
    nodes = tuple(sorted(range(rs.rank) if indices is None else indices))
    edges = {}
    for i, j in itertools.combinations(nodes, 2):
        m = _edge_label(rs, i, j)
        if m > 2:
            edges[(i, j)] = m
    return nodes, edges


def _components_of(nodes, edges):
    neighbours = {n: [] for n in nodes}
    for (i, j) in edges:
        neighbours[i].append(j)
        neighbours[j].append(i)
    seen = set()
    for start in nodes:
        if start in seen:
            continue
        component = []
        stack = [start]
        seen.add(start)
        while stack:
            node = stack.pop()
            component.append(node)
            for other in neighbours[node]:
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        yield sorted(component), neighbours


def _label(edges, i, j):
    return edges.get((min(i, j), max(i, j)), 2)


def _classify_component(nodes, neighbours, edges):
    size = len(nodes)
    if size == 1:
        return ['A1']
    inner = [(i, j) for (i, j) in edges if i in nodes]
    if len(inner) != size - 1:
        raise regions_exceptions.UnsupportedType("Coxeter graph has a cycle")
    if size == 2:
        return _normalize_component('I2', None, _label(edges, *nodes))
    degrees = {n: len(neighbours[n]) for n in nodes}
    branch = [n for n in nodes if degrees[n] >= 3]
    labels = [edges[e] for e in inner]
    if branch:
        if len(branch) > 1 or degrees[branch[0]] > 3 or set(labels) != {3}:
            raise regions_exceptions.UnsupportedType(
                "unrecognised branched Coxeter graph")
        arms = []
        centre = branch[0]
        for first in neighbours[centre]:
            length = 1
            previous, node = centre, first
            while degrees[node] == 2:
                previous, node = node, [n for n in neighbours[node]
                                        if n != previous][0]
                length += 1
            arms.append(length)
        arms = tuple(sorted(arms))
        if arms[:2] == (1, 1):
            return ['D{}'.format(size)]
        found = {(1, 2, 2): 'E6', (1, 2, 3): 'E7', (1, 2, 4): 'E8'}.get(arms)
        if found is None:
            raise regions_exceptions.UnsupportedType(
                "unrecognised branched Coxeter graph")
        return [found]
    # a path: walk it from one end
    start = [n for n in nodes if degrees[n] == 1][0]
    path = [start]
    while len(path) < size:
        path.append([n for n in neighbours[path[-1]]
                     if n not in path][0])
    walk = [_label(edges, a, b) for a, b in zip(path, path[1:])]
    if set(walk) == {3}:
        return ['A{}'.format(size)]
    if walk[-1] != 3:
        walk.reverse()
    special = [m for m in walk if m != 3]
    if len(special) == 1:
        m = special[0]
        position = walk.index(m)
        if m == 4 and position == 0:
            return ['B{}'.format(size)]
        if m == 4 and size == 4 and position == 1:
            return ['F4']
        if m == 5 and position == 0 and size in (3, 4):
            return ['H{}'.format(size)]
    raise regions_exceptions.UnsupportedType(
        "unrecognised Coxeter graph with labels {}".format(walk))


def classify_graph(nodes, edges):
    """Return the Dynkin type of a Coxeter graph.

    :param nodes: Graph nodes
    :type nodes: Sequence[int]
    :param edges: Edge labels as returned by :func:`coxeter_graph`
    :type edges: Dict[Tuple[int, int], int]
    :returns: Sorted normalized component labels
    :rtype: Tuple[str, ...]
    :raises: regions_exceptions.UnsupportedType
    """
    labels = []
    for component, neighbours in _components_of(nodes, edges):
        labels.extend(_classify_component(component, neighbours, edges))
    return tuple(sorted(labels, key=_component_key))


def type_of_subset(rs, indices):
    """Return the type generated by the simple roots with given indices."""
    return classify_graph(*coxeter_graph(rs, indices))


def simple_subsets_of_type(rs, label):
    """Return every set of simple roots generating the given type.

    :param rs: Root system
    :type rs: RootSystem
    :param label: Possibly reducible type label
    :type label: Union[str, Tuple[str, ...]]
    :returns: Sorted tuples of 0-based simple root indices
    :rtype: List[Tuple[int, ...]]
    """
    wanted = parse_type(label) if isinstance(label, str) else tuple(label)
    size = type_rank(wanted)
    if size > rs.rank:
        return []
    return [subset for subset in itertools.combinations(range(rs.rank), size)
            if type_of_subset(rs, subset) == wanted]


def parabolic_subsystem(rs, indices):
    """Return the root subsystem generated by the given simple roots.

    :rtype: RootSystem
    """
    indices = tuple(sorted(indices))
    return RootSystem([rs.simple_roots[i] for i in indices],
                      label=format_type(type_of_subset(rs, indices)),
                      field=rs.field)


class CoxeterElement:
    """Element w of W, stored as the root indices of w(a_1), ..., w(a_n)."""

    __slots__ = ('root_system', 'images', 'length', 'word')

    def __init__(self, root_system, images, length, word=None):
        """Create an element.

        :param root_system: Ambient root system
        :type root_system: RootSystem
        :param images: Root indices of the images of the simple roots
        :type images: Tuple[int, ...]
        :param length: Coxeter length
        :type length: int
        :param word: Simple reflection indices, ``w = s_word[0] s_word[1]..``
        :type word: Optional[Tuple[int, ...]]
        """
        self.root_system = root_system
        self.images = images
        self.length = length
        self.word = word

    def __repr__(self):
        """Return a readable representation."""
        return "CoxeterElement(length={}, word={})".format(
            self.length, self.word)

    def matrix(self):
        """Recover the orthogonal matrix of w exactly.

        w fixes the orthogonal complement of the roots pointwise.

        :rtype: List[Tuple[Scalar, ...]]
        """
        rs = self.root_system
        complement = linalg.nullspace(rs.simple_roots, rs.dim)
        basis = list(rs.simple_roots) + [Vector(c) for c in complement]
        images = [rs.roots[i] for i in self.images] + basis[rs.rank:]
        return [linalg.solve(basis, [image[row] for image in images])
                for row in range(rs.dim)]

    def apply(self, vector):
        """Return w(vector)."""
        return Vector(linalg.mat_vec(self.matrix(), vector),
                      field=self.root_system.field)

    def root_permutation(self):
        """Return w as a permutation of root indices; needs the word."""
        tables = self.root_system.simple_reflection_tables
        permutation = list(range(len(self.root_system.roots)))
        for i in reversed(self.word):
            table = tables[i]
            permutation = [table[k] for k in permutation]
        return permutation

    def inversion_count(self):
        """Return the number of positive roots w sends to negative roots."""
        rs = self.root_system
        permutation = self.root_permutation()
        return sum(1 for k in range(len(rs.positive_roots))
                   if not rs.is_positive_index(permutation[k]))


def check_group_order(rs, max_order=None):
    """Raise GroupTooLarge when |W| exceeds ``max_order``."""
    if max_order is None:
        max_order = generic_utils.DEFAULT_GUARDS['max_group_order']
    if rs.order > max_order:
        raise regions_exceptions.GroupTooLarge(
            'max_group_order', max_order, rs.order)


def iter_group(rs, max_order=None, with_words=True):
    """Enumerate W breadth first by left multiplication.

    Elements come out layer by layer in increasing length; only two layers
    are held in memory.

    :param rs: Root system
    :type rs: RootSystem
    :param max_order: Guard on |W|
    :type max_order: Optional[int]
    :param with_words: Record a reduced word for each element
    :type with_words: bool
    :rtype: Iterator[CoxeterElement]
    :raises: regions_exceptions.GroupTooLarge
    """
    check_group_order(rs, max_order)
    tables = rs.simple_reflection_tables
    identity = rs.simple_root_indices()
    previous = {}
    current = {identity: () if with_words else None}
    length = 0
    while current:
        for images, word in current.items():
            yield CoxeterElement(rs, images, length, word)
        following = {}
        for images, word in current.items():
            for i, table in enumerate(tables):
                image = tuple(table[k] for k in images)
                if image in previous or image in following:
                    continue
                following[image] = (i,) + word if with_words else None
        previous, current = current, following
        length += 1


def poincare_polynomial(rs, max_order=None):
    """Return the length generating function of W.

    :param rs: Root system
    :type rs: RootSystem
    :param max_order: Guard on |W|, default 10**7
    :type max_order: Optional[int]
    :rtype: Polynomial
    :raises: regions_exceptions.GroupTooLarge
    """
    counts = collections.Counter(
        element.length for element in iter_group(rs, max_order,
                                                 with_words=False))
    poly = Polynomial(counts[d] for d in range(max(counts) + 1))
    logging.info("Poincare polynomial of {}: {}".format(rs.label, poly))
    return poly
