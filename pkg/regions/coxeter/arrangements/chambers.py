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

"""Chambers of central arrangements and their rank generating functions.

Sign vectors are packed into integers: bit ``i`` is set when the chamber
lies on the negative side of hyperplane ``i``. The rank of a chamber R over
a base B is then ``popcount(B ^ R)``.
"""

import collections
import logging

import regions.coxeter.utilities.exceptions as regions_exceptions
import regions.coxeter.utilities.generic as generic_utils
from regions.coxeter.utilities.poly import Polynomial
from regions.coxeter.utilities.scalar import ZERO, Vector
from regions.coxeter.utilities.simplex import maximize_slack


def popcount(value):
    """Return the number of set bits."""
    return bin(value).count('1')


def signs_to_mask(signs):
    """Pack a sign string or a sequence of +1/-1 into a bit mask."""
    mask = 0
    for i, s in enumerate(signs):
        if s in ('-', -1):
            mask |= 1 << i
        elif s not in ('+', 1):
            raise regions_exceptions.InputError(
                "invalid sign {!r}".format(s))
    return mask


def mask_to_string(mask, size):
    """Unpack a bit mask into a ``+-`` string of the given length."""
    return ''.join('-' if mask >> i & 1 else '+' for i in range(size))


class Chamber:
    """Realizable sign vector with an interior witness point."""

    __slots__ = ('signs', 'witness')

    def __init__(self, signs, witness):
        """Create a chamber.

        :param signs: Packed sign vector
        :type signs: int
        :param witness: Point strictly inside the chamber
        :type witness: Vector
        """
        self.signs = signs
        self.witness = witness

    def sign(self, index):
        """Return the sign, +1 or -1, on hyperplane ``index``."""
        return -1 if self.signs >> index & 1 else 1

    def __eq__(self, other):
        """Chambers are equal when their sign vectors are."""
        if not isinstance(other, Chamber):
            return NotImplemented
        return self.signs == other.signs

    def __hash__(self):
        """Hash the sign vector."""
        return hash(self.signs)

    def __repr__(self):
        """Return a readable representation."""
        return "Chamber(signs={:#x})".format(self.signs)


class ChamberSet:
    """All chambers of an arrangement in canonical order."""

    def __init__(self, arrangement, chambers):
        """Create the set; use :func:`enumerate_chambers` instead."""
        self.arrangement = arrangement
        self.size = len(arrangement)
        self.full_mask = (1 << self.size) - 1
        self.chambers = sorted(chambers, key=self._order_key)
        self.index = {c.signs: i for i, c in enumerate(self.chambers)}

    def _order_key(self, chamber):
        return tuple(chamber.signs >> i & 1 for i in range(self.size))

    def __len__(self):
        """Return the number of chambers."""
        return len(self.chambers)

    def __iter__(self):
        """Iterate in canonical order."""
        return iter(self.chambers)

    def __getitem__(self, position):
        """Return the chamber at a position."""
        return self.chambers[position]

    def __contains__(self, chamber):
        """Whether a chamber with the same sign vector is present."""
        return chamber.signs in self.index

    def index_of(self, signs):
        """Return the position of a sign vector.

        :param signs: Packed mask, ``+-`` string or sequence of +1/-1
        :type signs: Union[int, str, Sequence[int]]
        :rtype: int
        :raises: regions_exceptions.BaseNotAChamber
        """
        if not isinstance(signs, int):
            if len(signs) != self.size:
                raise regions_exceptions.BaseNotAChamber(
                    "sign vector has length {}, expected {}".format(
                        len(signs), self.size))
            signs = signs_to_mask(signs)
        try:
            return self.index[signs]
        except KeyError:
            raise regions_exceptions.BaseNotAChamber(
                "{} is not a chamber".format(
                    mask_to_string(signs, self.size)))

    def antipode(self, position):
        """Return the position of the opposite chamber."""
        return self.index[self.chambers[position].signs ^ self.full_mask]

    def sign_string(self, position):
        """Return the ``+-`` string of the chamber at ``position``."""
        return mask_to_string(self.chambers[position].signs, self.size)

    def antipodal_representatives(self):
        """Return positions i with i smaller than the antipode of i."""
        return [i for i in range(len(self.chambers)) if i <= self.antipode(i)]


def feasible_interior_point(normals, signs, dim=None):
    """Return a point with the prescribed sign on every normal, or None.

    :param normals: Normals of one dimension
    :type normals: Sequence[Sequence[Scalar]]
    :param signs: Required signs as +1/-1 or ``+``/``-``
    :type signs: Sequence[Union[int, str]]
    :param dim: Dimension, needed when ``normals`` is empty
    :type dim: Optional[int]
    :returns: Interior point, or None when the open cone is empty
    :rtype: Optional[Vector]
    """
    signs = [-1 if s in ('-', -1) else 1 for s in signs]
    normals = list(normals)
    if not normals:
        return Vector([ZERO] * (dim or 0))
    slack, point = maximize_slack(normals, signs, stop_when_positive=True)
    if slack.sign() <= 0:
        return None
    return Vector(point)


def _split_regions(normals, position, regions):
    """Split each region by hyperplane ``position``.

    :returns: Surviving (mask, witness) pairs in input order
    """
    normal = normals[position]
    bit = 1 << position
    previous = normals[:position]
    result = []
    for mask, witness in regions:
        side = sum((a * b for a, b in zip(normal, witness) if a and b),
                   ZERO).sign()
        wanted = []
        for s in (1, -1):
            if side == s:
                result.append((mask | (bit if s < 0 else 0), witness))
            else:
                wanted.append(s)
        for s in wanted:
            signs = [-1 if mask >> i & 1 else 1 for i in range(position)]
            point = feasible_interior_point(
                previous + [normal], signs + [s])
            if point is not None:
                result.append((mask | (bit if s < 0 else 0),
                               tuple(point)))
    return result


def enumerate_chambers(arrangement, guards=None, executor=None):
    """Enumerate every chamber by inserting hyperplanes one at a time.

    The arrangement is essentialized first; witnesses are lifted back to
    the ambient space.

    :param arrangement: Arrangement
    :type arrangement: Arrangement
    :param guards: Guard values, see generic_utils.DEFAULT_GUARDS
    :type guards: Optional[Dict[str, int]]
    :param executor: Executor used to split regions in parallel
    :type executor: Optional[futurist.Executor]
    :rtype: ChamberSet
    :raises: regions_exceptions.TooManyChambers
    """
    max_hyperplanes = generic_utils.guard_value(guards, 'max_hyperplanes')
    max_chambers = generic_utils.guard_value(guards, 'max_chambers')
    if len(arrangement) > max_hyperplanes:
        raise regions_exceptions.TooManyChambers(
            'max_hyperplanes', max_hyperplanes, len(arrangement))
    pivots, normals = arrangement.essential_normals()
    regions = [(0, tuple([ZERO] * len(pivots)))]
    own_executor = executor is None
    if own_executor:
        executor = generic_utils.get_executor(
            generic_utils.guard_value(guards, 'threads'))
    try:
        for position in range(len(normals)):
            workers = max(1, generic_utils.guard_value(guards, 'threads'))
            chunks = generic_utils.chunked(
                regions, -(-len(regions) // workers))
            pieces = generic_utils.map_in_order(
                executor,
                lambda chunk: _split_regions(normals, position, chunk),
                chunks)
            regions = [region for piece in pieces for region in piece]
            if len(regions) > max_chambers:
                raise regions_exceptions.TooManyChambers(
                    'max_chambers', max_chambers, len(regions))
            logging.debug("Inserted hyperplane {}: {} regions".format(
                position, len(regions)))
    finally:
        if own_executor:
            executor.shutdown()
    chambers = [Chamber(mask, arrangement.lift_point(witness, pivots))
                for mask, witness in regions]
    logging.info("Arrangement with {} hyperplanes has {} chambers".format(
        len(arrangement), len(chambers)))
    return ChamberSet(arrangement, chambers)


def separating_set(arrangement, first, second):
    """Return the indices of hyperplanes separating two chambers.

    :rtype: Set[int]
    """
    difference = first.signs ^ second.signs
    return {i for i in range(len(arrangement)) if difference >> i & 1}


def _resolve_base(chambers, base):
    if isinstance(base, Chamber):
        return chambers.index_of(base.signs)
    if isinstance(base, int) and not isinstance(base, bool):
        if not 0 <= base < len(chambers):
            raise regions_exceptions.BaseNotAChamber(
                "no chamber at position {}".format(base))
        return base
    return chambers.index_of(base)


def zeta_of_mask(chambers, base_mask):
    """Return the rank generating function for a packed base sign vector."""
    counts = collections.Counter(popcount(base_mask ^ c.signs)
                                 for c in chambers)
    return Polynomial(counts[r] for r in range(chambers.size + 1))


def zeta(arrangement, base, chambers=None, guards=None):
    """Return the rank generating function of the poset of regions.

    :param arrangement: Arrangement
    :type arrangement: Arrangement
    :param base: Base chamber, its position or its sign string
    :type base: Union[Chamber, int, str]
    :param chambers: Chambers of ``arrangement``, enumerated if omitted
    :type chambers: Optional[ChamberSet]
    :rtype: Polynomial
    :raises: regions_exceptions.BaseNotAChamber
    """
    if chambers is None:
        chambers = enumerate_chambers(arrangement, guards)
    position = _resolve_base(chambers, base)
    return zeta_of_mask(chambers, chambers[position].signs)


def zeta_all_bases(arrangement, chambers, executor=None):
    """Return the rank generating function for every base chamber.

    Only one chamber of each antipodal pair is computed.

    :returns: One polynomial per chamber position
    :rtype: List[Polynomial]
    """
    representatives = chambers.antipodal_representatives()

    def work(chunk):
        return [zeta_of_mask(chambers, chambers[i].signs) for i in chunk]

    if executor is None:
        executor = generic_utils.get_executor(1)
    results = generic_utils.map_in_order(
        executor, work, generic_utils.chunked(representatives, 64))
    result = [None] * len(chambers)
    for position, poly in zip(
            representatives, (p for chunk in results for p in chunk)):
        result[position] = poly
        result[chambers.antipode(position)] = poly
    return result


def walls(arrangement, chamber, chambers=None):
    """Return the hyperplanes that bound ``chamber`` in a facet.

    :param chambers: When given, walls are looked up instead of solved for
    :type chambers: Optional[ChamberSet]
    :rtype: Set[int]
    """
    size = len(arrangement)
    if chambers is not None:
        return {i for i in range(size)
                if chamber.signs ^ (1 << i) in chambers.index}
    found = set()
    for i in range(size):
        flipped = chamber.signs ^ (1 << i)
        signs = [-1 if flipped >> j & 1 else 1 for j in range(size)]
        if feasible_interior_point(arrangement.normals, signs) is not None:
            found.add(i)
    return found


def signs_of_point(arrangement, point):
    """Return the packed sign vector of a point off every hyperplane.

    :raises: regions_exceptions.InputError if the point lies on one
    """
    mask = 0
    for i, normal in enumerate(arrangement.normals):
        side = normal.dot(point).sign()
        if side == 0:
            raise regions_exceptions.InputError(
                "point lies on hyperplane {}".format(i))
        if side < 0:
            mask |= 1 << i
    return mask


def locate_chamber(chambers, point):
    """Return the position of the chamber containing ``point``."""
    return chambers.index_of(signs_of_point(chambers.arrangement, point))


def dominant_chamber(rs, arrangement, chambers):
    """Return the position of the chamber containing the dominant point.

    :param rs: Root system whose reflection arrangement is ``arrangement``
    :type rs: RootSystem
    """
    return locate_chamber(chambers, rs.dominant_point())


def format_chambers(chambers):
    """Render one line per chamber: sign string then witness."""
    lines = []
    for position, chamber in enumerate(chambers):
        lines.append('{} {}'.format(chambers.sign_string(position),
                                    chamber.witness))
    return '\n'.join(lines) + ('\n' if lines else '')
