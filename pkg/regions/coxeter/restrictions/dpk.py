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

"""The family D_p^k between the type D (k = 0) and type B (k = p) arrangements.

D_p^k has the hyperplanes ``x_i - x_j`` and ``x_i + x_j`` for ``i < j`` and
the coordinate hyperplanes ``x_{p-k+1}, ..., x_p``.

Each chamber holds exactly one region code: a tuple of distinct magnitudes
``1..p`` with signs, where ``-1`` is not allowed at positions ``1..p-k``.
Ranks are taken over the chamber of ``(p, p-1, ..., 1)``.
"""

import collections
import itertools
import logging
import math
import re

import regions.coxeter.utilities.exceptions as regions_exceptions
import regions.coxeter.utilities.generic as generic_utils
from regions.coxeter.arrangements import arrangement as arrangement_module
from regions.coxeter.arrangements import chambers as chambers_module
from regions.coxeter.utilities.poly import (
    Polynomial,
    f_product,
    q_integer,
)
from regions.coxeter.utilities.scalar import FIELD_Q, Vector

MINUS = 'minus'
PLUS = 'plus'
COORD = 'coord'
_KIND_ORDER = {MINUS: 0, PLUS: 1, COORD: 2}

_NAME_RE = re.compile(r'^D:(\d+):(\d+)$')

DpkReport = collections.namedtuple(
    'DpkReport',
    ['p', 'k', 'hyperplanes', 'exponents', 'zeta_match', 'walls_match'])


class DpkParams(collections.namedtuple('DpkParams', ['p', 'k'])):
    """Validated parameters ``p >= 1`` and ``0 <= k <= p``."""

    __slots__ = ()

    def __new__(cls, p, k):
        """Create parameters.

        :raises: regions_exceptions.InvalidParams
        """
        p = int(p)
        k = int(k)
        if p < 1 or not 0 <= k <= p:
            raise regions_exceptions.InvalidParams(
                "D_p^k needs p >= 1 and 0 <= k <= p, got p={} k={}".format(
                    p, k))
        return super(DpkParams, cls).__new__(cls, p, k)

    @classmethod
    def parse(cls, text):
        """Parse the ``D:p:k`` naming.

        :raises: regions_exceptions.ParseError
        """
        match = _NAME_RE.match(text.strip())
        if not match:
            raise regions_exceptions.ParseError(
                "expected D:p:k, got '{}'".format(text))
        return cls(int(match.group(1)), int(match.group(2)))

    @property
    def free(self):
        """Number of leading positions without a coordinate hyperplane."""
        return self.p - self.k

    def __str__(self):
        """Return the ``D:p:k`` name."""
        return 'D:{}:{}'.format(self.p, self.k)


def _params(params):
    if isinstance(params, DpkParams):
        return params
    return DpkParams(*params)


class DpkHyperplane(collections.namedtuple('DpkHyperplane',
                                           ['kind', 'i', 'j'])):
    """Hyperplane of D_p^k with 1-based positions; ``j`` is 0 for coord."""

    __slots__ = ()

    def evaluate(self, x):
        """Value of the defining form at the integer point ``x``."""
        if self.kind == MINUS:
            return x[self.i - 1] - x[self.j - 1]
        if self.kind == PLUS:
            return x[self.i - 1] + x[self.j - 1]
        return x[self.i - 1]

    def normal(self, p):
        """Return the normal vector in dimension ``p``."""
        coords = [0] * p
        coords[self.i - 1] = 1
        if self.kind == MINUS:
            coords[self.j - 1] = -1
        elif self.kind == PLUS:
            coords[self.j - 1] = 1
        return Vector(coords, field=FIELD_Q)

    def sort_key(self):
        """Order: differences, then sums, then coordinates."""
        return (_KIND_ORDER[self.kind], self.i, self.j)

    def __str__(self):
        """Return e.g. ``x1-x2``, ``x1+x3`` or ``x4``."""
        if self.kind == MINUS:
            return 'x{}-x{}'.format(self.i, self.j)
        if self.kind == PLUS:
            return 'x{}+x{}'.format(self.i, self.j)
        return 'x{}'.format(self.i)


def hyperplanes(params):
    """Return the hyperplanes of D_p^k in label order.

    :rtype: List[DpkHyperplane]
    """
    params = _params(params)
    p = params.p
    pairs = list(itertools.combinations(range(1, p + 1), 2))
    result = [DpkHyperplane(MINUS, i, j) for i, j in pairs]
    result.extend(DpkHyperplane(PLUS, i, j) for i, j in pairs)
    result.extend(DpkHyperplane(COORD, i, 0)
                  for i in range(params.free + 1, p + 1))
    return result


def build_dpk(params):
    """Return the arrangement D_p^k, with ``p(p-1) + k`` hyperplanes.

    :rtype: arrangement_module.Arrangement
    """
    params = _params(params)
    return arrangement_module.from_normals(
        [h.normal(params.p) for h in hyperplanes(params)],
        dim=params.p, field=FIELD_Q)


def dpk_exponents(params):
    """Return the exponents ``{1, 3, ..., 2p-3} + {p+k-1}``.

    For ``p = 1`` the arrangement is empty or a single coordinate
    hyperplane, with exponents ``{}`` or ``{1}``.

    :rtype: List[int]
    """
    params = _params(params)
    if params.p == 1:
        return [params.k] if params.k else []
    return sorted(list(range(1, 2 * params.p - 2, 2)) +
                  [params.p + params.k - 1])


def base_code(params):
    """Return ``(p, p-1, ..., 1)``, the code of the base chamber."""
    params = _params(params)
    return tuple(range(params.p, 0, -1))


def code_count(params):
    """Return ``|M_p^k| = 2^(p-1) (p-1)! (p+k)``."""
    params = _params(params)
    return (2 ** (params.p - 1) * math.factorial(params.p - 1) *
            (params.p + params.k))


def check_code(params, x):
    """Raise CodeInvalid unless ``x`` is an element of M_p^k."""
    params = _params(params)
    x = tuple(x)
    if (len(x) != params.p or
            sorted(abs(v) for v in x) != list(range(1, params.p + 1))):
        raise regions_exceptions.CodeInvalid(
            "{} is not a signed arrangement of 1..{}".format(x, params.p))
    if any(x[i] == -1 for i in range(params.free)):
        raise regions_exceptions.CodeInvalid(
            "{} has -1 among the first {} positions".format(x, params.free))
    return x


def enumerate_codes(params, guards=None):
    """Return every region code, lexicographically ordered.

    :rtype: List[Tuple[int, ...]]
    :raises: regions_exceptions.TooManyCodes
    """
    params = _params(params)
    limit = generic_utils.guard_value(guards, 'max_codes')
    count = code_count(params)
    if count > limit:
        raise regions_exceptions.TooManyCodes('max_codes', limit, count)
    p = params.p
    codes = []
    for magnitudes in itertools.permutations(range(1, p + 1)):
        for signs in itertools.product((1, -1), repeat=p):
            code = tuple(m * s for m, s in zip(magnitudes, signs))
            if any(code[i] == -1 for i in range(params.free)):
                continue
            codes.append(code)
    codes.sort()
    return codes


def _rank(x, free):
    rank = 0
    p = len(x)
    for i in range(p):
        xi = x[i]
        for j in range(i + 1, p):
            if xi < x[j]:
                rank += 1
            if xi + x[j] < 0:
                rank += 1
        if i >= free and xi < 0:
            rank += 1
    return rank


def rank_of_code(params, x):
    """Return the number of hyperplanes separating x from the base chamber.

    :raises: regions_exceptions.CodeInvalid
    """
    params = _params(params)
    return _rank(check_code(params, x), params.free)


def separating_hyperplanes(params, x, y):
    """Return the hyperplanes on which the codes x and y take opposite signs.

    :rtype: List[DpkHyperplane]
    """
    return [h for h in hyperplanes(params)
            if (h.evaluate(x) > 0) != (h.evaluate(y) > 0)]


def _normalize(x, free):
    return tuple(1 if v == -1 and i < free else v for i, v in enumerate(x))


def _wall_moves(x, free):
    """Apply the three wall rules to one point."""
    p = len(x)
    for i, j in itertools.combinations(range(p), 2):
        xi, xj = x[i], x[j]
        if abs(xi - xj) == 1:
            moved = list(x)
            moved[i], moved[j] = xj, xi
            yield DpkHyperplane(MINUS, i + 1, j + 1), tuple(moved)
        if abs(xi + xj) == 1:
            moved = list(x)
            moved[i] = abs(xj) if xi > 0 else -abs(xj)
            moved[j] = abs(xi) if xj > 0 else -abs(xi)
            yield DpkHyperplane(PLUS, i + 1, j + 1), tuple(moved)
    for i in range(free, p):
        if abs(x[i]) == 1:
            moved = list(x)
            moved[i] = -x[i]
            yield DpkHyperplane(COORD, i + 1, 0), tuple(moved)


def neighbors(params, x):
    """Return the chambers adjacent to the chamber of ``x``.

    When the entry of magnitude 1 sits at a position without a coordinate
    hyperplane, the rules are applied to the point with that entry negated
    as well; both points lie in the same chamber.

    :returns: Pairs of the wall and the adjacent code, in wall order
    :rtype: List[Tuple[DpkHyperplane, Tuple[int, ...]]]
    :raises: regions_exceptions.CodeInvalid
    """
    params = _params(params)
    x = check_code(params, x)
    free = params.free
    points = [x]
    one = x.index(1) if 1 in x else None
    if one is not None and one < free:
        twin = list(x)
        twin[one] = -1
        points.append(tuple(twin))
    found = {}
    for point in points:
        for wall, moved in _wall_moves(point, free):
            found.setdefault(wall, _normalize(moved, free))
    return sorted(found.items(), key=lambda item: item[0].sort_key())


def _rank_counts(codes, free):
    return collections.Counter(_rank(code, free) for code in codes)


def zeta_bruteforce(params, guards=None, executor=None):
    """Return the sum of t^rank over every region code.

    :raises: regions_exceptions.TooManyCodes
    """
    params = _params(params)
    codes = enumerate_codes(params, guards)
    if executor is None:
        executor = generic_utils.get_executor(1)
    counters = generic_utils.map_in_order(
        executor, lambda chunk: _rank_counts(chunk, params.free),
        generic_utils.chunked(codes, 4096))
    total = collections.Counter()
    for counter in counters:
        total.update(counter)
    return Polynomial(total[r] for r in range(max(total) + 1))


def zeta_closed(params):
    """Return the product formula for the rank generating function.

    The exponents are {1, 3, ..., 2p-3, p+k-1}. For ``1 <= k <= p-3`` the
    product comes from the slice recursion and the Delta identity; the
    remaining cases ``k in {0, p-2, p-1, p}`` are supersolvable or
    inductively factored.

    :raises: regions_exceptions.InvalidParams for ``p < 2``
    """
    params = _params(params)
    if params.p < 2:
        raise regions_exceptions.InvalidParams(
            "closed form needs p >= 2, got p={}".format(params.p))
    return f_product(dpk_exponents(params))


def delta(p, k):
    """Return the Delta_p^k sum and check it against F(p+k-1, 2p-3).

    :raises: regions_exceptions.InvalidParams for ``p < 3``,
             regions_exceptions.IdentityCheckFailed
    """
    params = DpkParams(p, k)
    if p < 3:
        raise regions_exceptions.InvalidParams(
            "Delta_p^k is defined for p >= 3, got p={}".format(p))
    total = Polynomial()
    for i in range(1, params.free + 1):
        total = total + (Polynomial.monomial(i - 1) +
                         Polynomial.monomial(2 * p - i - 1)) * q_integer(
                             p + k - 2)
    for i in range(params.free + 1, p + 1):
        total = total + (Polynomial.monomial(i - 1) +
                         Polynomial.monomial(2 * p - i)) * q_integer(
                             p + k - 3)
    expected = f_product([p + k - 1, 2 * p - 3])
    if total != expected:
        raise regions_exceptions.IdentityCheckFailed(
            "Delta_{}^{} = {} differs from {}".format(p, k, total, expected))
    return total


def _smaller(params, i):
    """Return the parameters of the slice at position i."""
    if i <= params.free:
        return DpkParams(params.p - 1, params.k)
    return DpkParams(params.p - 1, params.k - 1)


def slice_shift(params, i, sign):
    """Return the exponent of t in the closed form of a slice."""
    params = _params(params)
    if sign > 0:
        return i - 1
    if i <= params.free:
        return 2 * params.p - i - 1
    return 2 * params.p - i


def slice_anchor(params, i, sign):
    """Return the anchor code of a slice and its separating set.

    The anchor has ``+-p`` at position ``i`` and the other magnitudes in
    decreasing order.

    :returns: Anchor code and the hyperplanes separating it from the base
    :rtype: Tuple[Tuple[int, ...], List[DpkHyperplane]]
    """
    params = _params(params)
    p = params.p
    rest = list(range(p - 1, 0, -1))
    anchor = tuple(rest[:i - 1] + [p if sign > 0 else -p] + rest[i - 1:])
    return anchor, separating_hyperplanes(params, base_code(params), anchor)


def project_slice(params, x, i):
    """Drop position i (holding +-p) and return the code in the smaller system.

    :returns: Smaller parameters and the projected code
    :rtype: Tuple[DpkParams, Tuple[int, ...]]
    :raises: regions_exceptions.CodeInvalid
    """
    params = _params(params)
    x = check_code(params, x)
    if abs(x[i - 1]) != params.p:
        raise regions_exceptions.CodeInvalid(
            "{} does not hold +-{} at position {}".format(x, params.p, i))
    smaller = _smaller(params, i)
    projected = x[:i - 1] + x[i:]
    return smaller, check_code(smaller, projected)


def _zeta_for(params, guards=None):
    if params.p >= 2:
        return zeta_closed(params)
    return zeta_bruteforce(params, guards)


def slice_sum(params, i, sign, guards=None):
    """Return the sum of t^rank over codes with ``x_i = sign * p``.

    The brute force sum is checked against the closed form
    ``t^shift * zeta(D_{p-1}^{k'})``.

    :raises: regions_exceptions.InvalidParams,
             regions_exceptions.IdentityCheckFailed
    """
    params = _params(params)
    if params.p < 2 or not 1 <= i <= params.p or sign not in (1, -1):
        raise regions_exceptions.InvalidParams(
            "slice needs p >= 2, 1 <= i <= p and sign +-1")
    target = sign * params.p
    counts = collections.Counter(
        _rank(code, params.free) for code in enumerate_codes(params, guards)
        if code[i - 1] == target)
    brute = Polynomial(counts[r] for r in range(max(counts) + 1))
    closed = _zeta_for(_smaller(params, i), guards).shift(
        slice_shift(params, i, sign))
    if brute != closed:
        raise regions_exceptions.IdentityCheckFailed(
            "slice {} i={} sign={}: {} differs from {}".format(
                params, i, sign, brute, closed))
    return brute


def _check_walls_geometrically(params, guards=None):
    arrangement = build_dpk(params)
    chamber_set = chambers_module.enumerate_chambers(arrangement, guards)
    if len(chamber_set) != code_count(params):
        return False
    index = {h: arrangement.index_of(h.normal(params.p))
             for h in hyperplanes(params)}
    for code in enumerate_codes(params, guards):
        position = chambers_module.locate_chamber(chamber_set, code)
        chamber = chamber_set[position]
        expected = chambers_module.walls(arrangement, chamber, chamber_set)
        found = neighbors(params, code)
        if {index[h] for h, _ in found} != expected:
            return False
        for wall, other in found:
            across = chamber_set[chambers_module.locate_chamber(
                chamber_set, other)]
            if across.signs != chamber.signs ^ (1 << index[wall]):
                return False
    return True


def _check_walls_combinatorially(params, guards=None):
    codes = enumerate_codes(params, guards)
    adjacency = {code: dict(neighbors(params, code)) for code in codes}
    for code, found in adjacency.items():
        rank = _rank(code, params.free)
        for wall, other in found.items():
            if adjacency[other].get(wall) != code:
                return False
            if abs(_rank(other, params.free) - rank) != 1:
                return False
    return True


def dpk_report(params, guards=None, executor=None):
    """Return the report row for D_p^k.

    The closed form is compared with the brute force sum. Walls are
    compared with chamber geometry for ``p <= 4`` and checked for symmetry
    and the rank step otherwise.

    :rtype: DpkReport
    """
    params = _params(params)
    brute = zeta_bruteforce(params, guards, executor)
    closed = (zeta_closed(params) if params.p >= 2
              else f_product(dpk_exponents(params)))
    if params.p <= 4:
        walls_ok = _check_walls_geometrically(params, guards)
    else:
        walls_ok = _check_walls_combinatorially(params, guards)
    report = DpkReport(params.p, params.k,
                       params.p * (params.p - 1) + params.k,
                       tuple(dpk_exponents(params)), brute == closed,
                       walls_ok)
    logging.info("D_{}^{}: zeta match {}, walls match {}".format(
        params.p, params.k, report.zeta_match, report.walls_match))
    return report


def format_dpk_rows(reports, header=True):
    """Render D_p^k report rows as tab separated text."""
    return generic_utils.render_template(
        'dpk_row.j2', {'reports': list(reports), 'header': header})
