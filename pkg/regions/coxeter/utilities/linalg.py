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

"""Exact linear algebra over :class:`Scalar` on sympy domain matrices.

Rows are plain tuples of scalars; a :class:`Vector` is accepted anywhere a
row is. Elimination runs on a ``DomainMatrix`` over ``QQ`` or, as soon as
one entry involves r5, over the algebraic field ``QQ<sqrt(5)>``.
"""

import sympy
from sympy.polys.matrices import DomainMatrix

import regions.coxeter.utilities.exceptions as regions_exceptions
from regions.coxeter.utilities.scalar import ONE, ZERO, Scalar, as_scalar

QQ_R5 = sympy.QQ.algebraic_field(sympy.sqrt(5))
_R5 = QQ_R5.from_sympy(sympy.sqrt(5))


def _row(values):
    return [as_scalar(v) for v in values]


def _element(value, domain):
    a = sympy.QQ(value.a.numerator, value.a.denominator)
    if domain == sympy.QQ:
        return a
    element = domain.convert_from(a, sympy.QQ)
    if value.b:
        b = sympy.QQ(value.b.numerator, value.b.denominator)
        element += domain.convert_from(b, sympy.QQ) * _R5
    return element


def domain_matrix(rows, ncols):
    """Return ``rows`` as a sympy ``DomainMatrix``.

    :param rows: Matrix rows
    :type rows: Iterable[Sequence[Scalar]]
    :param ncols: Number of columns
    :type ncols: int
    :returns: Matrix over ``QQ`` or ``QQ<sqrt(5)>``
    :rtype: sympy.polys.matrices.DomainMatrix
    """
    matrix = [_row(r) for r in rows]
    domain = (QQ_R5 if any(v.b for r in matrix for v in r)
              else sympy.QQ)
    elements = [[_element(v, domain) for v in r] for r in matrix]
    return DomainMatrix(elements, (len(matrix), ncols), domain)


def _scalar_rows(matrix, count=None):
    rows = matrix.to_Matrix().tolist()
    if count is not None:
        rows = rows[:count]
    return tuple(tuple(Scalar.from_sympy(v) for v in r) for r in rows)


def rref(rows, ncols=None):
    """Return the reduced row echelon form of ``rows``.

    :param rows: Matrix rows
    :type rows: Iterable[Sequence[Scalar]]
    :param ncols: Number of columns, required when ``rows`` is empty
    :type ncols: Optional[int]
    :returns: Nonzero reduced rows and their pivot columns
    :rtype: Tuple[Tuple[Tuple[Scalar, ...], ...], Tuple[int, ...]]
    """
    rows = [_row(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows or not ncols:
        return (), ()
    reduced, pivots = domain_matrix(rows, ncols).rref()
    pivots = tuple(pivots)
    return _scalar_rows(reduced, len(pivots)), pivots


def rank(rows, ncols=None):
    """Return the rank of ``rows``."""
    rows = [_row(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows or not ncols:
        return 0
    return domain_matrix(rows, ncols).rank()


def reduce_against(basis, pivots, vector):
    """Reduce ``vector`` modulo the row space of an echelon basis.

    :param basis: Rows returned by :func:`rref`
    :type basis: Sequence[Sequence[Scalar]]
    :param pivots: Pivot columns returned by :func:`rref`
    :type pivots: Sequence[int]
    :param vector: Vector to reduce
    :type vector: Sequence[Scalar]
    :returns: Remainder; all zero iff ``vector`` lies in the row space
    :rtype: List[Scalar]
    """
    remainder = _row(vector)
    for row, col in zip(basis, pivots):
        factor = remainder[col]
        if factor:
            remainder = [a - factor * b if b else a
                         for a, b in zip(remainder, row)]
    return remainder


def in_row_space(basis, pivots, vector):
    """Whether ``vector`` lies in the span of an echelon basis."""
    return not any(reduce_against(basis, pivots, vector))


def nullspace(rows, ncols):
    """Return a basis of the null space, one vector per free column.

    The vector for free column ``f`` has a 1 in position ``f``, zeros in the
    other free columns and whatever the pivot columns require.

    :param rows: Matrix rows
    :type rows: Iterable[Sequence[Scalar]]
    :param ncols: Number of columns
    :type ncols: int
    :returns: Basis vectors ordered by free column
    :rtype: List[Tuple[Scalar, ...]]
    """
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vector = [ZERO] * ncols
        vector[f] = ONE
        for row, col in zip(reduced, pivots):
            vector[col] = -row[f]
        basis.append(tuple(vector))
    return basis


def solve(matrix, rhs):
    """Solve the square nonsingular system ``matrix * x = rhs``.

    :param matrix: Square matrix rows
    :type matrix: Sequence[Sequence[Scalar]]
    :param rhs: Right hand side
    :type rhs: Sequence[Scalar]
    :returns: The unique solution
    :rtype: Tuple[Scalar, ...]
    :raises: regions_exceptions.InputError if the matrix is singular
    """
    size = len(matrix)
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    reduced, pivots = rref(augmented, size + 1)
    if tuple(pivots) != tuple(range(size)):
        raise regions_exceptions.InputError("singular linear system")
    return tuple(row[size] for row in reduced)


def coordinates(basis_rows, vector):
    """Express ``vector`` in terms of linearly independent rows.

    :param basis_rows: Independent rows b_1..b_r
    :type basis_rows: Sequence[Sequence[Scalar]]
    :param vector: Target vector
    :type vector: Sequence[Scalar]
    :returns: Coefficients c with sum c_l b_l = vector, or None
    :rtype: Optional[Tuple[Scalar, ...]]
    """
    count = len(basis_rows)
    if not count:
        return None if any(_row(vector)) else ()
    columns = [list(column) + [value]
               for column, value in zip(zip(*basis_rows), vector)]
    reduced, pivots = rref(columns, count + 1)
    if count in pivots:
        return None
    solution = [ZERO] * count
    for row, col in zip(reduced, pivots):
        solution[col] = row[count]
    return tuple(solution)


def transpose(matrix):
    """Return the transpose of a list of rows."""
    return [tuple(column) for column in zip(*matrix)]


def mat_vec(matrix, vector):
    """Multiply a matrix by a column vector."""
    result = []
    for row in matrix:
        total = ZERO
        for a, b in zip(row, vector):
            if a and b:
                total = total + a * b
        result.append(total)
    return tuple(result)


def mat_mul(left, right):
    """Multiply two matrices given as rows."""
    columns = transpose(right)
    return [mat_vec(columns, row) for row in left]


def identity(size):
    """Return the identity matrix of the given size."""
    return [tuple(ONE if i == j else ZERO for j in range(size))
            for i in range(size)]
