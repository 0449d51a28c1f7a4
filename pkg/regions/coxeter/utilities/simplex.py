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

"""Exact linear programs for the chamber oracle.

The slack problem

    maximise d subject to s_i <n_i, x> >= d, |x_j| <= 1, d <= 1

is solved with ``sympy.solvers.simplex.linprog`` whenever every normal is
rational. sympy only pivots on Rational entries, so programs over Q(r5)
go through :class:`SimplexTableau`, a single phase simplex method with
Bland's rule for problems whose origin is feasible, i.e.

    maximise c.y subject to A y <= b, y >= 0, with b >= 0.

The slack problem has that form after writing x = x_plus - x_minus.
"""

import logging

from sympy.solvers.simplex import linprog

import regions.coxeter.utilities.exceptions as regions_exceptions
from regions.coxeter.utilities.scalar import ONE, ZERO, Scalar, as_scalar


class SimplexTableau:
    """Dictionary form tableau over exact scalars.

    Each basic variable is kept as ``b_i + sum_j d_ij * y_j`` over the
    nonbasic variables ``y_j``; the objective likewise as
    ``z0 + sum_j c_j * y_j``. Variables are labelled by integers: the
    structural variables are ``0..n-1``, the slacks ``n..n+m-1``.
    """

    def __init__(self, matrix, rhs, objective):
        """Create the tableau for ``max c.y, A y <= b, y >= 0``.

        :param matrix: Constraint rows A
        :type matrix: Sequence[Sequence[Scalar]]
        :param rhs: Right hand sides b, all nonnegative
        :type rhs: Sequence[Scalar]
        :param objective: Objective coefficients c
        :type objective: Sequence[Scalar]
        :raises: regions_exceptions.InputError when a right hand side is
                 negative
        """
        self.nvars = len(objective)
        self.rows = [[-as_scalar(a) for a in row] for row in matrix]
        self.rhs = [as_scalar(b) for b in rhs]
        if any(b.sign() < 0 for b in self.rhs):
            raise regions_exceptions.InputError(
                "origin must be feasible: negative right hand side")
        self.cost = [as_scalar(c) for c in objective]
        self.value = ZERO
        self.nonbasic = list(range(self.nvars))
        self.basic = [self.nvars + i for i in range(len(self.rhs))]
        self.pivots = 0

    def entering(self):
        """Return the column of the entering variable, or None if optimal."""
        best = None
        for col, cost in enumerate(self.cost):
            if cost.sign() > 0:
                if best is None or self.nonbasic[col] < self.nonbasic[best]:
                    best = col
        return best

    def leaving(self, col):
        """Return the row of the leaving variable for column ``col``."""
        best = None
        best_ratio = None
        for row, coefficients in enumerate(self.rows):
            d = coefficients[col]
            if d.sign() >= 0:
                continue
            ratio = self.rhs[row] / -d
            if (best is None or ratio < best_ratio or
                    (ratio == best_ratio and
                     self.basic[row] < self.basic[best])):
                best = row
                best_ratio = ratio
        return best

    def pivot(self, row, col):
        """Exchange basic variable ``row`` with nonbasic variable ``col``."""
        pivot_row = self.rows[row]
        d = pivot_row[col]
        inverse = ONE / d
        new_row = [-v * inverse if v else ZERO for v in pivot_row]
        new_row[col] = inverse
        new_rhs = -self.rhs[row] * inverse
        self.rows[row] = new_row
        self.rhs[row] = new_rhs
        for other, coefficients in enumerate(self.rows):
            if other == row:
                continue
            factor = coefficients[col]
            if not factor:
                continue
            updated = [a + factor * b if b else a
                       for a, b in zip(coefficients, new_row)]
            updated[col] = factor * inverse
            self.rows[other] = updated
            self.rhs[other] = self.rhs[other] + factor * new_rhs
        factor = self.cost[col]
        if factor:
            updated = [a + factor * b if b else a
                       for a, b in zip(self.cost, new_row)]
            updated[col] = factor * inverse
            self.cost = updated
            self.value = self.value + factor * new_rhs
        self.basic[row], self.nonbasic[col] = (self.nonbasic[col],
                                              self.basic[row])
        self.pivots += 1

    def solution(self):
        """Return the current values of the structural variables."""
        values = [ZERO] * self.nvars
        for label, value in zip(self.basic, self.rhs):
            if label < self.nvars:
                values[label] = value
        return values

    def maximize(self, stop_when_positive=False):
        """Pivot until optimal.

        :param stop_when_positive: Return as soon as the objective value is
                                   positive
        :type stop_when_positive: bool
        :returns: Objective value and structural solution
        :rtype: Tuple[Scalar, List[Scalar]]
        :raises: regions_exceptions.InputError if the problem is unbounded
        """
        while True:
            if stop_when_positive and self.value.sign() > 0:
                break
            col = self.entering()
            if col is None:
                break
            row = self.leaving(col)
            if row is None:
                raise regions_exceptions.InputError("unbounded program")
            self.pivot(row, col)
        return self.value, self.solution()


def _slack_rows(normals, signs):
    """Rows and right hand sides of the slack program in ``(x+, x-, d)``."""
    dim = len(normals[0])
    nvars = 2 * dim + 1
    matrix = []
    rhs = []
    for normal, s in zip(normals, signs):
        # d - s<n, x+> + s<n, x-> <= 0
        row = [ZERO] * nvars
        for j, c in enumerate(normal):
            if c:
                row[j] = -c if s > 0 else c
                row[dim + j] = c if s > 0 else -c
        row[-1] = ONE
        matrix.append(row)
        rhs.append(ZERO)
    for j in range(nvars):
        row = [ZERO] * nvars
        row[j] = ONE
        matrix.append(row)
        rhs.append(ONE)
    return matrix, rhs


def _slack_with_linprog(normals, signs):
    dim = len(normals[0])
    matrix, rhs = _slack_rows(normals, signs)
    cost = [0] * (2 * dim) + [-1]
    value, values = linprog(
        cost, [[c.to_sympy() for c in row] for row in matrix],
        [b.to_sympy() for b in rhs])
    values = [Scalar.from_sympy(v) for v in values]
    logging.debug("Slack program with {} constraints solved by sympy"
                  .format(len(normals)))
    return (-Scalar.from_sympy(value),
            tuple(values[j] - values[dim + j] for j in range(dim)))


def _slack_with_tableau(normals, signs, stop_when_positive):
    dim = len(normals[0])
    matrix, rhs = _slack_rows(normals, signs)
    objective = [ZERO] * (2 * dim) + [ONE]
    tableau = SimplexTableau(matrix, rhs, objective)
    value, values = tableau.maximize(stop_when_positive=stop_when_positive)
    logging.debug("Slack program with {} constraints: {} pivots"
                  .format(len(normals), tableau.pivots))
    return value, tuple(values[j] - values[dim + j] for j in range(dim))


def maximize_slack(normals, signs, stop_when_positive=False):
    """Maximise the slack of the open cone ``s_i <n_i, x> > 0``.

    :param normals: Normals n_i, all of one dimension
    :type normals: Sequence[Sequence[Scalar]]
    :param signs: Required signs s_i, each +1 or -1
    :type signs: Sequence[int]
    :param stop_when_positive: Stop at the first strictly interior point;
                               only the Q(r5) tableau honours it
    :type stop_when_positive: bool
    :returns: Slack d* and a point x* with s_i <n_i, x*> >= d*
    :rtype: Tuple[Scalar, Tuple[Scalar, ...]]
    """
    normals = [[as_scalar(c) for c in n] for n in normals]
    if all(c.is_rational for n in normals for c in n):
        return _slack_with_linprog(normals, signs)
    return _slack_with_tableau(normals, signs, stop_when_positive)
