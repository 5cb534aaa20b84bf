# ======================================================================
# circlemorse: combinatorial invariants of circle valued Morse maps
# Copyright (C) 2026 Alberto Díaz-Álvarez
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the
# “Software”), to deal in the Software without restriction, including
# without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to
# the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
# IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY
# CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT,
# TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH
# THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
# ======================================================================
"""Weighted l1 minimization over an affine integer lattice.

Problems are ``min sum(w_j * |x_j|)`` subject to ``M x = t`` with ``x``
integer. Columns with a positive weight are searched inside a box of a
given radius; columns with a null weight do not change the objective, so
they are left unbounded and handled exactly through an integer echelon
form of the lattice they span.
"""
from __future__ import annotations

import dataclasses
import itertools
import logging
import warnings
from typing import Dict, List, Optional, Sequence, Tuple

from . import api
from .exception import BoxTooSmall, Infeasible

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


# ~~~~~~~~~~~~~~~~~~~~~~~
# Problems and solutions
# ~~~~~~~~~~~~~~~~~~~~~~~
class LatticeProblem:
    """A system ``M x = t`` together with the weights of the objective."""

    def __init__(
            self,
            *,
            matrix: Sequence[Sequence[int]],
            target: Sequence[int],
            weights: Sequence[int],
            labels: Sequence[str] = None,
    ):
        """Initializes this object.

        :param matrix: The constraint rows. Every row has one entry per
            column (variable).
        :param target: The right hand side, one value per row.
        :param weights: The non negative weight of each column.
        :param labels: Names for the columns. Defaults to ``x0, x1, ...``.
        :raise ValueError: If the dimensions do not agree or a weight is
            negative.
        """
        self.__matrix = tuple(tuple(int(v) for v in row) for row in matrix)
        self.__target = tuple(int(v) for v in target)
        self.__weights = tuple(int(w) for w in weights)
        columns = len(self.__weights)
        if len(self.__matrix) != len(self.__target):
            raise ValueError('Matrix and target have different row counts')
        if any(len(row) != columns for row in self.__matrix):
            raise ValueError('Every row needs one entry per weight')
        if any(w < 0 for w in self.__weights):
            raise ValueError('Weights must be non negative')
        if labels is None:
            labels = [f'x{j}' for j in range(columns)]
        if len(labels) != columns:
            raise ValueError('There must be one label per column')
        self.__labels = tuple(labels)

    @property
    def matrix(self) -> Tuple[Vector, ...]:
        return self.__matrix

    @property
    def target(self) -> Vector:
        return self.__target

    @property
    def weights(self) -> Vector:
        return self.__weights

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.__labels

    @property
    def rows(self) -> int:
        return len(self.__matrix)

    @property
    def columns(self) -> int:
        return len(self.__weights)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.__matrix)

    def image(self, x: Sequence[int]) -> Vector:
        """The product ``M x``."""
        return tuple(
            sum(a * b for a, b in zip(row, x)) for row in self.__matrix
        )

    def is_feasible(self, x: Sequence[int]) -> bool:
        return self.image(x) == self.__target

    def value(self, x: Sequence[int]) -> int:
        """The weighted l1 norm of the vector."""
        return sum(w * abs(v) for w, v in zip(self.__weights, x))

    def __repr__(self):
        return f'LatticeProblem(rows={self.rows}, columns={self.columns})'


@dataclasses.dataclass(frozen=True)
class LatticeSolution:
    """The minimizer found by a solver.

    ``touches_box`` tells if a positive weight coordinate reached the box
    radius, ``complete`` if the search was not cut short by a node limit.
    """
    x: Vector
    value: int
    box: int
    nodes: int = 0
    touches_box: bool = False
    complete: bool = True

    def as_mapping(self, labels: Sequence[str]) -> Dict[str, int]:
        """The non zero coordinates by column label."""
        return {label: v for label, v in zip(labels, self.x) if v}


# ~~~~~~~~~~~~~~~~~~~~~~
# Integer echelon forms
# ~~~~~~~~~~~~~~~~~~~~~~
class IntegerLattice:
    """The set of integer combinations of some generator vectors.

    The generators are brought to an echelon form by unimodular row
    operations, keeping track of how every echelon row is made from the
    generators, so membership can be decided exactly and witnessed.
    """

    def __init__(self, generators: Sequence[Sequence[int]], dimension: int):
        """Initializes this object.

        :param generators: The vectors spanning the lattice.
        :param dimension: The length of every vector.
        """
        self.__dimension = dimension
        self.__count = len(generators)
        rows = [list(g) for g in generators]
        combos = [
            [int(i == j) for j in range(self.__count)]
            for i in range(self.__count)
        ]
        pivots, top = [], 0
        for col in range(dimension):
            found = False
            while True:
                candidates = [i for i in range(top, len(rows)) if rows[i][col]]
                if not candidates:
                    break
                found = True
                best = min(candidates, key=lambda i: abs(rows[i][col]))
                rows[top], rows[best] = rows[best], rows[top]
                combos[top], combos[best] = combos[best], combos[top]
                clean = True
                for i in range(top + 1, len(rows)):
                    if rows[i][col]:
                        q = rows[i][col] // rows[top][col]
                        rows[i] = [
                            a - q * b for a, b in zip(rows[i], rows[top])
                        ]
                        combos[i] = [
                            a - q * b for a, b in zip(combos[i], combos[top])
                        ]
                        clean = clean and not rows[i][col]
                if clean:
                    break
            if found:
                pivots.append(col)
                top += 1
        self.__rows = rows[:top]
        self.__combos = combos[:top]
        self.__pivots = pivots

    @property
    def rank(self) -> int:
        return len(self.__pivots)

    def solve(self, vector: Sequence[int]) -> Optional[List[int]]:
        """Writes the vector as a combination of the generators.

        :param vector: The vector to decompose.
        :return: The integer coefficients of one combination of the
            generators equal to the vector, or None if the vector is not
            in the lattice.
        """
        residual = list(vector)
        coefficients = [0] * self.__count
        for row, combo, col in zip(self.__rows, self.__combos, self.__pivots):
            if residual[col] % row[col]:
                return None
            q = residual[col] // row[col]
            if q:
                residual = [a - q * b for a, b in zip(residual, row)]
                coefficients = [a + q * b for a, b in zip(coefficients, combo)]
        if any(residual):
            return None
        return coefficients

    def __contains__(self, vector: Sequence[int]) -> bool:
        return self.solve(vector) is not None


# ~~~~~~~
# Solvers
# ~~~~~~~
def value_order(box: int) -> List[int]:
    """Candidate values for a coordinate: 0, 1, -1, 2, -2, ... box, -box."""
    values = [0]
    for v in range(1, box + 1):
        values.extend((v, -v))
    return values


class _Split:
    """The columns of a problem split by the sign of their weight."""

    def __init__(self, problem: LatticeProblem):
        self.problem = problem
        columns = range(problem.columns)
        self.positive = [j for j in columns if problem.weights[j]]
        self.zero = [j for j in columns if not problem.weights[j]]
        self.zero_lattice = IntegerLattice(
            [problem.column(j) for j in self.zero], problem.rows
        )

    def complete(self, partial: Dict[int, int]) -> Optional[Vector]:
        """Fills the null weight columns for the positive weight values.

        :return: The full vector, or None if no integer completion exists.
        """
        problem = self.problem
        x = [0] * problem.columns
        for j, v in partial.items():
            x[j] = v
        residual = [t - m for t, m in zip(problem.target, problem.image(x))]
        free = self.zero_lattice.solve(residual)
        if free is None:
            return None
        for j, v in zip(self.zero, free):
            x[j] = v
        return tuple(x)

    def key(self, x: Sequence[int]) -> Vector:
        """The positive weight coordinates in column order."""
        return tuple(x[j] for j in self.positive)

    def check_lattice(self):
        """Raises if the target is not reachable at all."""
        full = IntegerLattice(
            [self.problem.column(j) for j in range(self.problem.columns)],
            self.problem.rows,
        )
        if self.problem.target not in full:
            raise Infeasible()


class BranchAndBound(api.LatticeSolver):
    """Exact depth first branch and bound inside the box.

    Positive weight columns are fixed one at a time, heaviest first,
    trying values closest to zero first. A branch is pruned when its
    accumulated cost exceeds the incumbent, when the residual target is
    not in the lattice of the remaining columns or when some row cannot
    be balanced by the remaining bounded columns.
    """

    def __init__(self, *, box: int, node_limit: int = None):
        """Initializes this object.

        :param box: The radius of the search box.
        :param node_limit: The maximum number of nodes to explore before
            returning the incumbent. Defaults to None (no limit).
        """
        super().__init__(box=box)
        self.node_limit = node_limit

    def __call__(
            self,
            problem: LatticeProblem,
            *,
            incumbent: Sequence[int] = None,
    ) -> LatticeSolution:
        split = _Split(problem)
        split.check_lattice()
        order = sorted(split.positive, key=lambda j: -problem.weights[j])
        lattices = [
            IntegerLattice(
                [problem.column(j) for j in order[d:] + split.zero],
                problem.rows,
            )
            for d in range(len(order) + 1)
        ]
        free_rows = [
            i for i in range(problem.rows)
            if not any(problem.matrix[i][j] for j in split.zero)
        ]
        reach = [
            [
                self.box * sum(abs(problem.matrix[i][j]) for j in order[d:])
                for i in range(problem.rows)
            ]
            for d in range(len(order) + 1)
        ]
        values = value_order(self.box)

        best: List[Optional[Tuple[int, Vector, Vector]]] = [None]
        nodes = [0]
        complete = [True]

        def offer(x):
            if x is None:
                return
            candidate = (problem.value(x), split.key(x), x)
            if best[0] is None or candidate[:2] < best[0][:2]:
                best[0] = candidate

        if incumbent is not None:
            partial = {j: incumbent[j] for j in split.positive}
            if all(abs(v) <= self.box for v in partial.values()):
                offer(split.complete(partial))

        def search(depth, partial, cost, residual):
            nodes[0] += 1
            if self.node_limit is not None and nodes[0] > self.node_limit:
                complete[0] = False
                return
            if best[0] is not None and cost > best[0][0]:
                return
            if any(abs(residual[i]) > reach[depth][i] for i in free_rows):
                return
            if residual not in lattices[depth]:
                return
            if depth == len(order):
                offer(split.complete(partial))
                return
            j = order[depth]
            column = problem.column(j)
            weight = problem.weights[j]
            for v in values:
                if best[0] is not None and cost + weight * abs(v) > best[0][0]:
                    continue
                partial[j] = v
                search(
                    depth + 1,
                    partial,
                    cost + weight * abs(v),
                    [r - v * c for r, c in zip(residual, column)],
                )
                del partial[j]
                if not complete[0]:
                    return

        search(0, {}, 0, list(problem.target))
        logger.debug(
            'Branch and bound explored %d nodes with box %d',
            nodes[0], self.box,
        )
        if best[0] is None:
            raise Infeasible(box=self.box)
        return _solution(split, best[0], self.box, nodes[0], complete[0])


class BruteForce(api.LatticeSolver):
    """Exhaustive enumeration of every box point, used as an oracle."""

    def __call__(
            self,
            problem: LatticeProblem,
            *,
            incumbent: Sequence[int] = None,
    ) -> LatticeSolution:
        split = _Split(problem)
        split.check_lattice()
        best = None
        count = 0
        span = range(-self.box, self.box + 1)
        for values in itertools.product(span, repeat=len(split.positive)):
            count += 1
            x = split.complete(dict(zip(split.positive, values)))
            if x is None:
                continue
            candidate = (problem.value(x), split.key(x), x)
            if best is None or candidate[:2] < best[:2]:
                best = candidate
        if best is None:
            raise Infeasible(box=self.box)
        return _solution(split, best, self.box, count, True)


def _solution(split, best, box, nodes, complete) -> LatticeSolution:
    value, key, x = best
    return LatticeSolution(
        x=x,
        value=value,
        box=box,
        nodes=nodes,
        touches_box=any(abs(v) == box for v in key),
        complete=complete,
    )


METHODS = {
    'branch-and-bound': BranchAndBound,
    'brute-force': BruteForce,
}


def minimize_l1(
        problem: LatticeProblem,
        box: int,
        *,
        method: str = 'branch-and-bound',
        incumbent: Sequence[int] = None,
) -> LatticeSolution:
    """Minimizes the weighted l1 norm over the lattice points in the box.

    Ties are broken by the lexicographically smallest positive weight
    part of the minimizer.

    :param problem: The problem to solve.
    :param box: The radius of the box for the positive weight columns.
    :param method: Either "branch-and-bound" (the default) or
        "brute-force".
    :param incumbent: A known feasible point to start the search from.
    :return: The minimizer and its value.
    :raise Infeasible: If the target is not in the lattice at all (with
        no box) or there is no lattice point in the box (with the box).
    """
    try:
        solver = METHODS[method](box=box)
    except KeyError:
        raise ValueError(f'Unknown minimization method {method!r}') from None
    solution = solver(problem, incumbent=incumbent)
    if solution.touches_box:
        logger.warning('Minimizer touches the search box %d', box)
        warnings.warn(BoxTooSmall(box=box, value=solution.value))
    return solution
