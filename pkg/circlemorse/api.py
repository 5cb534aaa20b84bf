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
"""Definition of the generic high level API for the library.

The rest of modules will either inherit from these contracts or use
them ignoring their implementations: reports are rendered the same way
by the command line whatever computation produced them, graph moves are
interchangeable callables and lattice solvers can be swapped for one
another (which is how the exhaustive solver works as an oracle).
"""
from __future__ import annotations

import abc
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Dict, List, Mapping, Sequence, Tuple

if TYPE_CHECKING:  # pragma: no cover
    from .fiber_graph import MorseGraph
    from .lattice import LatticeProblem, LatticeSolution
    from .surgery_moves import MoveRecord


def plain(value: Any) -> Any:
    """Converts a report value into a JSON friendly one.

    Fractions become ``"p/q"`` strings, mappings become dicts with string
    keys and any other iterable (but strings) becomes a list.
    """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f'{value.numerator}/{value.denominator}'
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, Report):
        return value.as_dict()
    if isinstance(value, Mapping):
        return {str(k): plain(v) for k, v in value.items()}
    return [plain(v) for v in value]


def text(value: Any) -> str:
    """Converts a report value into its ASCII text representation."""
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return '-'
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f'{value.numerator}/{value.denominator}'
    if isinstance(value, (int, str)):
        return str(value)
    if isinstance(value, Mapping):
        return ','.join(f'{k}={text(v)}' for k, v in value.items())
    return ','.join(text(v) for v in value)


# ~~~~~~~~~~~~~~~
# circlemorse API
# ~~~~~~~~~~~~~~~
class Report(metaclass=abc.ABCMeta):
    """The outcome of a computation, printable as text or as JSON.

    Subclasses only have to say which are their fields (in a stable
    order) and, optionally, which extra lines they want to show below
    the fields line.
    """
    title = 'report'

    @abc.abstractmethod
    def fields(self) -> List[Tuple[str, Any]]:
        """The ordered (key, value) pairs of this report."""

    def details(self) -> List[str]:
        """Extra lines for the text rendering. None by default."""
        return []

    def as_dict(self) -> Dict[str, Any]:
        """A machine readable mirror of this report.

        :return: A dictionary with the stable key names of the fields
            plus the report kind under the ``report`` key.
        """
        data = {'report': self.title}
        data.update((k, plain(v)) for k, v in self.fields())
        return data

    def render(self) -> str:
        """Renders the report as ASCII text.

        :return: The title, a line of ``key=value`` pairs and then the
            detail lines, if any.
        """
        lines = [self.title]
        pairs = ' '.join(f'{k}={text(v)}' for k, v in self.fields())
        if pairs:
            lines.append(pairs)
        lines.extend(self.details())
        return '\n'.join(lines)


class Move(metaclass=abc.ABCMeta):
    """A rewrite of a fiber graph into another valid fiber graph."""

    def __call__(self, graph: MorseGraph) -> MorseGraph:
        """Applies the move, discarding its record.

        :param graph: The graph to rewrite.
        :return: The rewritten graph.
        """
        return self.apply(graph)[0]

    @abc.abstractmethod
    def apply(self, graph: MorseGraph) -> Tuple[MorseGraph, MoveRecord]:
        """Applies the move to the graph.

        :param graph: The graph to rewrite.
        :return: A tuple with the rewritten graph and the record of what
            the move changed.
        """


class LatticeSolver(metaclass=abc.ABCMeta):
    """Minimizes a weighted l1 norm over an affine integer lattice."""

    def __init__(self, *, box: int):
        """Initializes this object.

        :param box: The radius of the search box for the columns with a
            positive weight. Must be at least 1.
        """
        if box < 1:
            raise ValueError(f'Box radius must be positive, got {box}')
        self.box = box

    @abc.abstractmethod
    def __call__(
            self,
            problem: LatticeProblem,
            *,
            incumbent: Sequence[int] = None,
    ) -> LatticeSolution:
        """Solves the problem inside the box of this solver.

        :param problem: The problem to solve.
        :param incumbent: A known feasible point, if any. Solvers may use
            it to prune their search.
        :return: The minimizer found, with its value.
        :raise Infeasible: If there is no lattice point in the box.
        """


class Summary(Report):
    """A report made of given fields and detail lines."""

    def __init__(
            self,
            title: str,
            fields: Sequence[Tuple[str, Any]],
            details: Sequence[str] = (),
    ):
        """Initializes this object.

        :param title: The first line of the report.
        :param fields: The ordered (key, value) pairs.
        :param details: Extra lines for the text rendering.
        """
        self.title = title
        self.__fields = list(fields)
        self.__details = list(details)

    def fields(self):
        return list(self.__fields)

    def details(self):
        return list(self.__details)
