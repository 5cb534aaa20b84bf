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
"""Definition of library specific errors and warnings.

Every error carries a stable ``code`` attribute. The codes are part of
the public contract: the command line prints them and the tests assert
them, so they must never change between releases.
"""
from typing import Iterable


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~
# Base exception and warnings
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~
class CircleMorseError(Exception):
    """Generic class for the errors raised from inside the library. """
    code = 'circlemorse-error'


class CircleMorseWarning(UserWarning):
    """Generic class for the warnings issued from inside the library."""


class BoxTooSmall(CircleMorseWarning):
    """The lattice minimizer touches the border of the search box."""

    def __init__(self, *, box: int, value: int):
        """Initializes this object.

        :param box: The radius of the box that was searched.
        :param value: The best value found inside that box.
        """
        msg = f'Minimizer with value {value} touches the search box {box}'
        super().__init__(msg)
        self.box = box
        self.value = value


class HypothesisWarning(CircleMorseWarning):
    """An inequality is evaluated outside of its hypotheses."""


# ~~~~~~~~~~~~
# Graph errors
# ~~~~~~~~~~~~
class GraphError(CircleMorseError):
    """Errors related to the structure of a fiber graph."""
    code = 'graph-error'


class InvalidGraph(GraphError):
    """The graph breaks one of its structural invariants."""
    code = 'invalid-graph'

    def __init__(self, reason: str):
        super().__init__(f'Invalid graph: {reason}')


class UnknownElement(GraphError):
    """A vertex, edge or region id that does not exist was referenced."""
    code = 'unknown-element'

    def __init__(self, *, kind: str, ident: str):
        super().__init__(f'Unknown {kind} "{ident}"')


class ThetaOnCriticalValue(GraphError):
    """The requested fiber is a critical one."""
    code = 'theta-on-critical-value'

    def __init__(self, theta):
        super().__init__(f'Angle {theta} is a critical value')


# ~~~~~~~~~~~~~~~~~~~
# Harmonicity errors
# ~~~~~~~~~~~~~~~~~~~
class HarmonicityError(CircleMorseError):
    """Errors related to the attractor/repeller structure."""
    code = 'harmonicity-error'


class TreePropertyViolation(HarmonicityError):
    """A repeller tree is not a tree (cycle or converging branches)."""
    code = 'tree-property-violation'

    def __init__(self, reason: str):
        super().__init__(f'Tree property violated: {reason}')


class CycleNotClosed(HarmonicityError):
    """The given edge sequence does not close up."""
    code = 'cycle-not-closed'

    def __init__(self, *, position: int, expected: str, found: str):
        msg = f'Cycle broken at step {position}: expected to start at ' \
              f'"{expected}" but starts at "{found}"'
        super().__init__(msg)


# ~~~~~~~~~~~~~~
# Lattice errors
# ~~~~~~~~~~~~~~
class LatticeError(CircleMorseError):
    """Errors related to the integer minimization problems."""
    code = 'lattice-error'


class Infeasible(LatticeError):
    """There is no lattice point satisfying the constraints."""
    code = 'infeasible'

    def __init__(self, *, box: int = None):
        """Initializes this object.

        :param box: The box radius if the infeasibility is relative to
            the search box, None if the system has no integer solution
            at all.
        """
        if box is None:
            msg = 'The system has no integer solution'
        else:
            msg = f'No lattice point inside the box of radius {box}'
        super().__init__(msg)
        self.box = box


class ZeroVariation(LatticeError):
    """The variation is zero so the ratio bound is undefined."""
    code = 'zero-variation'

    def __init__(self):
        super().__init__('The variation is zero')


# ~~~~~~~~~~~~~~~~~~~
# Curve system errors
# ~~~~~~~~~~~~~~~~~~~
class CurveSystemError(CircleMorseError):
    """Errors related to the intersection patterns."""
    code = 'curve-system-error'


class InvalidCurveSystem(CurveSystemError):
    """The curve system breaks one of its structural invariants."""
    code = 'invalid-curve-system'

    def __init__(self, reason: str):
        super().__init__(f'Invalid curve system: {reason}')


class CocycleViolation(CurveSystemError):
    """The orientation cochain is not a coboundary."""
    code = 'cocycle-violation'

    def __init__(self, curve: str):
        msg = f'Curve "{curve}" closes a cycle with non zero signed sum'
        super().__init__(msg)
        self.curve = curve


class NothingToResolve(CurveSystemError):
    """The reduced twist is already zero."""
    code = 'nothing-to-resolve'

    def __init__(self):
        super().__init__('The intersection has nothing to resolve')


class InvalidCase(CurveSystemError):
    """The surgery case does not exist for the given surface."""
    code = 'invalid-case'

    def __init__(self, *, kind, case, surface):
        msg = f'No {case} {kind} exists on a {surface} surface'
        super().__init__(msg)


# ~~~~~~~~~~~
# Move errors
# ~~~~~~~~~~~
class MoveError(CircleMorseError):
    """Errors related to the graph rewrites."""
    code = 'move-error'


class PatternMismatch(MoveError):
    """The graph does not have the shape the move requires."""
    code = 'pattern-mismatch'

    def __init__(self, reason: str):
        super().__init__(f'Pattern mismatch: {reason}')


class NotAdjacent(MoveError):
    """The vertices are not consecutive in the circular order."""
    code = 'not-adjacent'

    def __init__(self, vertices: Iterable[str]):
        names = ', '.join(vertices)
        super().__init__(f'Vertices {names} are not adjacent on the circle')


class IndexMismatch(MoveError):
    """The vertices do not share their Morse index."""
    code = 'index-mismatch'

    def __init__(self, *, first, second):
        super().__init__(f'Index {first} differs from index {second}')


class NonPositiveHandle(MoveError):
    """The handle would not be positively oriented."""
    code = 'non-positive-handle'

    def __init__(self, *, source, target):
        msg = f'Handle from angle {source} to angle {target} is not positive'
        super().__init__(msg)


class PositionOnVertex(MoveError):
    """A position that should be interior to an edge is not."""
    code = 'position-on-vertex'

    def __init__(self, *, edge: str, angle):
        msg = f'Angle {angle} is not interior to the edge "{edge}"'
        super().__init__(msg)
