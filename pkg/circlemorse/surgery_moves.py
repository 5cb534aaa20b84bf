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
"""Rewrites of fiber graphs.

Every move is a callable object (see ``api.Move``) whose ``apply``
method returns the rewritten graph together with a ``MoveRecord`` of
what changed. The outputs are always validated: a move never returns a
graph breaking a local rule. Plain function wrappers are provided for
the common one shot uses.
"""
from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Tuple, Union

from . import api, fixtures
from .exception import (
    IndexMismatch,
    InvalidGraph,
    NonPositiveHandle,
    NotAdjacent,
    PatternMismatch,
    PositionOnVertex,
    ZeroVariation,
)
from .fiber_graph import (
    Chain,
    EdgeData,
    MorseGraph,
    MorseIndex,
    Vertex,
    strand_map,
    tau_chains,
    validate,
    variations,
)
from .harmonicity import is_calabi, marked_points
from .util import Number, chi_minus, format_angle, in_open_arc, normalize, \
    positive_arc
from .vertical_norm import NormSearch, rho_lower_bound, var_capital

logger = logging.getLogger(__name__)

Position = Tuple[str, Union[Number, str]]


# ~~~~~~~~~~~
# Move record
# ~~~~~~~~~~~
@dataclasses.dataclass(frozen=True)
class MoveRecord:
    """What a move changed in a graph.

    The chain deltas are taken edge by edge, so an edge that was split
    shows up with a negative value and its halves with positive ones.
    ``renamed`` maps every new edge produced by splitting to the edge it
    comes from.
    """
    kind: str
    vertices: Tuple[str, ...]
    edges: Tuple[str, ...]
    genus_delta: Chain
    chi_delta: Chain
    repeller_delta: int
    renamed: Mapping[str, str] = dataclasses.field(default_factory=dict)

    def origin(self, edge: str) -> str:
        """The edge of the original graph the given edge comes from."""
        return self.renamed.get(edge, edge)


def _finish(
        kind: str,
        before: MorseGraph,
        after: MorseGraph,
        *,
        vertices: Sequence[str] = (),
        edges: Sequence[str] = (),
        renamed: Mapping[str, str] = None,
) -> Tuple[MorseGraph, MoveRecord]:
    report = validate(after)
    if not report.valid:
        raise InvalidGraph(report.violations[0].message)
    genus_before, chi_before = tau_chains(before)
    genus_after, chi_after = tau_chains(after)
    record = MoveRecord(
        kind=kind,
        vertices=tuple(vertices),
        edges=tuple(edges),
        genus_delta=genus_after - genus_before,
        chi_delta=chi_after - chi_before,
        repeller_delta=len(marked_points(after).repellers)
        - len(marked_points(before).repellers),
        renamed=dict(renamed or {}),
    )
    logger.debug('Applied %s to %s', kind, before.name)
    return after, record


def _next_angle(graph: MorseGraph, angle: Fraction) -> Fraction:
    """Length of the gap from the angle to the following vertex angle."""
    return min(
        (positive_arc(angle, v.angle) for v in graph.vertices),
        default=Fraction(1),
    )


def _split(
        edge: EdgeData,
        at: str,
        first: str,
        second: str,
) -> Tuple[EdgeData, EdgeData]:
    """The two halves of an edge cut at a new vertex."""
    return (
        dataclasses.replace(edge, id=first, head=at),
        dataclasses.replace(edge, id=second, tail=at),
    )


# ~~~~~
# Moves
# ~~~~~
class MoveA(api.Move):
    """Sends the index 2 vertex of a twister loop on a round trip.

    The index 2 point goes once around the circle, passing the index 1
    point, and lands back at its angle. Both fibers gain one handle.
    """

    def __init__(self, *, times: int = 1):
        """Initializes this object.

        :param times: The number of round trips. Not negative.
        """
        if times < 0:
            raise ValueError(f'Expected a non negative count, got {times}')
        self.times = times

    def apply(self, graph):
        if len(graph.vertices) != 2 or len(graph.edges) != 2:
            raise PatternMismatch('expected two vertices and two edges')
        indices = {v.index for v in graph.vertices}
        if indices != {MorseIndex.ONE, MorseIndex.TWO}:
            raise PatternMismatch('expected one index 1 and one index 2 point')
        if {(e.tail, e.head) for e in graph.edges} != {
            (v.id, w.id) for v in graph.vertices for w in graph.vertices
            if v != w
        }:
            raise PatternMismatch('the edges do not form a loop')

        edges = [
            dataclasses.replace(e, genus=e.genus + self.times)
            for e in graph.edges
        ]
        after = MorseGraph(
            vertices=graph.vertices,
            edges=edges,
            name=graph.name,
        )
        return _finish('move-a', graph, after, edges=[e.id for e in edges])


class ReorderSameIndex(api.Move):
    """Swaps the angles of two neighbour vertices of the same index."""

    def __init__(self, first: str, second: str):
        self.first = first
        self.second = second

    def apply(self, graph):
        first = graph.vertex(self.first)
        second = graph.vertex(self.second)
        if first.index is not second.index:
            raise IndexMismatch(
                first=first.index.value, second=second.index.value
            )
        ordered = sorted(graph.vertices, key=lambda v: v.angle)
        i, j = ordered.index(first), ordered.index(second)
        if i == j or (i - j) % len(ordered) not in (1, len(ordered) - 1):
            raise NotAdjacent([first.id, second.id])

        swapped = {first.id: second.angle, second.id: first.angle}
        after = MorseGraph(
            vertices=[
                dataclasses.replace(v, angle=swapped.get(v.id, v.angle))
                for v in graph.vertices
            ],
            edges=graph.edges,
            name=graph.name,
        )
        assert tau_chains(after) == tau_chains(graph)
        assert marked_points(after) == marked_points(graph)
        return _finish(
            'reorder', graph, after, vertices=[first.id, second.id]
        )


class AttachHandle(api.Move):
    """Joins two sheets of fibers with a slanted 1-handle.

    The source edge is cut by a new index 2 point and the target edge by
    a new index 1 point. The handle edge between them is a family of
    spheres and carries a new attractor.
    """

    def __init__(self, source: Position, target: Position, *, name='h'):
        """Initializes this object.

        :param source: The edge where the handle starts and the angle of
            the new index 2 point on it.
        :param target: The edge where the handle ends and the angle of
            the new index 1 point on it.
        :param name: The id of the handle edge. The new vertices are
            named after it. Defaults to "h".
        """
        self.source = (source[0], normalize(Fraction(source[1])))
        self.target = (target[0], normalize(Fraction(target[1])))
        self.name = name

    def apply(self, graph):
        (src, src_angle), (dst, dst_angle) = self.source, self.target
        if src == dst:
            raise PatternMismatch('both ends of the handle on one edge')
        for ident, angle in (self.source, self.target):
            edge = graph.edge(ident)
            start = graph.vertex(edge.tail).angle
            if not in_open_arc(angle, start, graph.arc_length(edge)) \
                    or angle in graph.angles():
                raise PositionOnVertex(edge=ident, angle=format_angle(angle))
        if not src_angle < dst_angle:
            raise NonPositiveHandle(
                source=format_angle(src_angle),
                target=format_angle(dst_angle),
            )

        by_edge = strand_map(graph)
        for ident, bad, reason in (
                (src, MorseIndex.ONE, 'source between index 1 points'),
                (dst, MorseIndex.TWO, 'target between index 2 points'),
        ):
            strand = by_edge[ident]
            if strand.tail is None or strand.head is None:
                raise PatternMismatch(f'"{ident}" is on a bare fibration')
            ends = {graph.vertex(strand.tail).index,
                    graph.vertex(strand.head).index}
            if ends == {bad}:
                raise PatternMismatch(reason)

        up, down = f'{self.name}.src', f'{self.name}.dst'
        halves = {
            src: _split(graph.edge(src), up, f'{src}.1', f'{src}.2'),
            dst: _split(graph.edge(dst), down, f'{dst}.1', f'{dst}.2'),
        }
        edges = []
        for edge in graph.edges:
            edges.extend(halves.get(edge.id, (edge,)))
        edges.append(EdgeData(self.name, up, down, 0, 0))
        after = MorseGraph(
            vertices=list(graph.vertices) + [
                Vertex(up, src_angle, MorseIndex.TWO),
                Vertex(down, dst_angle, MorseIndex.ONE),
            ],
            edges=edges,
            name=graph.name,
        )
        renamed = {h.id: e for e, pair in halves.items() for h in pair}
        return _finish(
            'attach-handle', graph, after,
            vertices=[up, down],
            edges=[self.name] + list(renamed),
            renamed=renamed,
        )


class ConditionFibration(api.Move):
    """Replaces a regular marker by a canceling pair of critical points.

    The index 1 point takes the angle of the marker and the index 2 point
    sits halfway to the next vertex angle. The fibers between them have
    one more handle.
    """

    def __init__(self, marker: str):
        self.marker = marker

    def apply(self, graph):
        marker = graph.vertex(self.marker)
        if marker.index.critical:
            raise PatternMismatch(f'"{marker.id}" is not a regular marker')
        ins, outs = graph.in_edges(marker.id), graph.out_edges(marker.id)
        if len(ins) != 1 or len(outs) != 1:
            raise PatternMismatch(f'"{marker.id}" is not bivalent')
        (incoming,), (outgoing,) = ins, outs

        low, high = f'{marker.id}.1', f'{marker.id}.2'
        gap = _next_angle(graph, marker.angle)
        vertices = [v for v in graph.vertices if v.id != marker.id] + [
            Vertex(low, marker.angle, MorseIndex.ONE),
            Vertex(high, normalize(marker.angle + gap / 2), MorseIndex.TWO),
        ]
        bridge = EdgeData(
            f'{marker.id}.c',
            low,
            high,
            incoming.genus + 1,
            incoming.boundary,
        )
        edges = []
        for edge in graph.edges:
            if edge.id == incoming.id:
                edge = dataclasses.replace(edge, head=low)
            if edge.id == outgoing.id:
                edge = dataclasses.replace(edge, tail=high)
            edges.append(edge)
        edges.append(bridge)
        after = MorseGraph(vertices=vertices, edges=edges, name=graph.name)
        return _finish(
            'condition-fibration', graph, after,
            vertices=[low, high],
            edges=[bridge.id],
        )


class InsertBivalentPair(api.Move):
    """Cuts an edge with a canceling index 1 and index 2 pair.

    The points take one and two thirds of the gap between the tail of the
    edge and the next vertex angle.
    """

    def __init__(self, edge: str):
        self.edge = edge

    def apply(self, graph):
        edge = graph.edge(self.edge)
        start = graph.vertex(edge.tail).angle
        gap = _next_angle(graph, start)
        low, high = f'{edge.id}:1', f'{edge.id}:2'
        pieces = [
            dataclasses.replace(edge, id=f'{edge.id}.a', head=low),
            dataclasses.replace(
                edge, id=f'{edge.id}.c', tail=low, head=high,
                genus=edge.genus + 1,
            ),
            dataclasses.replace(edge, id=f'{edge.id}.b', tail=high),
        ]
        return _insert('insert-pair', graph, edge, pieces, [
            Vertex(low, normalize(start + gap / 3), MorseIndex.ONE),
            Vertex(high, normalize(start + 2 * gap / 3), MorseIndex.TWO),
        ])


class InsertTheta(api.Move):
    """Cuts an edge with a split followed by the matching merge."""

    def __init__(self, edge: str, genus: int, boundary: int = 0):
        """Initializes this object.

        :param edge: The edge to cut.
        :param genus: The genus of the first sheet after the split. The
            second one gets the rest of the genus of the edge.
        :param boundary: The boundary circles of the first sheet.
        """
        self.edge = edge
        self.genus = genus
        self.boundary = boundary

    def apply(self, graph):
        edge = graph.edge(self.edge)
        if not 0 <= self.genus <= edge.genus \
                or not 0 <= self.boundary <= edge.boundary:
            raise PatternMismatch(
                f'cannot take genus {self.genus} and {self.boundary} '
                f'boundary circles from "{edge.id}"'
            )
        start = graph.vertex(edge.tail).angle
        gap = _next_angle(graph, start)
        split, merge = f'{edge.id}:2', f'{edge.id}:1'
        pieces = [
            dataclasses.replace(edge, id=f'{edge.id}.a', head=split),
            EdgeData(
                f'{edge.id}.p', split, merge, self.genus, self.boundary
            ),
            EdgeData(
                f'{edge.id}.q', split, merge,
                edge.genus - self.genus, edge.boundary - self.boundary,
            ),
            dataclasses.replace(edge, id=f'{edge.id}.b', tail=merge),
        ]
        return _insert('insert-theta', graph, edge, pieces, [
            Vertex(split, normalize(start + gap / 3), MorseIndex.TWO),
            Vertex(merge, normalize(start + 2 * gap / 3), MorseIndex.ONE),
        ])


def _insert(kind, graph, edge, pieces, new_vertices):
    edges = []
    for current in graph.edges:
        edges.extend(pieces if current.id == edge.id else (current,))
    after = MorseGraph(
        vertices=list(graph.vertices) + new_vertices,
        edges=edges,
        name=graph.name,
    )
    return _finish(
        kind, graph, after,
        vertices=[v.id for v in new_vertices],
        edges=[p.id for p in pieces],
        renamed={p.id: edge.id for p in pieces},
    )


# ~~~~~~~~~~~~~~~~~
# Functional access
# ~~~~~~~~~~~~~~~~~
def move_a_roundtrip(graph: MorseGraph, times: int = 1) -> MorseGraph:
    """Applies the round trip move to a twister loop.

    :raise PatternMismatch: If the graph is not a twister loop.
    """
    return MoveA(times=times)(graph)


def reorder_same_index(graph: MorseGraph, first: str, second: str):
    """Swaps two neighbour critical values of the same index.

    :raise IndexMismatch: If the indices differ.
    :raise NotAdjacent: If another vertex sits between them.
    """
    return ReorderSameIndex(first, second)(graph)


def attach_handle(
        graph: MorseGraph,
        source: Position,
        target: Position,
        *,
        name: str = 'h',
) -> MorseGraph:
    """Attaches a 1-handle from one edge to another.

    :param graph: The graph (usually a disjoint union).
    :param source: ``(edge, angle)`` where the handle starts.
    :param target: ``(edge, angle)`` where the handle ends.
    :param name: The id of the new edge.
    :return: The graph with the handle.
    :raise NonPositiveHandle: If the target angle is not after the
        source one.
    :raise PositionOnVertex: If an angle is not interior to its edge.
    :raise PatternMismatch: If the handle would create a repeller.
    """
    return AttachHandle(source, target, name=name)(graph)


def condition_fibration(graph: MorseGraph, marker: str) -> MorseGraph:
    return ConditionFibration(marker)(graph)


def insert_bivalent_pair(graph: MorseGraph, edge: str) -> MorseGraph:
    return InsertBivalentPair(edge)(graph)


def insert_theta(
        graph: MorseGraph,
        edge: str,
        genus: int,
        boundary: int = 0,
) -> MorseGraph:
    return InsertTheta(edge, genus, boundary)(graph)


# ~~~~~~~~~~~~~~~~~~~
# The twister family
# ~~~~~~~~~~~~~~~~~~~
class TwisterReport(api.Report):
    """Invariants of a twister loop after some round trips."""
    title = 'twister'

    def __init__(
            self,
            *,
            n: int,
            k: int,
            boundary: int,
            graph: MorseGraph,
            search: NormSearch = None,
            thurston_value: int = None,
    ):
        """Initializes this object.

        :param n: The genus of the starting thin fiber.
        :param k: The number of round trips.
        :param boundary: The boundary circles of every fiber.
        :param graph: The twisted graph.
        :param search: The box and method for the norm computations.
        :param thurston_value: The complexity of a surface in the fiber
            class. Defaults to the one of the starting thin fiber.
        """
        self.n, self.k, self.boundary = n, k, boundary
        self.genus_arc_ba = graph.edge('e_ba').genus
        self.genus_arc_ab = graph.edge('e_ab').genus
        self.var_capital = var_capital(graph, search=search)
        self.var = variations(graph).var
        self.chi_minus_best = graph.edge('e_ba').chi_minus
        self.calabi = is_calabi(graph).calabi
        if thurston_value is None:
            thurston_value = chi_minus(n, boundary)
        self.thurston_value = thurston_value
        try:
            self.rho_lower_bound: Optional[Fraction] = rho_lower_bound(
                graph, Chain({'e_ba': 1}), thurston_value, search=search
            )
        except ZeroVariation:
            self.rho_lower_bound = None

    @property
    def stated_chi_minus_best(self) -> int:
        """Complexity of the best fiber as the genus count gives it."""
        return 2 * (self.n + self.k)

    def fields(self):
        fields = [
            ('n', self.n),
            ('k', self.k),
            ('genus_arc_ba', self.genus_arc_ba),
            ('genus_arc_ab', self.genus_arc_ab),
            ('Var', self.var_capital),
            ('var', self.var),
            ('chi_minus_best', self.chi_minus_best),
            ('is_calabi', self.calabi),
            ('rho_lower_bound', self.rho_lower_bound),
        ]
        if self.boundary:
            stated = self.stated_chi_minus_best
            fields += [
                ('chi_minus_best_stated', stated),
                ('chi_minus_best_mismatch', stated != self.chi_minus_best),
            ]
        return fields


def twister(
        n: int,
        k: int,
        boundary: int = 0,
        *,
        search: NormSearch = None,
        thurston_value: int = None,
) -> Tuple[MorseGraph, TwisterReport]:
    """The twister loop of genus n after k round trips.

    :param n: The genus of the thin fiber. Not negative.
    :param k: The number of round trips. Not negative.
    :param boundary: 0 for closed fibers, 1 for the solid torus variant.
    :return: The graph and its report.
    """
    if n < 0 or k < 0:
        raise ValueError(f'Expected n >= 0 and k >= 0, got {n} and {k}')
    if boundary not in (0, 1):
        raise ValueError(f'Boundary must be 0 or 1, got {boundary}')
    graph = MoveA(times=k)(fixtures.twister_graph(n, boundary))
    report = TwisterReport(
        n=n,
        k=k,
        boundary=boundary,
        graph=graph,
        search=search,
        thurston_value=thurston_value,
    )
    return graph, report
