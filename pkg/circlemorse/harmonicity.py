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
"""Harmonicity of a fiber graph and its attractor/repeller structure.

A map is intrinsically harmonic when every edge of its graph lies on a
positively oriented loop. The edges going from an index 2 vertex to an
index 1 vertex carry an attractor, the ones going the other way around
carry a repeller, and the trees grown from the repellers until the first
attractors cover the whole graph.
"""
from __future__ import annotations

import collections
import dataclasses
import enum
import logging
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Set,
    Tuple,
)

import networkx as nx

from .exception import CycleNotClosed, TreePropertyViolation
from .fiber_graph import MorseGraph, MorseIndex, is_bubbling, strands

logger = logging.getLogger(__name__)

Segment = Tuple[str, str]
SignedEdge = Tuple[str, int]


# ~~~~~~~~~~~~~
# Marked points
# ~~~~~~~~~~~~~
class MarkKind(enum.Enum):
    ATTRACTOR = 'A'
    REPELLER = 'R'


@dataclasses.dataclass(frozen=True)
class MarkedPoint:
    """An attractor or a repeller, sitting at the middle of its edge."""
    edge: str
    kind: MarkKind

    @property
    def label(self) -> str:
        prefix = 'a' if self.kind is MarkKind.ATTRACTOR else 'r'
        return f'{prefix}_{self.edge}'


class MarkedPoints(NamedTuple):
    attractors: Tuple[MarkedPoint, ...]
    repellers: Tuple[MarkedPoint, ...]


def marked_points(graph: MorseGraph) -> MarkedPoints:
    """Attractors and repellers of the graph.

    Regular markers are transparent: a run of edges through markers is
    classified by the critical vertices at its ends and its marked point
    (if any) sits on the first edge of the run.

    :param graph: A valid graph with no local extrema.
    :return: The attractors and the repellers, in edge order.
    """
    attractors, repellers = [], []
    for strand in strands(graph):
        if strand.tail is None or strand.head is None:
            continue
        ends = (graph.vertex(strand.tail).index,
                graph.vertex(strand.head).index)
        if ends == (MorseIndex.TWO, MorseIndex.ONE):
            attractors.append(MarkedPoint(strand.edges[0], MarkKind.ATTRACTOR))
        elif ends == (MorseIndex.ONE, MorseIndex.TWO):
            repellers.append(MarkedPoint(strand.edges[0], MarkKind.REPELLER))
    order = {e.id: i for i, e in enumerate(graph.edges)}
    return MarkedPoints(
        tuple(sorted(attractors, key=lambda m: order[m.edge])),
        tuple(sorted(repellers, key=lambda m: order[m.edge])),
    )


def marks_by_edge(graph: MorseGraph) -> Dict[str, MarkedPoint]:
    """The marked point carried by each marked edge."""
    marks = marked_points(graph)
    return {m.edge: m for m in marks.attractors + marks.repellers}


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~
# Calabi property and kernels
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~
class CalabiResult(NamedTuple):
    calabi: bool
    witness: Optional[str]


def is_calabi(graph: MorseGraph) -> CalabiResult:
    """Tells if every edge lies on a positively oriented loop.

    An edge lies on such a loop iff both of its endpoints belong to the
    same strongly connected component.

    :param graph: The graph to check.
    :return: The verdict and, when negative, the first edge breaking it.
    """
    component = {}
    for i, nodes in enumerate(
            nx.strongly_connected_components(graph.to_networkx())
    ):
        component.update((node, i) for node in nodes)
    for edge in graph.edges:
        if component[edge.tail] != component[edge.head]:
            logger.debug('Edge %s is not on a positive loop', edge.id)
            return CalabiResult(False, edge.id)
    return CalabiResult(True, None)


class KernelResult(NamedTuple):
    trivial: bool
    witness: Optional[Dict[str, int]]
    box: int


def kernel_test(graph: MorseGraph, *, box: int = 4) -> KernelResult:
    """Looks for a positive combination of attractors with no intersection.

    A non zero, non negative combination of attractor fibers whose
    intersection with every loop vanishes is a positive combination of
    oriented fiber components which bounds. Its absence is the criterion
    for harmonicity in terms of attractors. The search is exhaustive
    inside the box but says nothing about larger combinations.

    :param graph: A valid graph.
    :param box: The maximum multiplicity of each attractor. Defaults to 4.
    :return: Whether no such combination was found and, if one was, the
        combination itself as a mapping from attractor labels.
    """
    from .vertical_norm import attractor_matrix, cycle_basis

    attractors = marked_points(graph).attractors
    matrix = attractor_matrix(graph, cycle_basis(graph), attractors)
    columns = [[row[j] for row in matrix] for j in range(len(attractors))]
    order = sorted(range(len(columns)), key=lambda j: any(columns[j]))

    found = _positive_kernel_vector([columns[j] for j in order], box)
    if found is None:
        return KernelResult(True, None, box)
    witness = {
        attractors[j].label: found[i] for i, j in enumerate(order) if found[i]
    }
    return KernelResult(False, witness, box)


def _positive_kernel_vector(columns, box):
    """Depth first search of a non zero kernel vector in ``[0, box]``."""
    rows = len(columns[0]) if columns else 0
    lows = [[0] * rows for _ in range(len(columns) + 1)]
    highs = [[0] * rows for _ in range(len(columns) + 1)]
    for j in reversed(range(len(columns))):
        for i in range(rows):
            value = columns[j][i] * box
            lows[j][i] = lows[j + 1][i] + min(value, 0)
            highs[j][i] = highs[j + 1][i] + max(value, 0)

    def search(j, residual, values):
        if j == len(columns):
            return values if any(values) and not any(residual) else None
        for i in range(rows):
            if not lows[j][i] <= -residual[i] <= highs[j][i]:
                return None
        for value in range(box + 1):
            moved = [r + value * c for r, c in zip(residual, columns[j])]
            result = search(j + 1, moved, values + [value])
            if result is not None:
                return result
        return None

    return search(0, [0] * rows, [])


# ~~~~~~~~~~~~~~~~~~
# Same index loops
# ~~~~~~~~~~~~~~~~~~
def same_index_components(
        graph: MorseGraph,
) -> List[Tuple[MorseIndex, List[str]]]:
    """Groups of vertices connected by positive loops of one index.

    :return: For each index, the strongly connected pieces of the graph
        restricted to that index (and regular markers) which contain a
        positive loop through a critical vertex.
    """
    full = graph.to_networkx()
    result = []
    for index in (MorseIndex.ONE, MorseIndex.TWO):
        keep = [
            v.id for v in graph.vertices
            if v.index in (index, MorseIndex.REGULAR)
        ]
        restricted = full.subgraph(keep)
        for nodes in nx.strongly_connected_components(restricted):
            critical = [
                v for v in nodes if graph.vertex(v).index is index
            ]
            looped = len(nodes) > 1 or any(
                restricted.has_edge(v, v) for v in nodes
            )
            if critical and looped:
                order = {v.id: i for i, v in enumerate(graph.vertices)}
                result.append((index, sorted(nodes, key=order.get)))
    return result


def same_index_warnings(graph: MorseGraph) -> List[str]:
    """Warnings for positive loops of one index with non bubbling points.

    Such loops may only go through bubbling critical points.
    """
    warnings = []
    for index, nodes in same_index_components(graph):
        offending = [
            v for v in nodes
            if graph.vertex(v).index.critical and not is_bubbling(graph, v)
        ]
        if offending:
            warnings.append(
                f'positive loop through {",".join(nodes)} has only index '
                f'{index.value} points but {",".join(offending)} '
                f'is not bubbling'
            )
    for warning in warnings:
        logger.warning('%s: %s', graph.name, warning)
    return warnings


def tree_hypotheses(graph: MorseGraph) -> List[str]:
    """Reasons why the repeller trees may fail to exist.

    :return: An empty list when no positive loop of a single index exists
        and every vertex has a valid degree signature.
    """
    from .fiber_graph import SIGNATURES

    reasons = []
    for vertex in graph.vertices:
        key = (vertex.index, len(graph.in_edges(vertex.id)),
               len(graph.out_edges(vertex.id)))
        if key not in SIGNATURES:
            reasons.append(f'vertex {vertex.id} has no valid signature')
    for index, nodes in same_index_components(graph):
        reasons.append(
            f'positive loop through {",".join(nodes)} with only index '
            f'{index.value} points'
        )
    return reasons


# ~~~~~~~~~~~~~~
# Repeller trees
# ~~~~~~~~~~~~~~
@dataclasses.dataclass(frozen=True)
class RepellerTree:
    """The branches grown from a repeller until the first attractors.

    Segments are ``(edge, part)`` pairs where part is ``"whole"``, or
    ``"tail"``/``"head"`` for the halves of an edge split at its marked
    point.
    """
    root: MarkedPoint
    direction: int
    branches: Tuple[Tuple[str, ...], ...]
    segments: FrozenSet[Segment]

    @property
    def leaves(self) -> Tuple[str, ...]:
        """The attractor edges where the branches end."""
        return tuple(branch[-1] for branch in self.branches)

    @property
    def sign(self) -> str:
        return '+' if self.direction > 0 else '-'


def build_tree(
        graph: MorseGraph,
        repeller: MarkedPoint,
        direction: int,
) -> RepellerTree:
    """Grows the tree of a repeller in one direction.

    Branches follow the edges positively (direction +1) or negatively
    (direction -1) and end at the first attractor they meet. Next edges
    are explored breadth first, by edge id.

    :param graph: A graph satisfying the tree hypotheses.
    :param repeller: The root of the tree.
    :param direction: +1 or -1.
    :return: The tree.
    :raise TreePropertyViolation: If a branch closes a cycle, reaches
        another repeller, reaches the same attractor twice or ends
        without reaching an attractor.
    """
    if direction not in (1, -1):
        raise ValueError(f'Direction must be +1 or -1, got {direction}')
    marks = marks_by_edge(graph)
    root_edge = graph.edge(repeller.edge)
    forward = direction > 0
    segments = {(root_edge.id, 'head' if forward else 'tail')}
    visited = {root_edge.id}
    branches = []

    def next_edges(edge_id):
        edge = graph.edge(edge_id)
        if forward:
            found = graph.out_edges(edge.head)
        else:
            found = graph.in_edges(edge.tail)
        return sorted(e.id for e in found)

    queue = collections.deque([(root_edge.id, ())])
    while queue:
        current, path = queue.popleft()
        following = next_edges(current)
        if not following:
            raise TreePropertyViolation(f'branch ends at "{current}"')
        for edge_id in following:
            mark = marks.get(edge_id)
            if edge_id in visited:
                what = 'two routes to' if mark else 'a cycle through'
                raise TreePropertyViolation(f'{what} "{edge_id}"')
            visited.add(edge_id)
            if mark is not None and mark.kind is MarkKind.REPELLER:
                raise TreePropertyViolation(
                    f'branch of {repeller.label} reaches {mark.label}'
                )
            if mark is not None:
                segments.add((edge_id, 'tail' if forward else 'head'))
                branches.append(path + (edge_id,))
            else:
                segments.add((edge_id, 'whole'))
                queue.append((edge_id, path + (edge_id,)))

    logger.debug(
        'Tree %s%s has %d branches',
        repeller.label, '+' if forward else '-', len(branches),
    )
    return RepellerTree(
        root=repeller,
        direction=direction,
        branches=tuple(branches),
        segments=frozenset(segments),
    )


def all_trees(graph: MorseGraph) -> List[RepellerTree]:
    """The positive and negative trees of every repeller."""
    return [
        build_tree(graph, repeller, direction)
        for repeller in marked_points(graph).repellers
        for direction in (1, -1)
    ]


def required_segments(graph: MorseGraph) -> Set[Segment]:
    """Every edge segment outside of fibration components.

    Edges carrying a marked point are split in two halves.
    """
    marks = marks_by_edge(graph)
    required = set()
    for strand in strands(graph):
        if strand.tail is None:
            continue
        for edge_id in strand.edges:
            if edge_id in marks:
                required.update({(edge_id, 'tail'), (edge_id, 'head')})
            else:
                required.add((edge_id, 'whole'))
    return required


def tree_cover_check(graph: MorseGraph) -> bool:
    """Tells if the repeller trees cover every edge segment.

    Components with no critical point (fibrations) are not required to
    be covered.

    :raise TreePropertyViolation: If some tree cannot be built.
    """
    covered = set()
    for tree in all_trees(graph):
        covered |= tree.segments
    missing = required_segments(graph) - covered
    if missing:
        logger.debug('Uncovered segments: %s', sorted(missing))
    return not missing


# ~~~~~~~~~~~~~~
# Loop integrals
# ~~~~~~~~~~~~~~
def loop_integral(
        graph: MorseGraph,
        cycle: Sequence[SignedEdge],
        kind: MarkKind,
) -> int:
    """Signed count of the marked points of one kind along a cycle.

    :param graph: The graph.
    :param cycle: The cycle as (edge id, +1 or -1) steps, where the sign
        tells if the edge is traversed along its orientation or against
        it.
    :param kind: Which marked points to count.
    :return: The sum of the signs of the steps on marked edges.
    :raise CycleNotClosed: If consecutive steps do not share a vertex.
    """
    ends = []
    for edge_id, sign in cycle:
        if sign not in (1, -1):
            raise ValueError(f'Traversal sign must be +1 or -1, got {sign}')
        edge = graph.edge(edge_id)
        ends.append((edge.tail, edge.head) if sign > 0
                    else (edge.head, edge.tail))
    for i, (start, _) in enumerate(ends):
        previous_end = ends[i - 1][1]
        if start != previous_end:
            raise CycleNotClosed(
                position=i, expected=previous_end, found=start
            )

    marks = marks_by_edge(graph)
    return sum(
        sign for edge_id, sign in cycle
        if edge_id in marks and marks[edge_id].kind is kind
    )


def signed_cycle(steps: Iterable[str]) -> List[SignedEdge]:
    """Parses ``["e1", "-e3"]`` style steps into signed edges."""
    return [
        (step[1:], -1) if step.startswith('-') else (step.lstrip('+'), 1)
        for step in steps
    ]
