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
"""The fiber graph of a Morse map to the circle.

A ``MorseGraph`` is the quotient of the manifold by the connected fiber
components. Vertices are the critical points (plus regular markers that
give endpoints to fibration components) placed at their critical values
on the circle, and each edge is a family of fiber components, decorated
with the genus and the number of boundary circles of its generic fiber.

The module checks the local rules each vertex must obey and computes the
combinatorial chains the rest of the library is built on: the genus and
complexity chains, their boundaries and the variations.
"""
from __future__ import annotations

import dataclasses
import enum
import logging
from fractions import Fraction
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

import networkx as nx

from . import api
from .exception import InvalidGraph, ThetaOnCriticalValue, UnknownElement
from .util import (
    ONE,
    ZERO,
    chi_minus,
    circular_midpoints,
    euler_characteristic,
    format_angle,
    in_open_arc,
    normalize,
    positive_arc,
)

logger = logging.getLogger(__name__)


# ~~~~~~~~~~~~~~~~~~~~~~
# Vertices, edges, graph
# ~~~~~~~~~~~~~~~~~~~~~~
class MorseIndex(enum.Enum):
    """Morse index of a vertex, or a regular marker."""
    ONE = '1'
    TWO = '2'
    REGULAR = 'regular'

    @property
    def critical(self) -> bool:
        """If the vertex is a true critical point."""
        return self is not MorseIndex.REGULAR

    @property
    def short(self) -> str:
        """Compact label used in the DOT export."""
        return 'reg' if self is MorseIndex.REGULAR else self.value


@dataclasses.dataclass(frozen=True)
class Vertex:
    """A critical point (or regular marker) at its angle on the circle."""
    id: str
    angle: Fraction
    index: MorseIndex


@dataclasses.dataclass(frozen=True)
class EdgeData:
    """A family of fiber components between two vertices.

    Only the genus and the number of boundary circles are stored; the
    Euler characteristic and the complexity are always derived.
    """
    id: str
    tail: str
    head: str
    genus: int
    boundary: int = 0

    @property
    def chi(self) -> int:
        return euler_characteristic(self.genus, self.boundary)

    @property
    def chi_minus(self) -> int:
        return chi_minus(self.genus, self.boundary)

    @property
    def sphere_or_disk(self) -> bool:
        """If the fiber component is a sphere or a disk."""
        return self.genus == 0 and self.boundary in (0, 1)


class MorseGraph:
    """The graph of a Morse map to the circle.

    The constructor enforces the structural invariants only: unique ids,
    existing endpoints, angles in ``[0, 1)`` and non negative fiber
    data. The local rules (degree signatures, genus and boundary rules,
    angle collisions) are reported by ``validate``.
    """

    def __init__(
            self,
            *,
            vertices: Iterable[Vertex],
            edges: Iterable[EdgeData],
            name: str = 'graph',
    ):
        """Initializes this object.

        :param vertices: The vertices of the graph.
        :param edges: The edges of the graph, tail to head in the
            positive direction of the circle.
        :param name: A name for the graph. Defaults to "graph".
        :raise InvalidGraph: If any structural invariant is broken.
        """
        self.__name = name
        self.__vertices: Dict[str, Vertex] = {}
        self.__edges: Dict[str, EdgeData] = {}
        self.__out: Dict[str, List[str]] = {}
        self.__in: Dict[str, List[str]] = {}

        for vertex in vertices:
            if vertex.id in self.__vertices:
                raise InvalidGraph(f'duplicated vertex "{vertex.id}"')
            if not ZERO <= vertex.angle < ONE:
                raise InvalidGraph(f'angle of "{vertex.id}" not in [0, 1)')
            self.__vertices[vertex.id] = vertex
            self.__out[vertex.id] = []
            self.__in[vertex.id] = []

        for edge in edges:
            if edge.id in self.__edges:
                raise InvalidGraph(f'duplicated edge "{edge.id}"')
            for endpoint in (edge.tail, edge.head):
                if endpoint not in self.__vertices:
                    raise InvalidGraph(
                        f'edge "{edge.id}" references "{endpoint}"'
                    )
            if edge.genus < 0 or edge.boundary < 0:
                raise InvalidGraph(f'negative fiber data on "{edge.id}"')
            self.__edges[edge.id] = edge
            self.__out[edge.tail].append(edge.id)
            self.__in[edge.head].append(edge.id)

    @property
    def name(self) -> str:
        return self.__name

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(self.__vertices.values())

    @property
    def edges(self) -> Tuple[EdgeData, ...]:
        return tuple(self.__edges.values())

    def vertex(self, ident: str) -> Vertex:
        """Returns the vertex with the given id.

        :raise UnknownElement: If there is no such vertex.
        """
        try:
            return self.__vertices[ident]
        except KeyError:
            raise UnknownElement(kind='vertex', ident=ident) from None

    def edge(self, ident: str) -> EdgeData:
        """Returns the edge with the given id.

        :raise UnknownElement: If there is no such edge.
        """
        try:
            return self.__edges[ident]
        except KeyError:
            raise UnknownElement(kind='edge', ident=ident) from None

    def has_edge(self, ident: str) -> bool:
        return ident in self.__edges

    def out_edges(self, ident: str) -> Tuple[EdgeData, ...]:
        self.vertex(ident)
        return tuple(self.__edges[e] for e in self.__out[ident])

    def in_edges(self, ident: str) -> Tuple[EdgeData, ...]:
        self.vertex(ident)
        return tuple(self.__edges[e] for e in self.__in[ident])

    def incident_edges(self, ident: str) -> Tuple[EdgeData, ...]:
        """In and out edges of the vertex, a loop appearing once."""
        seen = {}
        for edge in self.in_edges(ident) + self.out_edges(ident):
            seen.setdefault(edge.id, edge)
        return tuple(seen.values())

    def arc_length(self, edge: EdgeData) -> Fraction:
        """Length of the positive arc covered by the edge.

        A loop based on a single vertex covers the whole circle.
        """
        tail = self.vertex(edge.tail).angle
        head = self.vertex(edge.head).angle
        if edge.tail == edge.head:
            return ONE
        return (head - tail) % 1

    def angles(self) -> List[Fraction]:
        """The sorted critical values (marker angles included)."""
        return sorted(v.angle for v in self.__vertices.values())

    def to_networkx(self) -> nx.MultiDiGraph:
        """The graph as a networkx multigraph keyed by edge id."""
        graph = nx.MultiDiGraph()
        for vertex in self.__vertices.values():
            graph.add_node(vertex.id, angle=vertex.angle, index=vertex.index)
        for edge in self.__edges.values():
            graph.add_edge(
                edge.tail,
                edge.head,
                key=edge.id,
                genus=edge.genus,
                boundary=edge.boundary,
            )
        return graph

    def components(self) -> List[List[str]]:
        """The vertex ids of every connected component.

        :return: The components as lists of vertex ids, in the order of
            their first vertex in this graph.
        """
        order = {v: i for i, v in enumerate(self.__vertices)}
        components = [
            sorted(c, key=order.get)
            for c in nx.weakly_connected_components(self.to_networkx())
        ]
        return sorted(components, key=lambda c: order[c[0]])

    def __eq__(self, other):
        if not isinstance(other, MorseGraph):
            return NotImplemented
        return (self.name, self.vertices, self.edges) == \
               (other.name, other.vertices, other.edges)

    def __hash__(self):
        return hash((self.name, self.vertices, self.edges))

    def __repr__(self):
        return f'MorseGraph(name={self.name!r}, ' \
               f'vertices={len(self.__vertices)}, edges={len(self.__edges)})'


def disjoint_union(*graphs: MorseGraph, name: str = None) -> MorseGraph:
    """Places the graphs side by side in a single graph.

    The angles of every graph after the first one are rotated by a small
    amount so that no critical value is shared. Ids are kept unless two
    graphs share one, in which case every id is prefixed with the
    position of its graph (``"0."``, ``"1."``, ...).

    :param graphs: The graphs to join.
    :param name: The name of the union. Defaults to the names joined by
        a plus sign.
    :return: The new graph.
    """
    ids = [
        [v.id for v in g.vertices] + [e.id for e in g.edges] for g in graphs
    ]
    flat = [i for group in ids for i in group]
    clash = len(flat) != len(set(flat))

    vertices, edges, taken = [], [], []
    for position, graph in enumerate(graphs):
        prefix = f'{position}.' if clash else ''
        shift = _separating_shift(taken, [v.angle for v in graph.vertices])
        for vertex in graph.vertices:
            angle = normalize(vertex.angle + shift)
            taken.append(angle)
            vertices.append(dataclasses.replace(
                vertex, id=prefix + vertex.id, angle=angle
            ))
        for edge in graph.edges:
            edges.append(dataclasses.replace(
                edge,
                id=prefix + edge.id,
                tail=prefix + edge.tail,
                head=prefix + edge.head,
            ))
    name = name or '+'.join(g.name for g in graphs)
    return MorseGraph(vertices=vertices, edges=edges, name=name)


def _separating_shift(
        taken: Sequence[Fraction],
        angles: Sequence[Fraction],
) -> Fraction:
    """A rotation that keeps the new angles apart from the taken ones."""
    gaps = [(t - a) % 1 for t in taken for a in angles]
    if not any(g == 0 for g in gaps):
        return ZERO
    return min([g for g in gaps if g] + [ONE]) / 2


# ~~~~~~~
# Strands
# ~~~~~~~
class Strand(NamedTuple):
    """A maximal run of edges glued through regular markers.

    ``tail`` and ``head`` are the critical vertices at its ends, or None
    for the strands that are whole fibration components.
    """
    edges: Tuple[str, ...]
    tail: Optional[str]
    head: Optional[str]


def strands(graph: MorseGraph) -> List[Strand]:
    """Splits the edges of the graph into strands.

    :param graph: The graph.
    :return: One strand for each edge leaving a critical vertex, plus one
        for each cycle made only of regular markers.
    """
    result, seen = [], set()
    for edge in graph.edges:
        if not graph.vertex(edge.tail).index.critical:
            continue
        run, current = [edge.id], edge
        while not graph.vertex(current.head).index.critical:
            outs = graph.out_edges(current.head)
            if len(outs) != 1 or outs[0].id in run:
                break
            current = outs[0]
            run.append(current.id)
        head = current.head if graph.vertex(current.head).index.critical \
            else None
        seen.update(run)
        result.append(Strand(tuple(run), edge.tail, head))

    for edge in graph.edges:
        if edge.id in seen:
            continue
        run, current = [edge.id], edge
        seen.add(edge.id)
        while True:
            outs = [e for e in graph.out_edges(current.head)
                    if e.id not in seen]
            if not outs:
                break
            current = outs[0]
            seen.add(current.id)
            run.append(current.id)
        result.append(Strand(tuple(run), None, None))
    return result


def strand_map(graph: MorseGraph) -> Dict[str, Strand]:
    """Maps every edge id to the strand containing it."""
    return {e: strand for strand in strands(graph) for e in strand.edges}


# ~~~~~~~~~~
# Validation
# ~~~~~~~~~~
class Violation(NamedTuple):
    """A broken local rule."""
    rule: str
    where: str
    message: str


class ValidationReport(api.Report):
    """The list of local rules a graph breaks, plus warnings."""
    title = 'validation'

    def __init__(
            self,
            violations: Iterable[Violation] = (),
            warnings: Iterable[str] = (),
    ):
        self.violations = tuple(violations)
        self.warnings = tuple(warnings)

    @property
    def valid(self) -> bool:
        """A graph is valid iff it breaks no rule."""
        return not self.violations

    def fields(self):
        return [('valid', self.valid), ('violations', len(self.violations))]

    def as_dict(self):
        data = super().as_dict()
        data['violations'] = [v._asdict() for v in self.violations]
        data['warnings'] = list(self.warnings)
        return data

    def render(self) -> str:
        lines = ['OK' if self.valid else 'INVALID']
        lines.extend(
            f'violation {v.rule} at {v.where}: {v.message}'
            for v in self.violations
        )
        lines.extend(f'warning: {w}' for w in self.warnings)
        return '\n'.join(lines)


# (index, in degree, out degree) -> is trivalent
SIGNATURES = {
    (MorseIndex.ONE, 1, 1): False,
    (MorseIndex.ONE, 2, 1): True,
    (MorseIndex.TWO, 1, 1): False,
    (MorseIndex.TWO, 1, 2): True,
    (MorseIndex.REGULAR, 1, 1): False,
}


def validate(
        graph: MorseGraph,
        *,
        extra_checks: Sequence[Callable[[MorseGraph], Iterable[str]]] = (),
) -> ValidationReport:
    """Checks every local rule of the graph.

    :param graph: The graph to check.
    :param extra_checks: Callables producing warning messages for the
        graph. They are only run on valid graphs.
    :return: A report with every violation found. The graph is valid
        iff the report has no violations.
    """
    violations = []

    by_angle: Dict[Fraction, List[str]] = {}
    for vertex in graph.vertices:
        by_angle.setdefault(vertex.angle, []).append(vertex.id)
    for angle, ids in by_angle.items():
        if len(ids) > 1:
            violations.append(Violation(
                'angle-collision',
                ','.join(ids),
                f'vertices share the angle {format_angle(angle)}',
            ))

    for edge in graph.edges:
        if edge.tail != edge.head and graph.arc_length(edge) == 0:
            violations.append(Violation(
                'arc-length', edge.id, 'edge has zero arc length'
            ))

    for vertex in graph.vertices:
        violations.extend(_local_rules(graph, vertex))

    warnings = []
    if not violations:
        for check in extra_checks:
            warnings.extend(check(graph))
    logger.debug(
        'Validated %s: %d violations, %d warnings',
        graph.name, len(violations), len(warnings),
    )
    return ValidationReport(violations, warnings)


def _local_rules(graph: MorseGraph, vertex: Vertex) -> Iterator[Violation]:
    """Degree signature, genus and boundary rules at one vertex."""
    ins, outs = graph.in_edges(vertex.id), graph.out_edges(vertex.id)
    key = (vertex.index, len(ins), len(outs))
    if key not in SIGNATURES:
        yield Violation(
            'degree-signature',
            vertex.id,
            f'index {vertex.index.value} with {len(ins)} in and '
            f'{len(outs)} out edges',
        )
        return

    trivalent = SIGNATURES[key]
    if vertex.index is MorseIndex.TWO:
        # A split reads as a merge with the time reversed
        before, after = outs, ins
        step = +1
    else:
        before, after = ins, outs
        step = 0 if vertex.index is MorseIndex.REGULAR else +1

    joined_genus = sum(e.genus for e in before)
    joined_boundary = sum(e.boundary for e in before)
    (single,) = after
    expected = joined_genus if trivalent else joined_genus + step
    if single.genus != expected:
        yield Violation(
            'genus-rule',
            vertex.id,
            f'expected genus {expected} on "{single.id}", '
            f'found {single.genus}',
        )
    if single.boundary != joined_boundary:
        yield Violation(
            'boundary-rule',
            vertex.id,
            f'expected {joined_boundary} boundary circles on '
            f'"{single.id}", found {single.boundary}',
        )


# ~~~~~~
# Chains
# ~~~~~~
class Chain(Mapping[str, int]):
    """An integer chain with finite support on edges or vertices.

    Missing keys read as zero through ``coefficient``. Two chains are
    equal when their non zero coefficients are.
    """

    def __init__(self, values: Mapping[str, int] = None):
        self.__values = dict(values or {})

    def __getitem__(self, key: str) -> int:
        return self.__values[key]

    def __iter__(self):
        return iter(self.__values)

    def __len__(self):
        return len(self.__values)

    def coefficient(self, key: str) -> int:
        return self.__values.get(key, 0)

    def support(self) -> Dict[str, int]:
        """The non zero coefficients."""
        return {k: v for k, v in self.__values.items() if v}

    def l1(self) -> int:
        """Sum of absolute values of the coefficients."""
        return sum(abs(v) for v in self.__values.values())

    def __add__(self, other: Mapping[str, int]) -> Chain:
        values = dict(self.__values)
        for key, value in other.items():
            values[key] = values.get(key, 0) + value
        return Chain(values)

    def __neg__(self) -> Chain:
        return Chain({k: -v for k, v in self.__values.items()})

    def __sub__(self, other: Mapping[str, int]) -> Chain:
        return self + (-Chain(other))

    def __mul__(self, scalar: int) -> Chain:
        return Chain({k: scalar * v for k, v in self.__values.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Mapping):
            return NotImplemented
        return self.support() == {k: v for k, v in other.items() if v}

    def __hash__(self):
        return hash(frozenset(self.support().items()))

    def __repr__(self):
        return f'Chain({self.__values!r})'


class ChainNorms(NamedTuple):
    boundary: Chain
    norm: int
    boundary_norm: int


def tau_chains(graph: MorseGraph) -> Tuple[Chain, Chain]:
    """The genus chain and the complexity chain of the graph.

    :return: A tuple with the chain assigning its genus to each edge and
        the one assigning its complexity.
    """
    tau_g = Chain({e.id: e.genus for e in graph.edges})
    tau_chi = Chain({e.id: e.chi_minus for e in graph.edges})
    return tau_g, tau_chi


def boundary(chain: Mapping[str, int], graph: MorseGraph) -> Chain:
    """Boundary of an edge chain: outgoing minus incoming values."""
    values = {v.id: 0 for v in graph.vertices}
    for key, value in chain.items():
        edge = graph.edge(key)
        values[edge.tail] += value
        values[edge.head] -= value
    return Chain(values)


def boundary_and_norms(
        chain: Mapping[str, int],
        graph: MorseGraph,
) -> ChainNorms:
    """Boundary of the chain and the l1 norms of both.

    :param chain: An edge chain of the graph.
    :param graph: The graph.
    :return: The boundary, the norm of the chain and the norm of the
        boundary.
    """
    bound = boundary(chain, graph)
    return ChainNorms(bound, Chain(chain).l1(), bound.l1())


def genus_variation(graph: MorseGraph) -> Tuple[Fraction, int, int]:
    """Half the norm of the genus boundary and the bivalent counts.

    :return: A tuple with half the l1 norm of the boundary of the genus
        chain, the number of bivalent index 1 vertices and the number of
        bivalent index 2 vertices.
    """
    tau_g, _ = tau_chains(graph)
    half = Fraction(boundary(tau_g, graph).l1(), 2)
    counts = {MorseIndex.ONE: 0, MorseIndex.TWO: 0}
    for vertex in graph.vertices:
        bivalent = len(graph.in_edges(vertex.id)) == 1 \
            and len(graph.out_edges(vertex.id)) == 1
        if vertex.index.critical and bivalent:
            counts[vertex.index] += 1
    return half, counts[MorseIndex.ONE], counts[MorseIndex.TWO]


# ~~~~~~~~~~~~~~~~~~~~~~~
# Fibers and variations
# ~~~~~~~~~~~~~~~~~~~~~~~
@dataclasses.dataclass(frozen=True)
class FiberSlice:
    """The fiber over a regular value."""
    theta: Fraction
    edges: Tuple[str, ...]
    genus: int
    chi_minus: int
    components: int


def crossing_edges(graph: MorseGraph, theta: Fraction) -> List[EdgeData]:
    """Edges whose open arc contains the angle."""
    return [
        e for e in graph.edges
        if in_open_arc(theta, graph.vertex(e.tail).angle, graph.arc_length(e))
    ]


def fiber_at(graph: MorseGraph, theta) -> FiberSlice:
    """The fiber of the map over a regular value.

    :param graph: The graph.
    :param theta: The angle of the fiber (normalized to ``[0, 1)``).
    :return: The crossing edges and their aggregated data.
    :raise ThetaOnCriticalValue: If the angle is a vertex angle.
    """
    theta = normalize(Fraction(theta))
    if any(v.angle == theta for v in graph.vertices):
        raise ThetaOnCriticalValue(format_angle(theta))
    crossing = crossing_edges(graph, theta)
    return FiberSlice(
        theta=theta,
        edges=tuple(e.id for e in crossing),
        genus=sum(e.genus for e in crossing),
        chi_minus=sum(e.chi_minus for e in crossing),
        components=len(crossing),
    )


def fiber_class(graph: MorseGraph, theta) -> Chain:
    """The vertical class of the fiber over a regular value."""
    return Chain({e: 1 for e in fiber_at(graph, theta).edges})


def is_bubbling(graph: MorseGraph, ident: str) -> bool:
    """A critical point is bubbling when a sphere or disk is nearby."""
    vertex = graph.vertex(ident)
    return vertex.index.critical and any(
        e.sphere_or_disk for e in graph.incident_edges(ident)
    )


class Variations(NamedTuple):
    var: Fraction
    osc: int
    nonbubbling: int


def variations(graph: MorseGraph) -> Variations:
    """Variation and oscillation of the fiber complexity.

    The fiber complexity is sampled once between every pair of
    consecutive critical values. The variation is half the cyclic sum of
    the jumps between samples, the oscillation the spread of the
    samples.

    :param graph: A valid graph.
    :return: The variation, the oscillation and the number of critical
        points which are not bubbling.
    """
    samples = [
        fiber_at(graph, t).chi_minus
        for t in circular_midpoints(v.angle for v in graph.vertices)
    ]
    jumps = sum(
        abs(samples[(i + 1) % len(samples)] - samples[i])
        for i in range(len(samples))
    )
    nonbubbling = sum(
        1 for v in graph.vertices
        if v.index.critical and not is_bubbling(graph, v.id)
    )
    return Variations(
        var=Fraction(jumps, 2),
        osc=max(samples) - min(samples),
        nonbubbling=nonbubbling,
    )
