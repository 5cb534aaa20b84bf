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
"""Vertical homology classes, their norm and the complexity bounds.

A vertical class is an integer combination of fiber components, given as
weights on the edges of the fiber graph. Two combinations are homologous
when they have the same intersection numbers with a basis of loops of the
graph, so every question about vertical classes ends up being a question
about an affine integer lattice of attractor combinations.
"""
from __future__ import annotations

import dataclasses
import logging
import warnings
from fractions import Fraction
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from . import api
from .exception import BoxTooSmall, HypothesisWarning, Infeasible, \
    TreePropertyViolation, ZeroVariation
from .fiber_graph import Chain, MorseGraph, MorseIndex, Strand, \
    crossing_edges, fiber_class, strand_map
from .harmonicity import MarkedPoint, marked_points
from .lattice import METHODS, LatticeProblem, LatticeSolution
from .util import circular_midpoints

logger = logging.getLogger(__name__)

DEFAULT_BOX = 16
DEFAULT_BOX_CAP = 1024

Cycle = Tuple[Tuple[str, int], ...]


@dataclasses.dataclass(frozen=True)
class NormSearch:
    """How the lattice minimizations of this module are carried out.

    The box starts at ``box`` and is doubled until the minimum is
    certified or the ``box_cap`` is reached.
    """
    box: int = DEFAULT_BOX
    box_cap: int = DEFAULT_BOX_CAP
    method: str = 'branch-and-bound'

    def __post_init__(self):
        if self.box < 1 or self.box_cap < self.box:
            raise ValueError('Box radii must satisfy 1 <= box <= box_cap')
        if self.method not in METHODS:
            raise ValueError(f'Unknown minimization method {self.method!r}')


# ~~~~~~~~~~~~~~~~~~~~~~~~~~
# Loops and intersections
# ~~~~~~~~~~~~~~~~~~~~~~~~~~
def cycle_basis(graph: MorseGraph) -> List[Cycle]:
    """Fundamental cycles of a spanning forest of the graph.

    Edges join the forest in graph order. Each edge left out closes one
    cycle: the edge itself, traversed positively, followed by the path
    back through the forest.

    :param graph: The graph.
    :return: The cycles, as ``(edge id, +1 or -1)`` steps. There are as
        many as edges minus vertices plus connected components.
    """
    components = nx.utils.UnionFind(v.id for v in graph.vertices)
    forest = nx.Graph()
    forest.add_nodes_from(v.id for v in graph.vertices)
    closing = []
    for edge in graph.edges:
        if components[edge.tail] == components[edge.head]:
            closing.append(edge)
        else:
            components.union(edge.tail, edge.head)
            forest.add_edge(edge.tail, edge.head, id=edge.id)

    basis = []
    for edge in closing:
        path = nx.shortest_path(forest, edge.head, edge.tail)
        steps = [(edge.id, 1)]
        for u, w in zip(path, path[1:]):
            tree_edge = graph.edge(forest.edges[u, w]['id'])
            steps.append((tree_edge.id, 1 if tree_edge.tail == u else -1))
        basis.append(tuple(steps))
    logger.debug('Cycle basis of %s has %d cycles', graph.name, len(basis))
    return basis


def intersection_vector(
        chain: Mapping[str, int],
        basis: Sequence[Cycle],
) -> Tuple[int, ...]:
    """Intersection numbers of a vertical class with the basis loops.

    :param chain: The class, as weights on edges.
    :param basis: The loops.
    :return: One signed count per loop.
    """
    return tuple(
        sum(chain.get(edge, 0) * sign for edge, sign in cycle)
        for cycle in basis
    )


def attractor_matrix(
        graph: MorseGraph,
        basis: Sequence[Cycle],
        attractors: Sequence[MarkedPoint],
) -> List[List[int]]:
    """Signed traversal counts of the attractor edges by each loop."""
    return [
        [sum(s for e, s in cycle if e == a.edge) for a in attractors]
        for cycle in basis
    ]


def chi_minus_of(graph: MorseGraph, edges: Sequence[str]) -> int:
    """Complexity of the union of the fiber components of some edges."""
    return sum(graph.edge(e).chi_minus for e in edges)


def repeller_class(graph: MorseGraph) -> Chain:
    """The class of the union of the repeller fiber components."""
    return Chain({r.edge: 1 for r in marked_points(graph).repellers})


def attractor_class(graph: MorseGraph) -> Chain:
    """The class of the union of the attractor fiber components."""
    return Chain({a.edge: 1 for a in marked_points(graph).attractors})


# ~~~~~~~~~~~~~~~~~~~~~~~~
# Reduction to attractors
# ~~~~~~~~~~~~~~~~~~~~~~~~
def reduce_to_attractors(graph: MorseGraph, chain: Mapping[str, int]) -> Chain:
    """Moves a vertical class onto the attractor components.

    Each fiber component is homologous to the union of the ones it splits
    into (forwards, through index 2 vertices) and of the ones merging into
    it (backwards, through index 1 vertices). Components between an index
    1 and an index 2 vertex, or between two index 2 vertices, are pushed
    forward and the ones between two index 1 vertices backwards, until
    they reach attractors.

    :param graph: A graph satisfying the tree hypotheses.
    :param chain: The class to reduce.
    :return: A class supported on attractor edges, with the same
        intersection numbers as the given one.
    :raise TreePropertyViolation: If some weight cannot reach an
        attractor.
    """
    by_edge = strand_map(graph)
    first = {s.edges[0]: s for s in by_edge.values()}
    ending = {}
    for strand in first.values():
        if strand.head is not None:
            ending.setdefault(strand.head, []).append(strand)
    memo: Dict[Tuple[str, ...], Chain] = {}

    def index(vertex):
        return graph.vertex(vertex).index

    def reduce(strand: Strand, stack) -> Chain:
        if strand.edges in memo:
            return memo[strand.edges]
        if strand.tail is None:
            raise TreePropertyViolation(
                f'edge "{strand.edges[0]}" lies on a fibration component'
            )
        if strand.edges in stack:
            raise TreePropertyViolation(
                f'reduction of "{strand.edges[0]}" loops back to itself'
            )
        ends = index(strand.tail), index(strand.head)
        stack = stack | {strand.edges}
        result = Chain()
        if ends == (MorseIndex.TWO, MorseIndex.ONE):
            result = Chain({strand.edges[0]: 1})
        elif ends[1] is MorseIndex.TWO:
            for edge in sorted(e.id for e in graph.out_edges(strand.head)):
                result = result + reduce(by_edge[edge], stack)
        else:
            for other in ending.get(strand.tail, []):
                result = result + reduce(other, stack)
        memo[strand.edges] = result
        return result

    reduced = Chain()
    for edge, weight in chain.items():
        if weight:
            reduced = reduced + reduce(by_edge[graph.edge(edge).id],
                                       frozenset()) * weight
    return Chain(reduced.support())


def attractor_problem(
        graph: MorseGraph,
        chain: Mapping[str, int],
        basis: Sequence[Cycle] = None,
) -> LatticeProblem:
    """The lattice of attractor combinations homologous to the class.

    :param graph: The graph.
    :param chain: The class.
    :param basis: The loops to use. Defaults to ``cycle_basis(graph)``.
    :return: A problem whose columns are the attractors, weighted by the
        complexity of their components.
    """
    if basis is None:
        basis = cycle_basis(graph)
    attractors = marked_points(graph).attractors
    return LatticeProblem(
        matrix=attractor_matrix(graph, basis, attractors),
        target=intersection_vector(chain, basis),
        weights=[graph.edge(a.edge).chi_minus for a in attractors],
        labels=[a.label for a in attractors],
    )


# ~~~~~~~~~~~~~
# Vertical norm
# ~~~~~~~~~~~~~
class NormSolution(api.Report):
    """A minimal attractor combination representing a class."""
    title = 'norm'

    def __init__(
            self,
            *,
            value: int,
            kappa: Mapping[str, int],
            box: int,
            certified: bool,
            nodes: int = 0,
    ):
        self.value = value
        self.kappa = Chain(kappa)
        self.box = box
        self.certified = certified
        self.nodes = nodes

    def fields(self):
        return [
            ('value', self.value),
            ('box', self.box),
            ('certified', self.certified),
        ]

    def details(self):
        return [f'a_{edge}={v}' for edge, v in self.kappa.support().items()]

    def as_dict(self):
        data = super().as_dict()
        data['kappa'] = {f'a_{e}': v for e, v in self.kappa.support().items()}
        return data


def minimize_class(
        graph: MorseGraph,
        chain: Mapping[str, int],
        *,
        search: NormSearch = None,
) -> NormSolution:
    """Finds the attractor combination of least complexity in the class.

    The search box is doubled until no point outside of it can beat the
    minimum found, that is, until the minimum is below the lightest
    positive weight times the box radius plus one.

    :param graph: The graph.
    :param chain: The class.
    :param search: The box and method to use. Defaults to the module
        defaults.
    :return: The minimum, its attractor combination and whether it was
        certified before reaching the box cap.
    :raise Infeasible: If no attractor combination represents the class.
    """
    search = search or NormSearch()
    problem = attractor_problem(graph, chain)
    attractors = marked_points(graph).attractors
    try:
        reduced = reduce_to_attractors(graph, chain)
        incumbent = [reduced.get(a.edge, 0) for a in attractors]
    except TreePropertyViolation as e:
        logger.debug('No reduction available for %s: %s', graph.name, e)
        incumbent = None

    positive = [w for w in problem.weights if w]
    box = search.box
    while True:
        solver = METHODS[search.method](box=box)
        try:
            solution: LatticeSolution = solver(problem, incumbent=incumbent)
        except Infeasible as e:
            if e.box is None or box >= search.box_cap:
                raise
            box = min(2 * box, search.box_cap)
            logger.debug('Nothing in the box, growing it to %d', box)
            continue
        certified = not positive or \
            solution.value < min(positive) * (box + 1)
        if certified or box >= search.box_cap:
            break
        box = min(2 * box, search.box_cap)
        logger.debug('Minimum %d not certified, growing box to %d',
                     solution.value, box)

    if not certified:
        logger.warning('Minimum %d not certified within box %d',
                       solution.value, box)
        warnings.warn(BoxTooSmall(box=box, value=solution.value))
    kappa = {a.edge: v for a, v in zip(attractors, solution.x) if v}
    return NormSolution(
        value=solution.value,
        kappa=kappa,
        box=box,
        certified=certified,
        nodes=solution.nodes,
    )


def vertical_norm(
        graph: MorseGraph,
        chain: Mapping[str, int],
        *,
        search: NormSearch = None,
) -> int:
    """The least complexity of a union of fiber components in the class.

    :param graph: The graph.
    :param chain: The class, as weights on edges.
    :param search: The box and method to use.
    :return: The vertical norm of the class.
    :raise Infeasible: If no attractor combination represents the class.
    """
    return minimize_class(graph, chain, search=search).value


def var_capital(graph: MorseGraph, *, search: NormSearch = None) -> int:
    """Complexity of the repellers minus the norm of the attractors.

    It is never below the plain variation of the fiber complexity.
    """
    repellers = marked_points(graph).repellers
    norm = vertical_norm(graph, attractor_class(graph), search=search)
    return chi_minus_of(graph, [r.edge for r in repellers]) - norm


def is_balanced(graph: MorseGraph, chain: Mapping[str, int]) -> bool:
    """Tells if the class is a positive multiple of the repeller class.

    :param graph: The graph.
    :param chain: The class.
    :return: True iff both intersection vectors are proportional with a
        positive rational factor, or both are zero.
    """
    return is_multiple_of(graph, chain, repeller_class(graph))


def is_multiple_of(
        graph: MorseGraph,
        chain: Mapping[str, int],
        base: Mapping[str, int],
) -> bool:
    """Tells if a class is a positive rational multiple of another.

    Both zero counts as a multiple.
    """
    basis = cycle_basis(graph)
    v = intersection_vector(chain, basis)
    r = intersection_vector(base, basis)
    if not any(r):
        return not any(v)
    i = next(i for i, x in enumerate(r) if x)
    ratio = Fraction(v[i], r[i])
    return ratio > 0 and all(a * r[i] == b * v[i] for a, b in zip(v, r))


def regular_fiber_class(graph: MorseGraph) -> Chain:
    """The class of the fiber over the first gap between critical values."""
    theta = circular_midpoints(v.angle for v in graph.vertices)[0]
    return fiber_class(graph, theta)


def best_fiber_norm(graph: MorseGraph, *, search: NormSearch = None) -> int:
    """The vertical norm of the class of a regular fiber."""
    return vertical_norm(graph, regular_fiber_class(graph), search=search)


# ~~~~~~
# Bounds
# ~~~~~~
def _warn(message: str):
    logger.warning(message)
    warnings.warn(HypothesisWarning(message))


def thurston_lower_bound(
        graph: MorseGraph,
        chain: Mapping[str, int],
        rho: int,
        mu: int,
        *,
        search: NormSearch = None,
) -> int:
    """Lower bound for the complexity of a surface in the class.

    For balanced classes the bound is the vertical norm minus the twist
    times the capital variation minus the disk count. Other classes fall
    back to the uniform twist form: the norm of the class shifted by the
    twist times the repellers, minus the twist times their complexity.

    :param graph: The graph.
    :param chain: The class of the surface.
    :param rho: The reduced twist of the surface against the repellers.
    :param mu: The number of new spheres and disks of its resolution.
    :param search: The box and method to use.
    :return: The bound, never below zero.
    """
    if is_balanced(graph, chain):
        norm = vertical_norm(graph, chain, search=search)
        value = norm - rho * var_capital(graph, search=search) - mu
    else:
        _warn('Class is not balanced, using the uniform twist bound')
        value = _uniform_twist_bound(graph, chain, rho, mu, search)
    return max(value, 0)


def _uniform_twist_bound(graph, chain, rho, mu, search) -> int:
    repellers = repeller_class(graph)
    shifted = Chain(chain) + repellers * rho
    norm = vertical_norm(graph, shifted, search=search)
    return norm - rho * chi_minus_of(graph, list(repellers)) - mu


def _per_repeller_bound(graph, chain, twists, mu, search) -> int:
    shifted = Chain(chain)
    for edge, rho in twists.items():
        shifted = shifted + Chain({edge: rho})
    norm = vertical_norm(graph, shifted, search=search)
    cost = sum(rho * graph.edge(e).chi_minus for e, rho in twists.items())
    return norm - cost - mu


def rho_lower_bound(
        graph: MorseGraph,
        chain: Mapping[str, int],
        thurston_value: int,
        *,
        search: NormSearch = None,
) -> Fraction:
    """Least twist compatible with a known Thurston norm of the class.

    It also bounds from below the breadth and the height when the class
    is the one of a fiber.

    :raise ZeroVariation: If the capital variation vanishes.
    """
    variation = var_capital(graph, search=search)
    if not variation:
        raise ZeroVariation()
    norm = vertical_norm(graph, chain, search=search)
    return Fraction(norm - thurston_value, variation)


def height_bounds(l: int, k: int, q: int, clockwise: bool = False) -> int:
    """Upper bound for the height after twisting a map q times.

    :param l: The height before the twisting. At least 1.
    :param k: The multiple of the fiber class. At least 1.
    :param q: The number of twists. Not negative.
    :param clockwise: If the twisting moves run clockwise, which halves
        the contribution of each twist.
    :return: ``l + 2kq``, or ``l + kq`` when clockwise.
    """
    if l < 1 or k < 1 or q < 0:
        raise ValueError('Expected l >= 1, k >= 1 and q >= 0')
    return l + (k if clockwise else 2 * k) * q


def twist_height_bounds(rho: int) -> Tuple[int, int]:
    """The heights compatible with a twist (depending on the fiber)."""
    return rho, rho + 1


def breadth(rho: int) -> int:
    """Breadth of the repellers for a fiber class multiple."""
    return rho


def repellers_are_fibers(graph: MorseGraph) -> bool:
    """Tells if every repeller component is a whole fiber."""
    samples = circular_midpoints(v.angle for v in graph.vertices)
    fibers = {
        tuple(e.id for e in crossing_edges(graph, t)) for t in samples
    }
    by_edge = strand_map(graph)
    for repeller in marked_points(graph).repellers:
        strand = by_edge[repeller.edge]
        if not any(fiber in ((e,) for e in strand.edges) for fiber in fibers):
            return False
    return True


class TwistData(NamedTuple):
    """What is known of a surface relative to the repellers.

    ``twists`` maps repeller edges to their own reduced twist. ``rho_chi``
    is the least twist among the norm delivering surfaces, ``breadth``
    and ``height`` (plus their norm delivering minima) the corresponding
    invariants when the class is a fiber multiple.
    """
    rho: int = 0
    mu: int = 0
    twists: Optional[Mapping[str, int]] = None
    rho_chi: Optional[int] = None
    breadth: Optional[int] = None
    height: Optional[int] = None
    breadth_chi: Optional[int] = None
    height_chi: Optional[int] = None
    thurston_value: Optional[int] = None


class Bound(NamedTuple):
    name: str
    value: Optional[object]
    hypotheses: bool
    note: str = ''


class BoundReport(api.Report):
    """Every lower bound the available data allows."""
    title = 'bounds'

    def __init__(self, *, norm, variation, balanced, bounds):
        self.norm = norm
        self.variation = variation
        self.balanced = balanced
        self.bounds = list(bounds)

    def bound(self, name: str) -> Bound:
        return next(b for b in self.bounds if b.name == name)

    def fields(self):
        return [
            ('norm', self.norm),
            ('var', self.variation),
            ('balanced', self.balanced),
        ]

    def details(self):
        lines = []
        for b in self.bounds:
            line = f'{b.name}={api.text(b.value)}'
            if not b.hypotheses:
                line += ' (hypotheses not met)'
            if b.note:
                line += f' [{b.note}]'
            lines.append(line)
        return lines

    def as_dict(self):
        data = super().as_dict()
        data['bounds'] = {
            b.name: {
                'value': api.plain(b.value),
                'hypotheses': b.hypotheses,
                'note': b.note,
            }
            for b in self.bounds
        }
        return data


def bound_suite(
        graph: MorseGraph,
        chain: Mapping[str, int],
        data: TwistData = TwistData(),
        *,
        search: NormSearch = None,
) -> BoundReport:
    """Evaluates the whole progression of complexity lower bounds.

    Bounds whose data is missing are reported with no value. Bounds whose
    hypotheses do not hold are still evaluated, flagged and warned about.

    :param graph: The graph.
    :param chain: The class of the surface.
    :param data: The twist data of the surface.
    :param search: The box and method to use.
    :return: The report.
    """
    norm = vertical_norm(graph, chain, search=search)
    variation = var_capital(graph, search=search)
    balanced = is_balanced(graph, chain)
    repellers = [r.edge for r in marked_points(graph).repellers]
    bounds = []

    def floor(value):
        return max(value, 0)

    twists = data.twists
    if twists is None:
        twists = {edge: data.rho for edge in repellers}
    unknown = sorted(set(twists) - set(repellers))
    if unknown:
        raise ValueError(f'Not repeller edges: {", ".join(unknown)}')
    bounds.append(Bound(
        'per-repeller',
        floor(_per_repeller_bound(graph, chain, twists, data.mu, search)),
        True,
    ))
    bounds.append(Bound(
        'uniform-twist',
        floor(_uniform_twist_bound(graph, chain, data.rho, data.mu, search)),
        True,
    ))

    if not balanced:
        _warn('Class is not balanced, balanced bounds are only indicative')
    bounds.append(Bound(
        'balanced',
        floor(norm - data.rho * variation - data.mu),
        balanced,
    ))
    if data.rho_chi is not None:
        bounds.append(Bound(
            'balanced-norm',
            floor(norm - data.rho_chi * variation - data.mu),
            balanced,
        ))

    if data.thurston_value is not None:
        if variation:
            ratio = Fraction(norm - data.thurston_value, variation)
            bounds.append(Bound('twist-lower', ratio, balanced))
        else:
            bounds.append(Bound('twist-lower', None, balanced,
                                'variation is zero'))

    for name, value in (
            ('breadth', data.breadth),
            ('height', data.height),
            ('breadth-norm', data.breadth_chi),
            ('height-norm', data.height_chi),
    ):
        if value is not None:
            bounds.append(Bound(
                name, floor(norm - value * variation), balanced
            ))

    fibers = repellers_are_fibers(graph)
    if not fibers:
        _warn('Some repeller component is not a whole fiber')
    best = best_fiber_norm(graph, search=search)
    fiber_multiple = is_multiple_of(graph, chain, regular_fiber_class(graph))
    if fibers and not fiber_multiple:
        _warn('Class is not a multiple of the fiber class')
    excess = sum(graph.edge(r).chi_minus - best for r in repellers)
    bounds.append(Bound(
        'fibers-best',
        floor(norm - data.rho * excess),
        fibers and fiber_multiple,
    ))
    if data.rho_chi is not None:
        bounds.append(Bound(
            'fibers-norm',
            floor(norm - data.rho_chi * excess),
            fibers and fiber_multiple,
        ))

    logger.debug('Evaluated %d bounds for %s', len(bounds), graph.name)
    return BoundReport(
        norm=norm, variation=variation, balanced=balanced, bounds=bounds
    )
