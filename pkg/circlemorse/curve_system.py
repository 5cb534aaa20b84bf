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
"""Intersection patterns of a surface with fiber components.

A ``CurveSystem`` records the curves in which a surface cuts a union of
fiber components, not as geometry but as the dual graph of the pattern:
one region per piece of the fiber left after cutting, one curve joining
the regions at both of its sides. Crossing a curve along its normal
raises a potential by one, and the number of levels of the potential
measures how twisted the surface is with respect to the fiber.
"""
from __future__ import annotations

import collections
import dataclasses
import enum
import logging
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx

from . import api
from .exception import (
    CocycleViolation,
    InvalidCase,
    InvalidCurveSystem,
    NothingToResolve,
    UnknownElement,
)

logger = logging.getLogger(__name__)


# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
# Regions, curves and their system
# ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
class CurveKind(enum.Enum):
    LOOP = 'loop'
    ARC = 'arc'


@dataclasses.dataclass(frozen=True)
class Region:
    """A piece of the fiber left after cutting along the curves.

    ``boundary_arcs`` counts the boundary components of the piece which
    run (at least partly) along the boundary of the fiber.
    """
    id: str
    euler: int
    fcomp: str
    boundary_arcs: int = 0


@dataclasses.dataclass(frozen=True)
class Curve:
    """An oriented curve of the pattern, from one region to another.

    Crossing the curve from ``source`` to ``target`` follows the normal
    of the surface.
    """
    id: str
    source: str
    target: str
    kind: CurveKind = CurveKind.LOOP
    disk_in_f: bool = False
    disk_in_sigma: bool = False


class CurveSystem:
    """The dual graph of an intersection pattern."""

    def __init__(
            self,
            *,
            regions: Iterable[Region],
            curves: Iterable[Curve],
            name: str = 'curves',
    ):
        """Initializes this object.

        :param regions: The regions of the pattern.
        :param curves: The curves of the pattern.
        :param name: A name for the system. Defaults to "curves".
        :raise InvalidCurveSystem: If ids are repeated, a curve references
            a missing region, joins two fiber components or is an arc
            touching a region with no boundary.
        """
        self.__name = name
        self.__regions: Dict[str, Region] = {}
        self.__curves: Dict[str, Curve] = {}
        for region in regions:
            if region.id in self.__regions:
                raise InvalidCurveSystem(f'duplicated region "{region.id}"')
            if region.boundary_arcs < 0:
                raise InvalidCurveSystem(
                    f'negative boundary count on "{region.id}"'
                )
            self.__regions[region.id] = region
        for curve in curves:
            if curve.id in self.__curves:
                raise InvalidCurveSystem(f'duplicated curve "{curve.id}"')
            sides = []
            for side in (curve.source, curve.target):
                if side not in self.__regions:
                    raise InvalidCurveSystem(
                        f'curve "{curve.id}" references "{side}"'
                    )
                sides.append(self.__regions[side])
            if sides[0].fcomp != sides[1].fcomp:
                raise InvalidCurveSystem(
                    f'curve "{curve.id}" joins two fiber components'
                )
            if curve.kind is CurveKind.ARC and \
                    not all(s.boundary_arcs for s in sides):
                raise InvalidCurveSystem(
                    f'arc "{curve.id}" touches a region without boundary'
                )
            self.__curves[curve.id] = curve

    @property
    def name(self) -> str:
        return self.__name

    @property
    def regions(self) -> Tuple[Region, ...]:
        return tuple(self.__regions.values())

    @property
    def curves(self) -> Tuple[Curve, ...]:
        return tuple(self.__curves.values())

    def region(self, ident: str) -> Region:
        try:
            return self.__regions[ident]
        except KeyError:
            raise UnknownElement(kind='region', ident=ident) from None

    def curve(self, ident: str) -> Curve:
        try:
            return self.__curves[ident]
        except KeyError:
            raise UnknownElement(kind='curve', ident=ident) from None

    def fcomps(self) -> List[str]:
        """The fiber components, in order of first appearance."""
        return list(dict.fromkeys(r.fcomp for r in self.__regions.values()))

    def incident(self, region: str) -> List[Curve]:
        """Curves having the region at one of their sides."""
        return [
            c for c in self.__curves.values()
            if region in (c.source, c.target)
        ]

    def to_networkx(self) -> nx.MultiGraph:
        """The dual graph as an undirected networkx multigraph."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.__regions)
        for curve in self.__curves.values():
            graph.add_edge(curve.source, curve.target, key=curve.id)
        return graph

    def __eq__(self, other):
        if not isinstance(other, CurveSystem):
            return NotImplemented
        return (self.name, self.regions, self.curves) == \
               (other.name, other.regions, other.curves)

    def __hash__(self):
        return hash((self.name, self.regions, self.curves))

    def __repr__(self):
        return f'CurveSystem(name={self.name!r}, ' \
               f'regions={len(self.__regions)}, curves={len(self.__curves)})'


def fiber_euler(system: CurveSystem) -> Dict[str, int]:
    """Euler characteristic of every fiber component.

    Gluing the regions back along the curves subtracts one for every arc
    and nothing for loops.
    """
    result = {fcomp: 0 for fcomp in system.fcomps()}
    for region in system.regions:
        result[region.fcomp] += region.euler
    for curve in system.curves:
        if curve.kind is CurveKind.ARC:
            result[system.region(curve.source).fcomp] -= 1
    return result


# ~~~~~~~~~~~~~~~~~~~
# Potential and twist
# ~~~~~~~~~~~~~~~~~~~
def potential(system: CurveSystem) -> Dict[str, int]:
    """The level of every region.

    Levels grow by one across every curve, following its normal. Each
    connected piece of the dual graph is then shifted so that all of
    them share the same maximum level, the lowest level overall being 0.

    :param system: The curve system.
    :return: The level of each region.
    :raise CocycleViolation: If some cycle of curves does not add up to
        zero, that is, if the pattern cannot come from a vertical class.
    """
    graph = system.to_networkx()
    levels: Dict[str, int] = {}
    pieces = []
    for region in system.regions:
        if region.id in levels:
            continue
        piece = [region.id]
        levels[region.id] = 0
        queue = collections.deque([region.id])
        while queue:
            current = queue.popleft()
            for _, neighbour, key in sorted(graph.edges(current, keys=True),
                                            key=lambda e: e[2]):
                curve = system.curve(key)
                step = 1 if curve.source == current else -1
                if neighbour not in levels:
                    levels[neighbour] = levels[current] + step
                    piece.append(neighbour)
                    queue.append(neighbour)
        pieces.append(piece)

    for curve in system.curves:
        if levels[curve.target] - levels[curve.source] != 1:
            raise CocycleViolation(curve.id)

    spans = [
        max(levels[r] for r in piece) - min(levels[r] for r in piece)
        for piece in pieces
    ]
    top = max(spans, default=0)
    for piece in pieces:
        shift = top - max(levels[r] for r in piece)
        for region in piece:
            levels[region] += shift
    return levels


class Twist(NamedTuple):
    rho: int
    rho_reduced: int


def _rho(system: CurveSystem) -> int:
    levels = potential(system)
    by_fcomp: Dict[str, set] = {}
    for region in system.regions:
        by_fcomp.setdefault(region.fcomp, set()).add(levels[region.id])
    return max((len(v) - 1 for v in by_fcomp.values()), default=0)


def twist(system: CurveSystem) -> Twist:
    """The twist of the pattern, with and without its disk curves.

    :return: One less than the number of levels (the maximum over the
        fiber components) before and after discarding the curves which
        bound a disk in the fiber.
    :raise CocycleViolation: If there is no potential.
    """
    return Twist(_rho(system), _rho(discard_disk_curves(system)))


# ~~~~~~~~~~~~
# Contractions
# ~~~~~~~~~~~~
def contract(
        system: CurveSystem,
        curves: Iterable[str],
        *,
        name: str = None,
) -> CurveSystem:
    """Erases some curves, merging the regions at their sides.

    Merged regions keep the id of their first region. Their Euler
    characteristic is the sum of the merged ones minus one for every arc
    erased, so the Euler characteristic of the fiber is preserved.

    :param system: The curve system.
    :param curves: The ids of the curves to erase.
    :param name: The name of the result. Defaults to the same name.
    :return: The new system.
    """
    erased = [system.curve(c) for c in dict.fromkeys(curves)]
    groups = nx.utils.UnionFind(r.id for r in system.regions)
    for curve in erased:
        groups.union(curve.source, curve.target)
    order = {r.id: i for i, r in enumerate(system.regions)}
    members: Dict[str, List[str]] = {}
    for region in system.regions:
        members.setdefault(groups[region.id], []).append(region.id)
    head = {
        r: min(group, key=order.get)
        for group in members.values() for r in group
    }
    arcs: Dict[str, int] = collections.Counter(
        head[c.source] for c in erased if c.kind is CurveKind.ARC
    )

    regions = []
    for group in sorted(members.values(), key=lambda g: order[head[g[0]]]):
        parts = [system.region(r) for r in group]
        first = head[group[0]]
        boundary = sum(p.boundary_arcs for p in parts)
        regions.append(Region(
            id=first,
            euler=sum(p.euler for p in parts) - arcs[first],
            fcomp=parts[0].fcomp,
            boundary_arcs=max(boundary - arcs[first], min(boundary, 1)),
        ))
    removed = {c.id for c in erased}
    kept = [
        dataclasses.replace(c, source=head[c.source], target=head[c.target])
        for c in system.curves if c.id not in removed
    ]
    return CurveSystem(
        regions=regions, curves=kept, name=name or system.name
    )


def discard_disk_curves(system: CurveSystem) -> CurveSystem:
    """Surgery along every curve bounding a disk in the fiber."""
    return contract(system, [c.id for c in system.curves if c.disk_in_f])


def canal_merge(system: CurveSystem, first: str, second: str) -> CurveSystem:
    """Replaces two loops by their connected sum along a canal.

    Both loops must have the same region on the same side; the regions on
    their other sides (which share their level) get joined by the canal,
    which is cut out of the common region.

    :param system: The curve system.
    :param first: The id of the first loop.
    :param second: The id of the second loop.
    :return: The new system, where the loop ``first#second`` replaces
        both.
    :raise ValueError: If the loops cannot be joined this way.
    """
    one, two = system.curve(first), system.curve(second)
    if one.kind is not CurveKind.LOOP or two.kind is not CurveKind.LOOP:
        raise ValueError('Only loops can be joined by a canal')
    if one.target == two.target and one.source != two.source:
        common, ends, outwards = one.target, (one.source, two.source), False
    elif one.source == two.source and one.target != two.target:
        common, ends, outwards = one.source, (one.target, two.target), True
    else:
        raise ValueError(f'Loops {first} and {second} share no single side')

    joined, dropped = ends
    regions = []
    for region in system.regions:
        if region.id == dropped:
            continue
        if region.id == joined:
            other = system.region(dropped)
            region = dataclasses.replace(
                region,
                euler=region.euler + other.euler - 1,
                boundary_arcs=region.boundary_arcs + other.boundary_arcs,
            )
        elif region.id == common:
            region = dataclasses.replace(region, euler=region.euler + 1)
        regions.append(region)

    merged = Curve(
        id=f'{first}#{second}',
        source=common if outwards else joined,
        target=joined if outwards else common,
        disk_in_f=one.disk_in_f and two.disk_in_f,
        disk_in_sigma=one.disk_in_sigma and two.disk_in_sigma,
    )
    curves = []
    for curve in system.curves:
        if curve.id == first:
            curves.append(merged)
        elif curve.id != second:
            curves.append(dataclasses.replace(
                curve,
                source=joined if curve.source == dropped else curve.source,
                target=joined if curve.target == dropped else curve.target,
            ))
    return CurveSystem(regions=regions, curves=curves, name=system.name)


# ~~~~~~~~~~
# Resolution
# ~~~~~~~~~~
def resolve_step(system: CurveSystem) -> CurveSystem:
    """Resolves the intersection once along the whole fiber.

    Disk curves are discarded first. Then every curve reaching the top
    level disappears and the regions at both of its sides merge, which
    lowers the reduced twist by exactly one.

    :param system: The curve system.
    :return: The system of the resolved surface.
    :raise NothingToResolve: If the reduced twist is already zero.
    """
    reduced = discard_disk_curves(system)
    levels = potential(reduced)
    if _rho(reduced) == 0:
        raise NothingToResolve()
    top = max(levels.values())
    upper = [
        c.id for c in reduced.curves
        if levels[c.source] == top or levels[c.target] == top
    ]
    logger.debug('Resolving %d top curves of %s', len(upper), system.name)
    return contract(reduced, upper)


class WellPositioned(NamedTuple):
    well_positioned: bool
    nu: int
    mu_bound: int
    mu_exact: Optional[int]


def contains_handle(system: CurveSystem, region: str) -> bool:
    """If the region has fewer boundary components than its topology.

    A region whose boundary count ``d`` is below ``2 - euler`` has some
    genus, so it can never become part of a sphere or a disk.
    """
    loops = sum(
        1 for c in system.incident(region) if c.kind is CurveKind.LOOP
    )
    d = loops + system.region(region).boundary_arcs
    return d < 2 - system.region(region).euler


def well_positioned_and_mu(system: CurveSystem) -> WellPositioned:
    """Tells how many new spheres and disks a resolution may create.

    :param system: The curve system.
    :return: Whether no curve left after discarding the disk curves of
        the fiber bounds a disk in the surface, the number of such
        curves, the resulting bound for the disk count and the exact
        count when the data determines it (None otherwise).
    """
    reduced = discard_disk_curves(system)
    nu = sum(
        1 for c in system.curves if c.disk_in_sigma and not c.disk_in_f
    )
    well_positioned = not any(c.disk_in_sigma for c in reduced.curves)
    handles = all(contains_handle(reduced, r.id) for r in reduced.regions)
    exact = 0 if well_positioned or handles else None
    return WellPositioned(well_positioned, nu, 2 * nu, exact)


class ResolutionStep(NamedTuple):
    iteration: int
    rho_reduced: int
    budget: int
    euler: int
    euler_preserved: bool


class ResolutionTrace(api.Report):
    """The passes needed to separate the surface from the fiber."""
    title = 'resolution'

    def __init__(self, *, initial, positioning, mu_is_bound, steps):
        self.initial = initial
        self.positioning = positioning
        self.mu_is_bound = mu_is_bound
        self.steps = tuple(steps)

    def fields(self):
        return [
            ('rho0', self.initial),
            ('iterations', len(self.steps)),
            ('well_positioned', self.positioning.well_positioned),
            ('nu0', self.positioning.nu),
            ('mu_bound', self.positioning.mu_bound),
            ('mu_exact', self.positioning.mu_exact),
        ]

    def details(self):
        return [
            f'step {s.iteration} rho0={s.rho_reduced} budget={s.budget}'
            f'{" (mu bound)" if self.mu_is_bound else ""} euler={s.euler} '
            f'preserved={api.text(s.euler_preserved)}'
            for s in self.steps
        ]

    def as_dict(self):
        data = super().as_dict()
        data['mu_is_bound'] = self.mu_is_bound
        data['steps'] = [s._asdict() for s in self.steps]
        return data


def resolve_all(
        system: CurveSystem,
        chi_minus_sigma: int,
        chi_minus_f: int,
        *,
        euler_sigma: int = None,
) -> ResolutionTrace:
    """Resolves the intersection until it is empty.

    Each pass adds a copy of the fiber to the surface. The complexity
    budget after ``i`` passes is the complexity of the surface plus ``i``
    times the one of the fiber plus the disk correction, which is exact
    when known and its bound otherwise.

    :param system: The curve system.
    :param chi_minus_sigma: The complexity of the surface.
    :param chi_minus_f: The complexity of the fiber.
    :param euler_sigma: The Euler characteristic of the surface. Defaults
        to minus its complexity.
    :return: One step per pass; as many as the initial reduced twist.
    """
    positioning = well_positioned_and_mu(system)
    mu_is_bound = positioning.mu_exact is None
    mu = positioning.mu_bound if mu_is_bound else positioning.mu_exact
    if euler_sigma is None:
        euler_sigma = -chi_minus_sigma
    euler_f = sum(fiber_euler(system).values())

    current = discard_disk_curves(system)
    initial = twist(current).rho_reduced
    euler = euler_sigma
    steps = []
    for i in range(1, initial + 1):
        current = resolve_step(current)
        # The copy of the fiber added by this pass, read off the regions
        euler += sum(fiber_euler(current).values())
        steps.append(ResolutionStep(
            iteration=i,
            rho_reduced=twist(current).rho_reduced,
            budget=chi_minus_sigma + i * chi_minus_f + mu,
            euler=euler,
            euler_preserved=euler == euler_sigma + i * euler_f,
        ))
    return ResolutionTrace(
        initial=initial,
        positioning=positioning,
        mu_is_bound=mu_is_bound,
        steps=steps,
    )


# ~~~~~~~~~~~~~~~~~~~~~~~
# Effect of a 2-surgery
# ~~~~~~~~~~~~~~~~~~~~~~~
class SurgeryCase(enum.Enum):
    NULLHOMOTOPIC = 'nullhomotopic'
    SEPARATING = 'separating'
    NONSEPARATING = 'nonseparating'


class SurfaceType(enum.Enum):
    SPHERE_LIKE = 'sphere_like'
    TORUS_OR_ANNULUS = 'torus_or_annulus'
    GENERAL = 'general'


class SurgeryEffect(NamedTuple):
    genus: int
    euler: int
    chi_minus: int


_NULL, _SEP, _NONSEP = SurgeryCase
_SPHERE, _TORUS, _GENERAL = SurfaceType

SURGERY_TABLE = {
    (CurveKind.LOOP, _NULL, _SPHERE): SurgeryEffect(0, 2, 0),
    (CurveKind.LOOP, _NULL, _TORUS): SurgeryEffect(0, 2, 0),
    (CurveKind.LOOP, _NULL, _GENERAL): SurgeryEffect(0, 2, 0),
    (CurveKind.LOOP, _SEP, _GENERAL): SurgeryEffect(0, 2, -2),
    (CurveKind.LOOP, _NONSEP, _TORUS): SurgeryEffect(-1, 2, 0),
    (CurveKind.LOOP, _NONSEP, _GENERAL): SurgeryEffect(-1, 2, -2),
    (CurveKind.ARC, _NULL, _SPHERE): SurgeryEffect(0, 1, 0),
    (CurveKind.ARC, _NULL, _TORUS): SurgeryEffect(0, 1, 0),
    (CurveKind.ARC, _NULL, _GENERAL): SurgeryEffect(0, 1, 0),
    (CurveKind.ARC, _SEP, _GENERAL): SurgeryEffect(0, 1, -1),
    (CurveKind.ARC, _NONSEP, _TORUS): SurgeryEffect(-1, 1, 0),
    (CurveKind.ARC, _NONSEP, _GENERAL): SurgeryEffect(-1, 1, -1),
}


def surgery_effect(kind, case, surface) -> SurgeryEffect:
    """Change of genus, Euler characteristic and complexity of a surface
    after a 2-surgery along a curve.

    :param kind: A ``CurveKind`` (or its value).
    :param case: A ``SurgeryCase`` (or its value).
    :param surface: A ``SurfaceType`` (or its value).
    :return: The three differences.
    :raise InvalidCase: If such a curve cannot exist on such a surface.
    """
    key = (CurveKind(kind), SurgeryCase(case), SurfaceType(surface))
    try:
        return SURGERY_TABLE[key]
    except KeyError:
        raise InvalidCase(
            kind=key[0].value, case=key[1].value, surface=key[2].value
        ) from None


def system_summary(system: CurveSystem) -> api.Summary:
    """Levels and twists of a system, ready to be rendered."""
    levels = potential(system)
    result = twist(system)
    return api.Summary(
        'twist',
        [('rho', result.rho), ('rho0', result.rho_reduced)],
        [f'u({region})={level}' for region, level in levels.items()],
    )
