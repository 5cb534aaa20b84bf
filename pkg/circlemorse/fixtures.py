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
"""Named example graphs and curve systems.

They are small enough to be checked by hand and are used all over the
tests, the documentation and the command line (``--fixture`` options).
"""
from fractions import Fraction
from typing import Callable, Dict

from .curve_system import Curve, CurveKind, CurveSystem, Region
from .fiber_graph import EdgeData, MorseGraph, MorseIndex, Vertex

ONE, TWO, REGULAR = MorseIndex.ONE, MorseIndex.TWO, MorseIndex.REGULAR


# ~~~~~~
# Graphs
# ~~~~~~
def twister_graph(n: int, boundary: int = 0) -> MorseGraph:
    """A circle of fibers with one index 1 and one index 2 point.

    The fiber between ``a`` and ``b`` has genus ``n + 1`` and carries the
    repeller; the one between ``b`` and ``a`` has genus ``n`` and carries
    the attractor.

    :param n: The genus of the thinnest fiber. Not negative.
    :param boundary: The boundary circles of every fiber. Defaults to 0.
    """
    if n < 0 or boundary < 0:
        raise ValueError('Genus and boundary must be non negative')
    return MorseGraph(
        vertices=[
            Vertex('a', Fraction(1, 4), ONE),
            Vertex('b', Fraction(3, 4), TWO),
        ],
        edges=[
            EdgeData('e_ab', 'a', 'b', n + 1, boundary),
            EdgeData('e_ba', 'b', 'a', n, boundary),
        ],
        name=f'T({n})',
    )


def theta_graph(p: int, q: int) -> MorseGraph:
    """A fiber of genus ``p + q`` splitting in two and merging back.

    ``e1`` and ``e2`` (genera p and q) carry the attractors, ``e3`` the
    repeller.
    """
    if p < 0 or q < 0:
        raise ValueError('Genera must be non negative')
    return MorseGraph(
        vertices=[
            Vertex('v1', Fraction(1, 4), TWO),
            Vertex('v2', Fraction(3, 4), ONE),
        ],
        edges=[
            EdgeData('e1', 'v1', 'v2', p),
            EdgeData('e2', 'v1', 'v2', q),
            EdgeData('e3', 'v2', 'v1', p + q),
        ],
        name=f'Theta({p},{q})',
    )


def bridged_loops(x: int = 1, y: int = 1) -> MorseGraph:
    """Two twister loops joined by a one way bridge.

    The bridge leaves the first loop at a split and enters the second one
    at a merge, so no positive loop goes through it.

    The complexity of the regular fibers of ``bridged_loops(2, 0)`` takes
    the values 4 and 2 only, the shape of the standard example of a map
    that is not harmonic. The default arguments give 0, 2 and 4.

    :param x: Genus of the thin arc of the first loop.
    :param y: Genus of the thin arc of the second loop.
    """
    return MorseGraph(
        vertices=[
            Vertex('a', Fraction(1, 10), TWO),
            Vertex('b', Fraction(2, 5), ONE),
            Vertex('c', Fraction(3, 5), ONE),
            Vertex('d', Fraction(9, 10), TWO),
        ],
        edges=[
            EdgeData('ab', 'a', 'b', x),
            EdgeData('ba', 'b', 'a', x + 1),
            EdgeData('bridge', 'a', 'c', 1),
            EdgeData('cd', 'c', 'd', y + 1),
            EdgeData('dc', 'd', 'c', y),
        ],
        name='bridged',
    )


def fibration_loop(genus: int = 1, boundary: int = 0) -> MorseGraph:
    """A fibration: a single regular marker on a loop."""
    return MorseGraph(
        vertices=[Vertex('m', Fraction(0), REGULAR)],
        edges=[EdgeData('e', 'm', 'm', genus, boundary)],
        name=f'fibration({genus})',
    )


GRAPHS: Dict[str, Callable[..., MorseGraph]] = {
    'twister': twister_graph,
    'theta': theta_graph,
    'bridged': bridged_loops,
    'fibration': fibration_loop,
}


# ~~~~~~~~~~~~~
# Curve systems
# ~~~~~~~~~~~~~
def opposite_meridians() -> CurveSystem:
    """Two meridians of a torus with opposite normals."""
    return CurveSystem(
        regions=[Region('U1', 0, 'F'), Region('U2', 0, 'F')],
        curves=[Curve('c1', 'U1', 'U2'), Curve('c2', 'U1', 'U2')],
        name='opposite',
    )


def coherent_meridians(m: int = 2) -> CurveSystem:
    """Meridians of a torus all with the same normal (no potential)."""
    if m < 1:
        raise ValueError('At least one meridian is needed')
    return CurveSystem(
        regions=[Region(f'U{i + 1}', 0, 'F') for i in range(m)],
        curves=[
            Curve(f'c{i + 1}', f'U{i + 1}', f'U{(i + 1) % m + 1}')
            for i in range(m)
        ],
        name='coherent',
    )


def alternating_meridians(count: int = 4) -> CurveSystem:
    """An even number of torus meridians with alternating normals."""
    if count < 2 or count % 2:
        raise ValueError('An even number of meridians is needed')
    curves = []
    for i in range(count):
        low = f'U{i + 1 if i % 2 == 0 else (i + 1) % count + 1}'
        high = f'U{(i + 1) % count + 1 if i % 2 == 0 else i + 1}'
        curves.append(Curve(f'c{i + 1}', low, high))
    return CurveSystem(
        regions=[Region(f'U{i + 1}', 0, 'F') for i in range(count)],
        curves=curves,
        name='alternating',
    )


def stacked_system(levels: int = 3) -> CurveSystem:
    """Two ladders of annuli joining a bottom and a top region.

    The fiber has genus 2 and the potential takes ``levels`` values.
    """
    if levels < 2:
        raise ValueError('At least two levels are needed')
    top = levels - 1
    regions = [Region('A0', -1, 'F')]
    curves = []
    for side in 'PQ':
        previous = 'A0'
        for level in range(1, top):
            region = f'{side}{level}'
            regions.append(Region(region, 0, 'F'))
            curves.append(Curve(f'{side.lower()}{level}', previous, region))
            previous = region
        curves.append(Curve(f'{side.lower()}{top}', previous, 'T'))
    regions.append(Region('T', -1, 'F'))
    return CurveSystem(regions=regions, curves=curves, name='stacked')


def disk_pocket() -> CurveSystem:
    """A single loop of a torus bounding a disk in it."""
    return CurveSystem(
        regions=[Region('U', -1, 'F'), Region('D', 1, 'F')],
        curves=[Curve('c', 'U', 'D', disk_in_f=True)],
        name='pocket',
    )


def handled_arcs() -> CurveSystem:
    """An arc cutting a one holed genus 2 fiber into two one holed tori.

    The arc bounds a disk in the surface but both regions have genus, so
    no sphere or disk can appear after the resolution.
    """
    return CurveSystem(
        regions=[Region('U1', -1, 'F', 1), Region('U2', -1, 'F', 1)],
        curves=[Curve('a', 'U1', 'U2', CurveKind.ARC, disk_in_sigma=True)],
        name='handled',
    )


SYSTEMS: Dict[str, Callable[..., CurveSystem]] = {
    'opposite': opposite_meridians,
    'coherent': coherent_meridians,
    'alternating': alternating_meridians,
    'stacked': stacked_system,
    'pocket': disk_pocket,
    'handled': handled_arcs,
}


def _build(registry, spec: str):
    name, _, args = spec.partition(':')
    if name not in registry:
        known = ', '.join(registry)
        raise ValueError(f'Unknown fixture {name!r}, try {known}')
    try:
        values = [int(v) for v in args.split(',')] if args else []
    except ValueError:
        raise ValueError(f'Fixture arguments must be integers: {args!r}')
    try:
        return registry[name](*values)
    except TypeError:
        raise ValueError(f'Wrong number of arguments for {name!r}')


def build_graph(spec: str) -> MorseGraph:
    """Builds a graph fixture from a ``name[:arg,...]`` string.

    For instance ``"twister:2"`` is the twister loop of genus 2 and
    ``"theta:2,2"`` the theta graph with both sheets of genus 2.

    :raise ValueError: If the name or the arguments are wrong.
    """
    return _build(GRAPHS, spec)


def build_system(spec: str) -> CurveSystem:
    """Builds a curve system fixture from a ``name[:arg,...]`` string."""
    return _build(SYSTEMS, spec)
