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
"""Builders and hypothesis strategies shared by the tests."""
from fractions import Fraction

from hypothesis import strategies as st

from circlemorse.curve_system import Curve, CurveSystem, Region
from circlemorse.fiber_graph import Chain, EdgeData, MorseGraph, MorseIndex, \
    Vertex
from circlemorse.fixtures import fibration_loop, theta_graph, twister_graph
from circlemorse.lattice import LatticeProblem
from circlemorse.surgery_moves import (
    ConditionFibration,
    InsertBivalentPair,
    InsertTheta,
)


def build_graph(vertices, edges, name='graph'):
    """Builds a graph from plain tuples.

    :param vertices: ``(id, angle, index)`` tuples; the angle may be a
        string like ``"1/4"`` and the index ``"1"``, ``"2"`` or
        ``"regular"``.
    :param edges: ``(id, tail, head, genus[, boundary])`` tuples.
    """
    return MorseGraph(
        vertices=[
            Vertex(i, Fraction(a), MorseIndex(str(x))) for i, a, x in vertices
        ],
        edges=[EdgeData(*e) for e in edges],
        name=name,
    )


def bivalent_ring():
    """Two bivalent pairs of a genus 1 ring, indices 1, 1, 2, 2."""
    return build_graph(
        [('p', '1/8', 1), ('q', '3/8', 1), ('r', '5/8', 2), ('s', '7/8', 2)],
        [
            ('pq', 'p', 'q', 2),
            ('qr', 'q', 'r', 3),
            ('rs', 'r', 's', 2),
            ('sp', 's', 'p', 1),
        ],
        name='ring',
    )


# ~~~~~~~~~~~~~~~~~~~~~
# Hypothesis strategies
# ~~~~~~~~~~~~~~~~~~~~~
@st.composite
def seed_graphs(draw):
    """A small valid graph to grow others from."""
    kind = draw(st.sampled_from(['twister', 'theta', 'fibration']))
    if kind == 'twister':
        return twister_graph(draw(st.integers(0, 3)))
    if kind == 'theta':
        return theta_graph(draw(st.integers(0, 2)), draw(st.integers(0, 2)))
    graph = fibration_loop(draw(st.integers(0, 3)))
    return ConditionFibration('m')(graph)


@st.composite
def valid_graphs(draw, max_insertions=6):
    """Valid closed fiber graphs built by random local insertions."""
    graph = draw(seed_graphs())
    for _ in range(draw(st.integers(0, max_insertions))):
        edge = draw(st.sampled_from([e.id for e in graph.edges]))
        if draw(st.booleans()):
            graph = InsertBivalentPair(edge)(graph)
        else:
            genus = draw(st.integers(0, graph.edge(edge).genus))
            graph = InsertTheta(edge, genus)(graph)
    return graph


def chains(graph, *, weights=2, size=3):
    """Small vertical classes on the edges of a graph."""
    return st.dictionaries(
        st.sampled_from([e.id for e in graph.edges]),
        st.integers(-weights, weights),
        max_size=size,
    ).map(Chain)


@st.composite
def digraphs(draw, max_edges=12):
    """Graphs with arbitrary shape, valid or not."""
    count = draw(st.integers(1, 6))
    vertices = [
        Vertex(f'v{i}', Fraction(i, count), MorseIndex.ONE)
        for i in range(count)
    ]
    pairs = draw(st.lists(
        st.tuples(st.integers(0, count - 1), st.integers(0, count - 1)),
        max_size=max_edges,
    ))
    edges = [
        EdgeData(f'e{k}', f'v{i}', f'v{j}', 1) for k, (i, j) in enumerate(pairs)
    ]
    return MorseGraph(vertices=vertices, edges=edges)


@st.composite
def lattice_problems(draw, max_columns=6, max_rows=3, entries=3):
    """Random weighted l1 problems with small entries."""
    columns = draw(st.integers(1, max_columns))
    rows = draw(st.integers(1, max_rows))
    entry = st.integers(-entries, entries)
    matrix = draw(st.lists(
        st.lists(entry, min_size=columns, max_size=columns),
        min_size=rows, max_size=rows,
    ))
    if draw(st.booleans()):
        # A reachable target
        x = draw(st.lists(st.integers(-2, 2), min_size=columns,
                          max_size=columns))
        target = [sum(a * b for a, b in zip(row, x)) for row in matrix]
    else:
        target = draw(st.lists(entry, min_size=rows, max_size=rows))
    weights = draw(st.lists(st.integers(0, 4), min_size=columns,
                            max_size=columns))
    return LatticeProblem(matrix=matrix, target=target, weights=weights)


@st.composite
def curve_systems(draw, pockets=True):
    """Cocycle valid curve systems made of level ladders.

    Every region above the bottom level gets a curve from some region one
    level below, plus a few extra curves between consecutive levels.
    Disk pockets are disks of the fiber hanging from a region.
    """
    regions, curves = [], []
    for f in range(draw(st.integers(1, 2))):
        fcomp = f'F{f}'
        levels = []
        for level in range(draw(st.integers(1, 4))):
            size = draw(st.integers(1, 3))
            names = [f'{fcomp}L{level}R{i}' for i in range(size)]
            for name in names:
                regions.append(Region(name, draw(st.integers(-3, 0)), fcomp))
                if levels:
                    below = draw(st.sampled_from(levels[-1]))
                    curves.append((below, name, False))
            levels.append(names)
        for _ in range(draw(st.integers(0, 3))):
            if len(levels) < 2:
                break
            level = draw(st.integers(1, len(levels) - 1))
            curves.append((
                draw(st.sampled_from(levels[level - 1])),
                draw(st.sampled_from(levels[level])),
                False,
            ))
        if pockets:
            for name in draw(st.lists(
                    st.sampled_from([n for ns in levels for n in ns]),
                    max_size=2, unique=True,
            )):
                disk = f'{name}D'
                regions.append(Region(disk, 1, fcomp))
                if draw(st.booleans()):
                    curves.append((name, disk, True))
                else:
                    curves.append((disk, name, True))
    return CurveSystem(
        regions=regions,
        curves=[
            Curve(f'c{i}', source, target, disk_in_f=disk)
            for i, (source, target, disk) in enumerate(curves)
        ],
    )
