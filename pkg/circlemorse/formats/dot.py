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
"""Graphviz export of fiber graphs."""
from ..fiber_graph import MorseGraph
from ..harmonicity import MarkKind, marks_by_edge
from ..util import format_angle


def _quote(ident: str) -> str:
    return '"' + ident.replace('\\', '\\\\').replace('"', '\\"') + '"'


def export_dot(graph: MorseGraph) -> str:
    """The graph as a DOT digraph.

    Vertices are labeled with their index and angle and edges with their
    genus, boundary and complexity. A marked edge is drawn through a
    diamond node labeled ``A`` (attractor) or ``R`` (repeller).

    :param graph: The graph to export.
    :return: The DOT text.
    """
    lines = [f'digraph {_quote(graph.name)} {{']
    for vertex in graph.vertices:
        label = f'idx={vertex.index.short}@{format_angle(vertex.angle)}'
        lines.append(f'  {_quote(vertex.id)} [label="{label}"];')

    marks = marks_by_edge(graph)
    for edge in graph.edges:
        label = f'g={edge.genus},b={edge.boundary},chi-={edge.chi_minus}'
        tail, head = _quote(edge.tail), _quote(edge.head)
        mark = marks.get(edge.id)
        if mark is None:
            lines.append(f'  {tail} -> {head} [label="{label}"];')
            continue
        middle = _quote(mark.label)
        shown = 'A' if mark.kind is MarkKind.ATTRACTOR else 'R'
        lines.append(f'  {middle} [shape=diamond,label="{shown}"];')
        lines.append(f'  {tail} -> {middle} [label="{label}",arrowhead=none];')
        lines.append(f'  {middle} -> {head};')
    lines.append('}')
    return '\n'.join(lines) + '\n'
