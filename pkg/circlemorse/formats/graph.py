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
"""The fiber graph text format.

    graph twister
    vertex a angle=1/4 index=1
    vertex b angle=3/4 index=2
    edge e_ab tail=a head=b genus=2 boundary=0
    edge e_ba tail=b head=a genus=1 boundary=0
"""
from pathlib import Path
from typing import Union

from ..fiber_graph import EdgeData, MorseGraph, MorseIndex, Vertex
from ..util import format_angle
from .directives import FieldReader, directives

INDICES = {index.value: index for index in MorseIndex}


def parse_graph(text: str, *, source: str = '<input>') -> MorseGraph:
    """Reads a graph from its text form.

    :param text: The text.
    :param source: The name of the input, for the error messages.
    :return: The graph. It is not validated.
    :raise ParseError: If the text is malformed.
    :raise InvalidGraph: If a structural invariant is broken.
    """
    name, vertices, edges = 'graph', [], []
    for directive in directives(text, source=source):
        reader = FieldReader(directive, source=source)
        if directive.keyword == 'graph':
            reader.check_keys((), ())
            name = directive.ident
        elif directive.keyword == 'vertex':
            reader.check_keys(('angle', 'index'), ())
            vertices.append(Vertex(
                directive.ident,
                reader.fraction('angle'),
                reader.choice('index', INDICES),
            ))
        elif directive.keyword == 'edge':
            reader.check_keys(('tail', 'head', 'genus'), ('boundary',))
            edges.append(EdgeData(
                directive.ident,
                reader.text('tail'),
                reader.text('head'),
                reader.integer('genus'),
                reader.integer('boundary', 0),
            ))
        else:
            raise reader.fail(f'unknown directive "{directive.keyword}"')
    return MorseGraph(vertices=vertices, edges=edges, name=name)


def format_graph(graph: MorseGraph) -> str:
    """Writes the graph in its text form (parsing it gives it back)."""
    lines = [f'graph {graph.name}']
    lines.extend(
        f'vertex {v.id} angle={format_angle(v.angle)} index={v.index.value}'
        for v in graph.vertices
    )
    lines.extend(
        f'edge {e.id} tail={e.tail} head={e.head} genus={e.genus} '
        f'boundary={e.boundary}'
        for e in graph.edges
    )
    return '\n'.join(lines) + '\n'


def load_graph(path: Union[str, Path]) -> MorseGraph:
    """Reads a graph from a UTF-8 file."""
    path = Path(path)
    return parse_graph(path.read_text(encoding='utf-8'), source=str(path))
