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
"""Tests for the Graphviz export."""
from circlemorse.fixtures import fibration_loop, theta_graph, twister_graph
from circlemorse.formats import export_dot
from tests.util import bivalent_ring, build_graph


def test_twister_loop():
    assert export_dot(twister_graph(1)).splitlines() == [
        'digraph "T(1)" {',
        '  "a" [label="idx=1@1/4"];',
        '  "b" [label="idx=2@3/4"];',
        '  "r_e_ab" [shape=diamond,label="R"];',
        '  "a" -> "r_e_ab" [label="g=2,b=0,chi-=2",arrowhead=none];',
        '  "r_e_ab" -> "b";',
        '  "a_e_ba" [shape=diamond,label="A"];',
        '  "b" -> "a_e_ba" [label="g=1,b=0,chi-=0",arrowhead=none];',
        '  "a_e_ba" -> "a";',
        '}',
    ]


def test_fibration():
    lines = export_dot(fibration_loop()).splitlines()
    assert lines[1] == '  "m" [label="idx=reg@0"];'
    assert lines[2] == '  "m" -> "m" [label="g=1,b=0,chi-=0"];'


def test_unmarked_edges_are_plain():
    text = export_dot(bivalent_ring())
    assert '  "p" -> "q" [label="g=2,b=0,chi-=2"];' in text
    assert text.count('shape=diamond') == 2


def test_one_diamond_per_marked_edge():
    assert export_dot(theta_graph(1, 1)).count('shape=diamond') == 3


def test_quotes_are_escaped():
    graph = build_graph([('say "hi"', '0', 'regular')],
                        [('e', 'say "hi"', 'say "hi"', 0, 1)], name='q')
    assert '  "say \\"hi\\"" [label="idx=reg@0"];' in export_dot(graph)
