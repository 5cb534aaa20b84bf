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
"""Tests for the graph rewrites and the twister family."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlemorse.exception import (
    IndexMismatch,
    NonPositiveHandle,
    NotAdjacent,
    PatternMismatch,
    PositionOnVertex,
)
from circlemorse.fiber_graph import (
    Chain,
    MorseIndex,
    disjoint_union,
    tau_chains,
    validate,
    variations,
)
from circlemorse.fixtures import fibration_loop, theta_graph, twister_graph
from circlemorse.harmonicity import is_calabi, marked_points
from circlemorse.surgery_moves import (
    AttachHandle,
    ConditionFibration,
    InsertBivalentPair,
    InsertTheta,
    MoveA,
    ReorderSameIndex,
    attach_handle,
    condition_fibration,
    insert_bivalent_pair,
    insert_theta,
    move_a_roundtrip,
    reorder_same_index,
    twister,
)
from circlemorse.vertical_norm import chi_minus_of, vertical_norm
from tests.util import bivalent_ring, build_graph, valid_graphs


def two_twisters():
    """Two twister loops side by side, the second one a quarter later."""
    return disjoint_union(twister_graph(1), twister_graph(1))


class TestMoveA:

    def test_both_fibers_gain_handles(self):
        after, record = MoveA(times=2).apply(twister_graph(1))
        assert after.edge('e_ab').genus == 4
        assert after.edge('e_ba').genus == 3
        assert record.genus_delta == {'e_ab': 2, 'e_ba': 2}
        assert record.chi_delta == {'e_ab': 4, 'e_ba': 4}
        assert record.repeller_delta == 0
        assert record.kind == 'move-a'

    def test_zero_round_trips_change_nothing(self):
        assert move_a_roundtrip(twister_graph(2), 0) == twister_graph(2)

    def test_needs_a_twister_loop(self):
        with pytest.raises(PatternMismatch):
            MoveA()(theta_graph(1, 1))
        with pytest.raises(PatternMismatch):
            MoveA()(fibration_loop())

    def test_negative_count(self):
        with pytest.raises(ValueError):
            MoveA(times=-1)


class TestReorder:

    def test_swaps_the_angles(self):
        after = reorder_same_index(bivalent_ring(), 'p', 'q')
        assert after.vertex('p').angle == Fraction(3, 8)
        assert after.vertex('q').angle == Fraction(1, 8)
        assert tau_chains(after) == tau_chains(bivalent_ring())

    def test_neighbours_across_the_base_point(self):
        graph = bivalent_ring()
        after, record = ReorderSameIndex('s', 'r').apply(graph)
        assert after.vertex('s').angle == Fraction(5, 8)
        assert record.vertices == ('s', 'r')
        assert record.genus_delta == Chain()

    def test_indices_must_agree(self):
        with pytest.raises(IndexMismatch):
            reorder_same_index(bivalent_ring(), 'q', 'r')

    def test_vertices_must_be_neighbours(self):
        graph = build_graph(
            [('p', '1/8', 1), ('q', '3/8', 2), ('r', '5/8', 1),
             ('s', '7/8', 2)],
            [
                ('pq', 'p', 'q', 2),
                ('qr', 'q', 'r', 1),
                ('rs', 'r', 's', 2),
                ('sp', 's', 'p', 1),
            ],
        )
        assert validate(graph).valid
        with pytest.raises(NotAdjacent):
            reorder_same_index(graph, 'p', 'r')


class TestAttachHandle:

    def test_joins_two_components(self):
        graph = two_twisters()
        after, record = AttachHandle(
            ('0.e_ab', Fraction(1, 3)), ('1.e_ba', Fraction(3, 8))
        ).apply(graph)
        assert len(after.components()) == 1
        assert after.vertex('h.src').index is MorseIndex.TWO
        assert after.vertex('h.dst').index is MorseIndex.ONE
        assert after.edge('h').genus == 0
        assert after.edge('0.e_ab.1').genus == 2
        assert record.repeller_delta == 0
        assert record.origin('1.e_ba.2') == '1.e_ba'
        assert record.origin('h') == 'h'
        assert len(marked_points(after).attractors) == 3

    def test_angles_as_strings(self):
        after = attach_handle(
            two_twisters(), ('0.e_ab', '1/3'), ('1.e_ba', '3/8'), name='k'
        )
        assert after.vertex('k.src').angle == Fraction(1, 3)
        assert after.has_edge('k')

    def test_handle_must_run_forwards(self):
        with pytest.raises(NonPositiveHandle):
            attach_handle(
                two_twisters(), ('1.e_ba', '3/8'), ('0.e_ab', '1/3')
            )

    @pytest.mark.parametrize('source', [
        ('0.e_ab', '3/4'),
        ('0.e_ab', '1/8'),
    ])
    def test_position_must_be_inside_the_edge(self, source):
        with pytest.raises(PositionOnVertex):
            attach_handle(two_twisters(), source, ('1.e_ba', '3/8'))

    def test_both_ends_on_one_edge(self):
        with pytest.raises(PatternMismatch):
            attach_handle(
                twister_graph(1), ('e_ab', '1/3'), ('e_ab', '1/2')
            )

    def test_source_between_index_1_points(self):
        graph = bivalent_ring()
        with pytest.raises(PatternMismatch):
            attach_handle(graph, ('pq', '1/4'), ('rs', '3/4'))

    @settings(max_examples=100)
    @given(st.integers(0, 3), st.integers(0, 3), st.data())
    def test_random_placements(self, n, m, data):
        graph = disjoint_union(twister_graph(n), twister_graph(m))
        # The first loop runs its repeller over (1/4, 3/4), the second
        # its attractor over (0, 1/2)
        start = data.draw(st.integers(17, 30))
        end = data.draw(st.integers(start + 1, 31))
        after, record = AttachHandle(
            ('0.e_ab', Fraction(start, 64)), ('1.e_ba', Fraction(end, 64))
        ).apply(graph)
        assert validate(after).valid
        assert len(after.components()) == 1
        assert record.repeller_delta == 0
        assert len(marked_points(after).attractors) == 3
        assert not is_calabi(after).calabi
        # Classes living on the untouched edges of both loops
        p = data.draw(st.integers(-2, 2))
        q = data.draw(st.integers(-2, 2))
        joined = vertical_norm(after, Chain({'0.e_ba': p, '1.e_ab': q}))
        assert joined <= \
            vertical_norm(twister_graph(n), Chain({'e_ba': p})) + \
            vertical_norm(twister_graph(m), Chain({'e_ab': q}))

    def test_fibrations_take_no_handles(self):
        graph = disjoint_union(fibration_loop(), twister_graph(1))
        with pytest.raises(PatternMismatch):
            attach_handle(graph, ('e', '1/8'), ('e_ba', '7/8'))


class TestConditionFibration:

    def test_marker_becomes_a_canceling_pair(self):
        after, record = ConditionFibration('m').apply(fibration_loop(2))
        assert after.vertex('m.1').angle == 0
        assert after.vertex('m.2').angle == Fraction(1, 2)
        assert after.edge('m.c').genus == 3
        assert after.edge('e').tail == 'm.2'
        assert record.vertices == ('m.1', 'm.2')
        assert record.repeller_delta == 1
        assert is_calabi(after).calabi

    def test_only_regular_markers(self):
        with pytest.raises(PatternMismatch):
            condition_fibration(twister_graph(1), 'a')


class TestInsertions:

    def test_bivalent_pair(self):
        graph = twister_graph(1)
        after, record = InsertBivalentPair('e_ab').apply(graph)
        assert after.vertex('e_ab:1').angle == Fraction(5, 12)
        assert after.vertex('e_ab:2').angle == Fraction(7, 12)
        assert [after.edge(e).genus for e in record.edges] == [2, 3, 2]
        assert record.origin('e_ab.c') == 'e_ab'
        assert [r.edge for r in marked_points(after).repellers] == ['e_ab.c']

    def test_bivalent_pair_across_the_base_point(self):
        after = insert_bivalent_pair(twister_graph(1), 'e_ba')
        assert after.vertex('e_ba:1').angle == Fraction(11, 12)
        assert after.vertex('e_ba:2').angle == Fraction(1, 12)

    def test_bivalent_pair_raises_the_variation(self):
        after = insert_bivalent_pair(twister_graph(1), 'e_ab')
        marks = marked_points(after)
        assert chi_minus_of(after, [r.edge for r in marks.repellers]) == 4
        assert chi_minus_of(after, [a.edge for a in marks.attractors]) == 0
        assert variations(after).var == 4

    def test_theta(self):
        after = insert_theta(twister_graph(2), 'e_ab', 1)
        assert after.edge('e_ab.p').genus == 1
        assert after.edge('e_ab.q').genus == 2
        assert after.vertex('e_ab:2').index is MorseIndex.TWO
        assert validate(after).valid

    def test_theta_cannot_take_more_than_the_edge(self):
        with pytest.raises(PatternMismatch):
            InsertTheta('e_ab', 4)(twister_graph(2))
        with pytest.raises(PatternMismatch):
            InsertTheta('e_ab', 1, boundary=1)(twister_graph(2))

    @given(valid_graphs(), st.data())
    def test_insertions_keep_the_graph_harmonic(self, graph, data):
        edge = data.draw(st.sampled_from([e.id for e in graph.edges]))
        after = insert_bivalent_pair(graph, edge)
        assert validate(after).valid
        assert is_calabi(after).calabi
        assert len(marked_points(after).repellers) == \
            len(marked_points(graph).repellers) + \
            (0 if edge in {r.edge for r in marked_points(graph).repellers}
             else 1)


class TestTwister:

    def test_round_trips(self):
        graph, report = twister(1, 3)
        assert graph.edge('e_ba').genus == 4
        assert report.render() == (
            'twister\n'
            'n=1 k=3 genus_arc_ba=4 genus_arc_ab=5 Var=2 var=2 '
            'chi_minus_best=6 is_calabi=true rho_lower_bound=3'
        )

    def test_solid_torus_variant(self):
        _, report = twister(1, 1, boundary=1)
        fields = dict(report.fields())
        assert fields['chi_minus_best'] == 3
        assert fields['chi_minus_best_stated'] == 4
        assert fields['chi_minus_best_mismatch'] is True
        assert fields['rho_lower_bound'] == 1

    def test_sphere_fibers_have_no_ratio(self):
        _, report = twister(0, 0)
        assert report.rho_lower_bound is None
        assert report.as_dict()['rho_lower_bound'] is None

    def test_explicit_thurston_value(self):
        _, report = twister(2, 1, thurston_value=2)
        assert report.rho_lower_bound == 1

    @pytest.mark.parametrize('n, k, boundary', [
        (-1, 0, 0), (0, -1, 0), (1, 1, 2),
    ])
    def test_domain(self, n, k, boundary):
        with pytest.raises(ValueError):
            twister(n, k, boundary)

    @pytest.mark.parametrize('k', range(4))
    def test_variation_does_not_grow(self, k):
        _, report = twister(2, k)
        assert report.var_capital == 2
        assert report.var == 2

    def test_many_round_trips(self):
        _, report = twister(1, 10 ** 4)
        fields = report.as_dict()
        assert fields['genus_arc_ba'] == 10 ** 4 + 1
        assert fields['chi_minus_best'] == 2 * 10 ** 4
        assert fields['Var'] == fields['var'] == 2
        assert fields['rho_lower_bound'] == 10 ** 4
