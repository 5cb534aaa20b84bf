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
"""Tests for the generic contracts of the library."""
from fractions import Fraction
from unittest.mock import Mock

import pytest

from circlemorse import api


class TestPlainValues:

    @pytest.mark.parametrize('value, expected', [
        (Fraction(1, 2), '1/2'),
        (Fraction(4, 2), 2),
        (True, True),
        (None, None),
        ('x', 'x'),
        ((1, Fraction(1, 3)), [1, '1/3']),
        ({1: Fraction(3)}, {'1': 3}),
    ])
    def test_plain(self, value, expected):
        assert api.plain(value) == expected

    @pytest.mark.parametrize('value, expected', [
        (True, 'true'),
        (False, 'false'),
        (None, '-'),
        (Fraction(-3, 4), '-3/4'),
        (7, '7'),
        (('e1', 'e2'), 'e1,e2'),
        ({'a': 1, 'b': None}, 'a=1,b=-'),
    ])
    def test_text(self, value, expected):
        assert api.text(value) == expected


class TestReport:

    def test_report_is_abstract(self):
        with pytest.raises(TypeError):
            api.Report()

    def test_summary_renders_title_fields_and_details(self):
        summary = api.Summary(
            'twist', [('rho', 2), ('ok', True)], ['u(U)=0', 'u(V)=2']
        )
        assert summary.render() == 'twist\nrho=2 ok=true\nu(U)=0\nu(V)=2'

    def test_summary_without_fields_renders_only_its_title(self):
        assert api.Summary('empty', []).render() == 'empty'

    def test_as_dict_keeps_field_order_and_kind(self):
        summary = api.Summary('norm', [('value', Fraction(3, 2)), ('a', 1)])
        data = summary.as_dict()
        assert list(data) == ['report', 'value', 'a']
        assert data == {'report': 'norm', 'value': '3/2', 'a': 1}

    def test_nested_reports_become_dicts(self):
        inner = api.Summary('inner', [('x', 1)])
        assert api.plain(inner) == {'report': 'inner', 'x': 1}


class TestMove:

    def test_calling_a_move_discards_its_record(self):
        class Identity(api.Move):
            apply = Mock(return_value=('graph', 'record'))

        assert Identity()('input') == 'graph'
        Identity.apply.assert_called_once_with('input')

    def test_move_is_abstract(self):
        with pytest.raises(TypeError):
            api.Move()


class TestLatticeSolver:

    @pytest.mark.parametrize('box', [0, -1])
    def test_box_must_be_positive(self, box):
        class Solver(api.LatticeSolver):
            def __call__(self, problem, *, incumbent=None):
                return None

        with pytest.raises(ValueError):
            Solver(box=box)
