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
"""Tests for the command line."""
import io
import json

import pytest

from circlemorse import __version__
from circlemorse.cli import run
from circlemorse.fiber_graph import disjoint_union
from circlemorse.fixtures import stacked_system, twister_graph
from circlemorse.formats import format_curves, format_graph


def call(*argv):
    """Runs the command line, returning the exit code and both outputs."""
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


@pytest.fixture
def twister_file(tmp_path):
    path = tmp_path / 'twister.graph'
    path.write_text(format_graph(twister_graph(2)), encoding='utf-8')
    return str(path)


class TestGraphCommands:

    def test_validate(self):
        assert call('validate', '--fixture', 'twister:2') == (0, 'OK\n', '')

    def test_verbose_logs_go_to_the_error_stream(self):
        code, out, err = call('validate', '-vv', '--fixture', 'twister:2')
        assert (code, out) == (0, 'OK\n')
        assert 'DEBUG circlemorse.cli: Running validate\n' in err
        # The handler does not outlive the command
        assert call('validate', '--fixture', 'twister:2') == (0, 'OK\n', '')

    def test_validate_a_file(self, twister_file):
        code, out, _ = call('validate', twister_file, '--json')
        assert code == 0
        assert json.loads(out)['valid'] is True

    def test_invalid_graph_file(self, tmp_path):
        path = tmp_path / 'broken.graph'
        path.write_text(
            'vertex a angle=1/4 index=1\n'
            'vertex b angle=3/4 index=2\n'
            'edge e_ab tail=a head=b genus=5\n'
            'edge e_ba tail=b head=a genus=1\n',
            encoding='utf-8',
        )
        code, out, _ = call('validate', str(path))
        assert code == 1
        assert out.startswith('INVALID\nviolation genus-rule at a:')

    def test_invariants(self):
        code, out, _ = call('invariants', '--fixture', 'twister:2')
        assert code == 0
        assert out.splitlines()[1] == (
            'var=2 osc=2 nonbubbling=2 Var=2 chi_minus_R=4 chi_minus_A=2 '
            'attractors=1 repellers=1 genus_variation=1 bivalent_1=1 '
            'bivalent_2=1'
        )

    def test_harmonic(self):
        code, out, _ = call('harmonic', '--fixture', 'bridged')
        assert code == 0
        lines = out.splitlines()
        assert 'calabi=false witness=bridge' in lines[1]
        assert 'kernel: a_bridge=1' in lines

    def test_trees(self):
        code, out, _ = call('trees', '--fixture', 'twister:1')
        assert code == 0
        assert out.splitlines()[1] == 'trees=2 cover=true'

    def test_integral(self):
        code, out, _ = call(
            'integral', '--fixture', 'theta:1,1', '--cycle', 'e1,e3'
        )
        assert code == 0
        assert out.splitlines()[1] == 'attractors=1 repellers=1 equal=true'

    def test_norm(self):
        code, out, _ = call(
            'norm', '--fixture', 'theta:2,2', '--class', 'e3=1'
        )
        assert code == 0
        assert 'value=4' in out

    def test_bound(self):
        code, out, _ = call(
            'bound', '--fixture', 'twister:2', '--class', 'e_ba=1',
            '--rho', '1', '--rho-chi', '0', '--thurston', '0',
            '--breadth', '1',
        )
        assert code == 0
        assert out.splitlines()[1] == 'norm=2 var=2 balanced=true'

    def test_fiber(self):
        code, out, _ = call('fiber', '--fixture', 'twister:2', '--theta', '1/2')
        assert code == 0
        assert 'genus=3' in out

    def test_fiber_on_a_critical_value(self):
        code, _, err = call(
            'fiber', '--fixture', 'twister:2', '--theta', '1/4'
        )
        assert code == 1
        assert err.startswith('error: theta-on-critical-value')

    def test_export_dot(self):
        code, out, _ = call('export-dot', '--fixture', 'twister:1')
        assert code == 0
        assert out.splitlines()[0] == 'digraph "T(1)" {'

    def test_move_a(self):
        code, out, _ = call(
            'move-a', '--fixture', 'twister:1', '--times', '2'
        )
        assert code == 0
        assert 'edge e_ab tail=a head=b genus=4 boundary=0' in out

    def test_reorder_needs_the_same_index(self):
        code, _, err = call(
            'reorder', '--fixture', 'theta:1,1', '--swap', 'v1,v2'
        )
        assert code == 1
        assert err.startswith('error: index-mismatch')

    def test_surgery1(self, tmp_path):
        path = tmp_path / 'pair.graph'
        pair = disjoint_union(twister_graph(1), twister_graph(1))
        path.write_text(format_graph(pair), encoding='utf-8')
        code, out, _ = call(
            'surgery1', str(path),
            '--src', '0.e_ab@1/3', '--dst', '1.e_ba@3/8',
        )
        assert code == 0
        assert out.splitlines()[1] == \
            'components=1 attractors=3 repellers=2 repeller_delta=0'


class TestCurveCommands:

    def test_twist(self):
        code, out, _ = call('twist', '--fixture', 'opposite')
        assert code == 0
        assert out.splitlines()[1] == 'rho=1 rho0=1'

    def test_twist_without_potential(self):
        code, _, err = call('twist', '--fixture', 'coherent')
        assert code == 1
        assert err.startswith('error: cocycle-violation')

    def test_resolve(self):
        code, out, _ = call('resolve', '--fixture', 'stacked')
        assert code == 0
        assert out.splitlines()[1].startswith('rho0=2 iterations=2')

    def test_resolve_a_file_with_its_trace(self, tmp_path):
        path = tmp_path / 'stacked.curves'
        path.write_text(format_curves(stacked_system(3)), encoding='utf-8')
        code, out, _ = call(
            'resolve', str(path), '--trace', '--chi-sigma', '2',
            '--chi-f', '2',
        )
        assert code == 0
        assert 'step 1 rho0=1 budget=4 euler=-4 preserved=true' in out


class TestOtherCommands:

    def test_twister(self):
        code, out, _ = call('twister', '--n', '1', '--k', '3')
        assert code == 0
        assert 'genus_arc_ba=4 genus_arc_ab=5 Var=2' in out

    def test_twister_as_json(self):
        code, out, _ = call('twister', '--n', '1', '--k', '3', '--json')
        assert code == 0
        data = json.loads(out)
        assert data['report'] == 'twister'
        assert data['rho_lower_bound'] == 3

    def test_tangency(self):
        code, out, _ = call(
            'tangency', '--counts', '0,2,3,1', '--var', '2', '--rho', '1'
        )
        assert code == 0
        assert 'feasible=false' in out

    def test_surgery_effect(self):
        code, out, _ = call(
            'surgery-effect', '--kind', 'arc', '--case', 'separating',
            '--surface', 'general',
        )
        assert code == 0
        assert out.splitlines()[1] == 'genus=0 euler=1 chi_minus=-1'

    def test_impossible_surgery(self):
        code, _, err = call(
            'surgery-effect', '--kind', 'loop', '--case', 'separating',
            '--surface', 'sphere_like',
        )
        assert code == 1
        assert err.startswith('error: invalid-case')


class TestUsageErrors:

    def test_missing_input(self):
        code, _, err = call('validate')
        assert code == 2
        assert err.startswith('error: usage:')

    def test_unknown_fixture(self):
        assert call('validate', '--fixture', 'moebius')[0] == 2

    def test_missing_file(self, tmp_path):
        assert call('validate', str(tmp_path / 'nope.graph'))[0] == 2

    def test_malformed_file(self, tmp_path):
        path = tmp_path / 'bad.graph'
        path.write_text('vertex a angle=x index=1\n', encoding='utf-8')
        code, _, err = call('validate', str(path))
        assert code == 2
        assert err.startswith('error: parse-error:')

    @pytest.mark.parametrize('argv', [
        ['tangency', '--counts', '1,2', '--var', '0', '--rho', '0'],
        ['norm', '--fixture', 'twister:1', '--class', 'e_ab'],
        ['twister', '--n', '-1', '--k', '0'],
        ['fiber', '--fixture', 'twister:1', '--theta', '1/0'],
        ['surgery1', '--fixture', 'twister:1', '--src', 'e_ab',
         '--dst', 'e_ba@1/2'],
        [],
    ])
    def test_bad_arguments(self, argv, capsys):
        assert call(*argv)[0] == 2
        assert 'usage:' in capsys.readouterr().err

    def test_version(self, capsys):
        assert call('--version')[0] == 0
        assert capsys.readouterr().out.strip() == f'circlemorse {__version__}'
