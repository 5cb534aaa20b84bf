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
"""Command line front door of the library.

Every subcommand reads its input (a file or a named fixture), runs one
computation and prints its report, as ASCII text or as JSON with
``--json``. Reports go to the standard output; logs, warnings and errors
go to the standard error. Exit codes are 0 on success, 1 on a domain
error and 2 on a malformed input or command line.
"""
import argparse
import contextlib
import json
import logging
import sys
from fractions import Fraction
from typing import Sequence, TextIO, Tuple

from . import __version__, api, fixtures
from .curve_system import (
    CurveKind,
    CurveSystem,
    SurfaceType,
    SurgeryCase,
    fiber_euler,
    resolve_all,
    surgery_effect,
    system_summary,
)
from .exception import CircleMorseError, InvalidGraph
from .fiber_graph import (
    Chain,
    MorseGraph,
    fiber_at,
    genus_variation,
    validate,
    variations,
)
from .formats import export_dot, format_graph, load_curves, load_graph
from .formats.exception import ParseError
from .harmonicity import (
    MarkKind,
    all_trees,
    is_calabi,
    kernel_test,
    loop_integral,
    marked_points,
    same_index_warnings,
    signed_cycle,
    tree_cover_check,
    tree_hypotheses,
)
from .lattice import METHODS
from .surgery_moves import AttachHandle, MoveA, ReorderSameIndex, twister
from .tangency import TangencyData, region_check
from .util import to_angle
from .vertical_norm import (
    DEFAULT_BOX,
    DEFAULT_BOX_CAP,
    NormSearch,
    TwistData,
    bound_suite,
    chi_minus_of,
    minimize_class,
    var_capital,
)

logger = logging.getLogger(__name__)

USAGE_ERROR = 2


class Listing(api.Report):
    """A report that is a block of text (a graph, a DOT file...)."""

    def __init__(self, title: str, body: str):
        self.title = title
        self.body = body

    def fields(self):
        return []

    def render(self):
        return self.body.rstrip('\n')

    def as_dict(self):
        return {'report': self.title, 'text': self.body}


# ~~~~~~~~~~~~~~~~~~~~~~
# Argument value parsers
# ~~~~~~~~~~~~~~~~~~~~~~
def _fraction(text: str) -> Fraction:
    try:
        return to_angle(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f'not a rational p/q: {text!r}')


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = -1
    if value < 0:
        raise argparse.ArgumentTypeError(f'not a non negative int: {text!r}')
    return value


def _chain(text: str) -> Chain:
    """Parses ``e3=1,e1=-2`` into a chain."""
    values = {}
    for item in filter(None, text.split(',')):
        key, sep, value = item.partition('=')
        try:
            values[key] = int(value)
        except ValueError:
            sep = ''
        if not sep or not key:
            raise argparse.ArgumentTypeError(f'bad chain item {item!r}')
    return Chain(values)


def _position(text: str) -> Tuple[str, Fraction]:
    """Parses ``edge@p/q``."""
    edge, sep, angle = text.rpartition('@')
    if not sep or not edge:
        raise argparse.ArgumentTypeError(f'expected edge@angle: {text!r}')
    return edge, _fraction(angle)


def _pair(text: str) -> Tuple[str, str]:
    items = text.split(',')
    if len(items) != 2 or not all(items):
        raise argparse.ArgumentTypeError(f'expected two ids: {text!r}')
    return items[0], items[1]


def _tangency(text: str) -> TangencyData:
    try:
        return TangencyData.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


# ~~~~~~
# Inputs
# ~~~~~~
def _graph(args: argparse.Namespace) -> MorseGraph:
    if args.fixture:
        return fixtures.build_graph(args.fixture)
    if not args.graph:
        raise ValueError('a graph file or --fixture is needed')
    return load_graph(args.graph)


def _valid_graph(args: argparse.Namespace) -> MorseGraph:
    graph = _graph(args)
    report = validate(graph)
    if not report.valid:
        first = report.violations[0]
        raise InvalidGraph(f'{first.rule} at {first.where}: {first.message}')
    return graph


def _curves(args: argparse.Namespace) -> CurveSystem:
    if args.fixture:
        return fixtures.build_system(args.fixture)
    if not args.curves:
        raise ValueError('a curves file or --fixture is needed')
    return load_curves(args.curves)


def _search(args: argparse.Namespace) -> NormSearch:
    return NormSearch(box=args.box, box_cap=args.box_cap, method=args.method)


# ~~~~~~~~
# Commands
# ~~~~~~~~
def _validate(args):
    return validate(_graph(args), extra_checks=[same_index_warnings])


def _invariants(args):
    graph = _valid_graph(args)
    search = _search(args)
    var = variations(graph)
    marks = marked_points(graph)
    half, bivalent_1, bivalent_2 = genus_variation(graph)
    return api.Summary('invariants', [
        ('var', var.var),
        ('osc', var.osc),
        ('nonbubbling', var.nonbubbling),
        ('Var', var_capital(graph, search=search)),
        ('chi_minus_R',
         chi_minus_of(graph, [r.edge for r in marks.repellers])),
        ('chi_minus_A',
         chi_minus_of(graph, [a.edge for a in marks.attractors])),
        ('attractors', len(marks.attractors)),
        ('repellers', len(marks.repellers)),
        ('genus_variation', half),
        ('bivalent_1', bivalent_1),
        ('bivalent_2', bivalent_2),
    ], [m.label for m in marks.repellers + marks.attractors])


def _harmonic(args):
    graph = _valid_graph(args)
    calabi = is_calabi(graph)
    kernel = kernel_test(graph, box=args.kernel_box)
    details = [f'warning: {w}' for w in same_index_warnings(graph)]
    details += [f'hypothesis: {h}' for h in tree_hypotheses(graph)]
    if kernel.witness:
        details.append('kernel: ' + api.text(kernel.witness))
    return api.Summary('harmonic', [
        ('calabi', calabi.calabi),
        ('witness', calabi.witness),
        ('kernel_trivial', kernel.trivial),
        ('kernel_box', kernel.box),
    ], details)


def _trees(args):
    graph = _valid_graph(args)
    trees = all_trees(graph)
    details = [
        f'{t.root.label}{t.sign} leaves={",".join(t.leaves)} '
        f'branches={";".join(">".join(b) for b in t.branches)}'
        for t in trees
    ]
    return api.Summary('trees', [
        ('trees', len(trees)),
        ('cover', tree_cover_check(graph)),
    ], details)


def _integral(args):
    graph = _valid_graph(args)
    cycle = signed_cycle(args.cycle.split(','))
    attractors = loop_integral(graph, cycle, MarkKind.ATTRACTOR)
    repellers = loop_integral(graph, cycle, MarkKind.REPELLER)
    return api.Summary('integral', [
        ('attractors', attractors),
        ('repellers', repellers),
        ('equal', attractors == repellers),
    ])


def _norm(args):
    return minimize_class(_valid_graph(args), args.cls, search=_search(args))


def _bound(args):
    data = TwistData(
        rho=args.rho,
        mu=args.mu,
        twists=dict(args.twists) if args.twists is not None else None,
        rho_chi=args.rho_chi,
        breadth=args.breadth,
        height=args.height,
        breadth_chi=args.breadth_chi,
        height_chi=args.height_chi,
        thurston_value=args.thurston,
    )
    graph = _valid_graph(args)
    return bound_suite(graph, args.cls, data, search=_search(args))


def _twist(args):
    return system_summary(_curves(args))


def _resolve(args):
    system = _curves(args)
    chi_f = args.chi_f
    if chi_f is None:
        chi_f = max(0, -sum(fiber_euler(system).values()))
    trace = resolve_all(
        system, args.chi_sigma, chi_f, euler_sigma=args.euler_sigma
    )
    if args.trace:
        return trace
    return api.Summary(trace.title, trace.fields())


def _twister(args):
    _, report = twister(
        args.n, args.k, args.boundary,
        search=_search(args),
        thurston_value=args.thurston,
    )
    return report


def _surgery1(args):
    graph = _valid_graph(args)
    move = AttachHandle(args.src, args.dst, name=args.name)
    after, record = move.apply(graph)
    marks = marked_points(after)
    return api.Summary('surgery1', [
        ('components', len(after.components())),
        ('attractors', len(marks.attractors)),
        ('repellers', len(marks.repellers)),
        ('repeller_delta', record.repeller_delta),
    ], format_graph(after).splitlines())


def _tangency_check(args):
    return region_check(args.var, args.rho, args.counts)


def _export_dot(args):
    return Listing('dot', export_dot(_valid_graph(args)))


def _fiber(args):
    fiber = fiber_at(_graph(args), args.theta)
    return api.Summary('fiber', [
        ('theta', fiber.theta),
        ('edges', fiber.edges),
        ('genus', fiber.genus),
        ('chi_minus', fiber.chi_minus),
        ('components', fiber.components),
    ])


def _surgery_effect(args):
    effect = surgery_effect(args.kind, args.case, args.surface)
    return api.Summary('surgery-effect', list(effect._asdict().items()))


def _move_a(args):
    return Listing('graph', format_graph(
        MoveA(times=args.times)(_valid_graph(args))
    ))


def _reorder(args):
    return Listing('graph', format_graph(
        ReorderSameIndex(*args.swap)(_valid_graph(args))
    ))


# ~~~~~~
# Parser
# ~~~~~~
def build_parser() -> argparse.ArgumentParser:
    """The parser of the whole command line, one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help='print the report as JSON')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='log more (-v info, -vv debug)')

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument('--box', type=int, default=DEFAULT_BOX,
                        help='initial lattice search box radius')
    search.add_argument('--box-cap', type=int, default=DEFAULT_BOX_CAP,
                        help='largest box radius to try')
    search.add_argument('--method', choices=sorted(METHODS),
                        default='branch-and-bound')

    graph_input = argparse.ArgumentParser(add_help=False)
    graph_input.add_argument('graph', nargs='?', help='graph file')
    graph_input.add_argument(
        '--fixture', help=f'named graph: {", ".join(fixtures.GRAPHS)}'
                          ' (arguments after a colon, e.g. twister:2)',
    )

    curves_input = argparse.ArgumentParser(add_help=False)
    curves_input.add_argument('curves', nargs='?', help='curve system file')
    curves_input.add_argument(
        '--fixture', help=f'named system: {", ".join(fixtures.SYSTEMS)}',
    )

    parser = argparse.ArgumentParser(
        prog='circlemorse',
        description='Combinatorial invariants of circle valued Morse maps.',
    )
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    def command(name, handler, help_text, parents):
        sub = commands.add_parser(
            name, help=help_text, parents=[common] + parents
        )
        sub.set_defaults(handler=handler)
        return sub

    command('validate', _validate, 'check the local rules', [graph_input])
    command('invariants', _invariants, 'variations and marked points',
            [graph_input, search])
    sub = command('harmonic', _harmonic, 'harmonicity criteria',
                  [graph_input])
    sub.add_argument('--kernel-box', type=int, default=4)
    command('trees', _trees, 'repeller trees and their cover',
            [graph_input])
    sub = command('integral', _integral, 'marked point loop integrals',
                  [graph_input])
    sub.add_argument('--cycle', required=True,
                     help='signed edges, e.g. e1,-e3')
    sub = command('norm', _norm, 'vertical norm of a class',
                  [graph_input, search])
    sub.add_argument('--class', dest='cls', type=_chain, required=True,
                     help='weights on edges, e.g. e3=1,e1=-2')
    sub = command('bound', _bound, 'complexity lower bounds',
                  [graph_input, search])
    sub.add_argument('--class', dest='cls', type=_chain, required=True)
    sub.add_argument('--rho', type=_non_negative, default=0)
    sub.add_argument('--mu', type=_non_negative, default=0)
    sub.add_argument('--twists', type=_chain,
                     help='reduced twist per repeller edge')
    for option in ('--rho-chi', '--breadth', '--height', '--breadth-chi',
                   '--height-chi', '--thurston'):
        sub.add_argument(option, type=int)
    command('twist', _twist, 'potential and twist of a curve system',
            [curves_input])
    sub = command('resolve', _resolve, 'resolve the intersection',
                  [curves_input])
    sub.add_argument('--chi-sigma', type=_non_negative, default=0)
    sub.add_argument('--chi-f', type=_non_negative)
    sub.add_argument('--euler-sigma', type=int)
    sub.add_argument('--trace', action='store_true')
    sub = command('twister', _twister, 'the harmonic twister family',
                  [search])
    sub.add_argument('--n', type=_non_negative, required=True)
    sub.add_argument('--k', type=_non_negative, required=True)
    sub.add_argument('--boundary', type=int, choices=(0, 1), default=0)
    sub.add_argument('--thurston', type=int)
    sub = command('surgery1', _surgery1, 'attach a 1-handle', [graph_input])
    sub.add_argument('--src', type=_position, required=True,
                     help='edge@angle of the new index 2 point')
    sub.add_argument('--dst', type=_position, required=True,
                     help='edge@angle of the new index 1 point')
    sub.add_argument('--name', default='h')
    sub = command('tangency', _tangency_check, 'tangency feasibility', [])
    sub.add_argument('--counts', type=_tangency, required=True,
                     help='e+,h+,e-,h-')
    sub.add_argument('--var', type=_non_negative, required=True)
    sub.add_argument('--rho', type=_non_negative, required=True)
    command('export-dot', _export_dot, 'graphviz export', [graph_input])
    sub = command('fiber', _fiber, 'the fiber over an angle', [graph_input])
    sub.add_argument('--theta', type=_fraction, required=True)
    sub = command('surgery-effect', _surgery_effect,
                  'change of a surface after a 2-surgery', [])
    sub.add_argument('--kind', choices=[k.value for k in CurveKind],
                     required=True)
    sub.add_argument('--case', choices=[c.value for c in SurgeryCase],
                     required=True)
    sub.add_argument('--surface', choices=[s.value for s in SurfaceType],
                     required=True)
    sub = command('move-a', _move_a, 'round trips of a twister loop',
                  [graph_input])
    sub.add_argument('--times', type=_non_negative, default=1)
    sub = command('reorder', _reorder, 'swap two same index points',
                  [graph_input])
    sub.add_argument('--swap', type=_pair, required=True,
                     help='two vertex ids, e.g. v1,v2')
    return parser


@contextlib.contextmanager
def _logging_to(stream: TextIO, verbosity: int):
    """Sends the logs to the stream while the command runs."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    root = logging.getLogger()
    previous = root.level
    handler = logging.StreamHandler(stream)
    handler.setFormatter(
        logging.Formatter('%(levelname)s %(name)s: %(message)s')
    )
    root.addHandler(handler)
    root.setLevel(level)
    try:
        yield
    finally:
        root.removeHandler(handler)
        root.setLevel(previous)


def _print(report: api.Report, as_json: bool, stream: TextIO):
    if as_json:
        print(json.dumps(report.as_dict(), indent=2), file=stream)
    else:
        print(report.render(), file=stream)


def run(
        argv: Sequence[str] = None,
        *,
        stdout: TextIO = None,
        stderr: TextIO = None,
) -> int:
    """Runs a command line.

    :param argv: The arguments (without the program name). Defaults to
        the ones of the process.
    :param stdout: Where the report goes. Defaults to the standard output.
    :param stderr: Where errors go. Defaults to the standard error.
    :return: The exit code.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE_ERROR
    try:
        with _logging_to(stderr, args.verbose):
            logger.debug('Running %s', args.command)
            report = args.handler(args)
    except ParseError as e:
        print(f'error: {e.code}: {e}', file=stderr)
        return USAGE_ERROR
    except CircleMorseError as e:
        print(f'error: {e.code}: {e}', file=stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f'error: usage: {e}', file=stderr)
        return USAGE_ERROR
    _print(report, args.json, stdout)
    return 0 if getattr(report, 'valid', True) else 1


def main():
    """Entry point of the console script."""
    sys.exit(run())

