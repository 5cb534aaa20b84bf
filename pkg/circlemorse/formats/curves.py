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
"""The curve system text format.

    curves opposite
    region U1 euler=0 fcomp=F boundary_arcs=0
    region U2 euler=0 fcomp=F boundary_arcs=0
    curve c1 from=U1 to=U2 kind=loop disk_in_F=0 disk_in_S=0
    curve c2 from=U1 to=U2 kind=loop disk_in_F=0 disk_in_S=0
"""
from pathlib import Path
from typing import Union

from ..curve_system import Curve, CurveKind, CurveSystem, Region
from .directives import FieldReader, directives

KINDS = {kind.value: kind for kind in CurveKind}


def parse_curves(text: str, *, source: str = '<input>') -> CurveSystem:
    """Reads a curve system from its text form.

    :raise ParseError: If the text is malformed.
    :raise InvalidCurveSystem: If a curve references a missing region.
    """
    name, regions, curves = 'curves', [], []
    for directive in directives(text, source=source):
        reader = FieldReader(directive, source=source)
        if directive.keyword == 'curves':
            reader.check_keys((), ())
            name = directive.ident
        elif directive.keyword == 'region':
            reader.check_keys(('euler', 'fcomp'), ('boundary_arcs',))
            regions.append(Region(
                directive.ident,
                reader.integer('euler'),
                reader.text('fcomp'),
                reader.integer('boundary_arcs', 0),
            ))
        elif directive.keyword == 'curve':
            reader.check_keys(
                ('from', 'to'), ('kind', 'disk_in_F', 'disk_in_S')
            )
            curves.append(Curve(
                directive.ident,
                reader.text('from'),
                reader.text('to'),
                reader.choice('kind', KINDS, CurveKind.LOOP),
                reader.flag('disk_in_F'),
                reader.flag('disk_in_S'),
            ))
        else:
            raise reader.fail(f'unknown directive "{directive.keyword}"')
    return CurveSystem(regions=regions, curves=curves, name=name)


def format_curves(system: CurveSystem) -> str:
    """Writes the curve system in its text form."""
    lines = [f'curves {system.name}']
    lines.extend(
        f'region {r.id} euler={r.euler} fcomp={r.fcomp} '
        f'boundary_arcs={r.boundary_arcs}'
        for r in system.regions
    )
    lines.extend(
        f'curve {c.id} from={c.source} to={c.target} kind={c.kind.value} '
        f'disk_in_F={int(c.disk_in_f)} disk_in_S={int(c.disk_in_sigma)}'
        for c in system.curves
    )
    return '\n'.join(lines) + '\n'


def load_curves(path: Union[str, Path]) -> CurveSystem:
    """Reads a curve system from a UTF-8 file."""
    path = Path(path)
    return parse_curves(path.read_text(encoding='utf-8'), source=str(path))
