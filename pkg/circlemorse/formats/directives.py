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
"""Tokenizer shared by the graph and the curve system formats."""
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Sequence

from ..util import to_angle
from .exception import ParseError


class Directive(NamedTuple):
    """A single meaningful line of an input."""
    line: int
    keyword: str
    ident: str
    fields: Dict[str, str]


def directives(text: str, *, source: str = '<input>') -> Iterator[Directive]:
    """Splits the text into directives.

    :param text: The whole input.
    :param source: The name of the input, for the error messages.
    :return: An iterator over the directives, in order.
    :raise ParseError: If a field is not a ``key=value`` pair or is
        repeated, or a directive has no id.
    """
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0].strip()
        if not content:
            continue
        keyword, *rest = content.split()
        if not rest:
            raise ParseError(
                source=source, line=number, reason=f'"{keyword}" needs an id'
            )
        ident, *pairs = rest
        fields = {}
        for pair in pairs:
            key, sep, value = pair.partition('=')
            if not sep or not key or not value:
                raise ParseError(
                    source=source, line=number, reason=f'bad field "{pair}"'
                )
            if key in fields:
                raise ParseError(
                    source=source, line=number, reason=f'repeated "{key}"'
                )
            fields[key] = value
        yield Directive(number, keyword, ident, fields)


class FieldReader:
    """Typed access to the fields of a directive."""

    def __init__(self, directive: Directive, *, source: str):
        self.directive = directive
        self.source = source

    def fail(self, reason: str) -> ParseError:
        return ParseError(
            source=self.source, line=self.directive.line, reason=reason
        )

    def check_keys(self, required: Sequence[str], optional: Sequence[str]):
        """Complains about missing or unexpected fields."""
        keys = set(self.directive.fields)
        missing: List[str] = [k for k in required if k not in keys]
        if missing:
            raise self.fail(f'missing {", ".join(missing)}')
        unknown = sorted(keys - set(required) - set(optional))
        if unknown:
            raise self.fail(f'unknown {", ".join(unknown)}')

    def text(self, key: str, default: str = None) -> str:
        return self.directive.fields.get(key, default)

    def integer(self, key: str, default: int = None) -> int:
        value = self.directive.fields.get(key)
        if value is None:
            return default
        try:
            return int(value)
        except ValueError:
            raise self.fail(f'{key} must be an integer, got "{value}"')

    def flag(self, key: str) -> bool:
        value = self.directive.fields.get(key, '0')
        if value not in ('0', '1'):
            raise self.fail(f'{key} must be 0 or 1, got "{value}"')
        return value == '1'

    def fraction(self, key: str) -> Fraction:
        value = self.directive.fields[key]
        try:
            return to_angle(value)
        except (ValueError, ZeroDivisionError):
            raise self.fail(f'{key} must be a rational p/q, got "{value}"')

    def choice(self, key: str, options: Dict[str, object], default=None):
        value = self.directive.fields.get(key)
        if value is None:
            return default
        if value not in options:
            expected = '|'.join(options)
            raise self.fail(f'{key} must be one of {expected}, got "{value}"')
        return options[value]
