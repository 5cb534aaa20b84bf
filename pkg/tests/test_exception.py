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
"""Tests for the error hierarchy."""
import inspect

import pytest

from circlemorse import exception
from circlemorse.exception import (
    BoxTooSmall,
    CircleMorseError,
    CircleMorseWarning,
    Infeasible,
    UnknownElement,
)
from circlemorse.formats import exception as format_exception


def error_classes():
    for module in (exception, format_exception):
        for _, value in inspect.getmembers(module, inspect.isclass):
            if issubclass(value, CircleMorseError):
                yield value


def test_codes_are_unique():
    classes = set(error_classes())
    codes = [cls.code for cls in classes]
    assert len(codes) == len(set(codes))


@pytest.mark.parametrize('cls', sorted(error_classes(), key=lambda c: c.code))
def test_codes_are_kebab_case(cls):
    assert cls.code == cls.code.lower()
    assert ' ' not in cls.code and '_' not in cls.code


def test_messages():
    assert str(Infeasible()) == 'The system has no integer solution'
    assert Infeasible(box=3).box == 3
    error = UnknownElement(kind='edge', ident='e9')
    assert 'e9' in str(error)
    assert error.code == 'unknown-element'


def test_warnings_are_user_warnings():
    warning = BoxTooSmall(box=4, value=7)
    assert isinstance(warning, CircleMorseWarning)
    assert isinstance(warning, UserWarning)
    assert (warning.box, warning.value) == (4, 7)
