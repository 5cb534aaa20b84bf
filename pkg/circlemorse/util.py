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
"""Utilities to be used across the project.

Angles on the circle are exact ``Fraction`` values in ``[0, 1)``. No
floating point value ever enters the core of the library.
"""
from fractions import Fraction
from typing import Iterable, List, Union

Number = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_angle(value: Union[Number, str]) -> Fraction:
    """Converts the value into an exact angle.

    :param value: An integer, a fraction or a string like ``"3/4"``.
    :return: The value as a fraction (not normalized).
    :raise TypeError: If the value is a float.
    :raise ValueError: If the string is not a rational.
    :raise ZeroDivisionError: If the denominator is zero.
    """
    if isinstance(value, float):
        raise TypeError(f'Angles must be exact, got {value!r}')
    return Fraction(value)


def normalize(angle: Number) -> Fraction:
    """Brings the angle back into ``[0, 1)``."""
    return Fraction(angle) % 1


def format_angle(angle: Number) -> str:
    """Prints an angle as ``p/q`` (or as a plain integer)."""
    angle = Fraction(angle)
    if angle.denominator == 1:
        return str(angle.numerator)
    return f'{angle.numerator}/{angle.denominator}'


def positive_arc(start: Fraction, end: Fraction) -> Fraction:
    """Length of the positive arc going from start to end.

    Equal angles make the full circle (length 1), which is the arc of a
    loop based on a single point.
    """
    length = (end - start) % 1
    return length if length else ONE


def in_open_arc(theta: Fraction, start: Fraction, length: Fraction) -> bool:
    """Tells if theta lies strictly inside the positive arc.

    :param theta: The angle to check.
    :param start: The angle where the arc begins.
    :param length: The positive length of the arc, in ``(0, 1]``.
    :return: True if theta is neither endpoint and is reached before
        traversing the whole arc.
    """
    offset = (theta - start) % 1
    return ZERO < offset < length


def circular_midpoints(angles: Iterable[Fraction]) -> List[Fraction]:
    """Angular midpoints between consecutive angles in circular order.

    :param angles: Distinct angles in ``[0, 1)``.
    :return: One sample per gap. A single angle yields its antipode and
        no angle at all yields the base point.
    """
    ordered = sorted(set(angles))
    if not ordered:
        return [ZERO]
    samples = []
    for i, angle in enumerate(ordered):
        following = ordered[(i + 1) % len(ordered)]
        gap = positive_arc(angle, following)
        samples.append(normalize(angle + gap / 2))
    return samples


def euler_characteristic(genus: int, boundary: int) -> int:
    """Euler characteristic of a connected orientable surface."""
    return 2 - 2 * genus - boundary


def chi_minus(genus: int, boundary: int) -> int:
    """Thurston complexity of a connected orientable surface.

    Spheres and disks do not count, every other surface contributes
    minus its Euler characteristic.
    """
    if genus == 0 and boundary in (0, 1):
        return 0
    return 2 * genus + boundary - 2
