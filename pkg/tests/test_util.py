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
"""Tests for the angle and surface helpers."""
from fractions import Fraction

import pytest

from circlemorse.util import (
    chi_minus,
    circular_midpoints,
    euler_characteristic,
    format_angle,
    in_open_arc,
    normalize,
    positive_arc,
    to_angle,
)


class TestAngles:

    @pytest.mark.parametrize('value, expected', [
        ('3/4', Fraction(3, 4)),
        (1, Fraction(1)),
        (Fraction(5, 4), Fraction(5, 4)),
    ])
    def test_to_angle_is_exact(self, value, expected):
        assert to_angle(value) == expected

    def test_floats_are_not_angles(self):
        with pytest.raises(TypeError):
            to_angle(0.25)

    @pytest.mark.parametrize('angle, expected', [
        (Fraction(5, 4), Fraction(1, 4)),
        (Fraction(-1, 4), Fraction(3, 4)),
        (1, Fraction(0)),
        (Fraction(1, 3), Fraction(1, 3)),
    ])
    def test_normalize(self, angle, expected):
        assert normalize(angle) == expected

    @pytest.mark.parametrize('angle, expected', [
        (Fraction(1, 4), '1/4'),
        (Fraction(0), '0'),
        (Fraction(6, 8), '3/4'),
    ])
    def test_format_angle(self, angle, expected):
        assert format_angle(angle) == expected

    def test_positive_arc_wraps_around(self):
        assert positive_arc(Fraction(3, 4), Fraction(1, 4)) == Fraction(1, 2)
        assert positive_arc(Fraction(1, 4), Fraction(3, 4)) == Fraction(1, 2)
        assert positive_arc(Fraction(1, 8), Fraction(0)) == Fraction(7, 8)

    def test_positive_arc_of_equal_angles_is_the_whole_circle(self):
        assert positive_arc(Fraction(1, 3), Fraction(1, 3)) == 1

    @pytest.mark.parametrize('theta, inside', [
        (Fraction(0), True),
        (Fraction(7, 8), True),
        (Fraction(3, 4), False),
        (Fraction(1, 4), False),
        (Fraction(1, 2), False),
    ])
    def test_in_open_arc_excludes_the_endpoints(self, theta, inside):
        assert in_open_arc(theta, Fraction(3, 4), Fraction(1, 2)) is inside

    def test_full_arc_contains_everything_but_its_base(self):
        assert in_open_arc(Fraction(1, 2), Fraction(0), Fraction(1))
        assert not in_open_arc(Fraction(0), Fraction(0), Fraction(1))


class TestCircularMidpoints:

    def test_no_angle_gives_the_base_point(self):
        assert circular_midpoints([]) == [0]

    def test_single_angle_gives_its_antipode(self):
        assert circular_midpoints([Fraction(1, 4)]) == [Fraction(3, 4)]

    def test_one_sample_per_gap(self):
        samples = circular_midpoints([Fraction(3, 4), Fraction(1, 4)])
        assert samples == [Fraction(1, 2), Fraction(0)]

    def test_repeated_angles_count_once(self):
        assert len(circular_midpoints([Fraction(1, 2)] * 3)) == 1


class TestSurfaces:

    @pytest.mark.parametrize('genus, boundary, expected', [
        (0, 0, 2),
        (0, 1, 1),
        (1, 0, 0),
        (2, 1, -3),
    ])
    def test_euler_characteristic(self, genus, boundary, expected):
        assert euler_characteristic(genus, boundary) == expected

    @pytest.mark.parametrize('genus, boundary, expected', [
        (0, 0, 0),
        (0, 1, 0),
        (0, 2, 0),
        (1, 0, 0),
        (1, 1, 1),
        (2, 0, 2),
        (3, 2, 6),
    ])
    def test_chi_minus_ignores_spheres_and_disks(
            self, genus, boundary, expected
    ):
        assert chi_minus(genus, boundary) == expected
