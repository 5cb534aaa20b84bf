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
"""Index arithmetic of the tangencies between a surface and the fibers.

Only Morse type tangencies are counted: elliptic and hyperbolic points,
each one positive or negative. Everything here is plain integer
arithmetic on those four counts.
"""
from typing import NamedTuple, Tuple

from . import api


class TangencyData(NamedTuple):
    """Counts of elliptic and hyperbolic tangencies by sign."""
    e_plus: int
    h_plus: int
    e_minus: int
    h_minus: int

    @classmethod
    def parse(cls, text: str) -> 'TangencyData':
        """Reads the counts from a ``e+,h+,e-,h-`` string.

        :raise ValueError: If there are not four non negative integers.
        """
        values = [int(v) for v in text.split(',')]
        if len(values) != 4:
            raise ValueError(f'Expected four counts, got {len(values)}')
        return cls(*values).checked()

    def checked(self) -> 'TangencyData':
        if any(v < 0 for v in self):
            raise ValueError(f'Counts must be non negative, got {tuple(self)}')
        return self


def indices(data: TangencyData) -> Tuple[int, int]:
    """The positive and the negative index of the tangencies."""
    return data.e_plus - data.h_plus, data.e_minus - data.h_minus


def euler_and_pairing(i_plus: int, i_minus: int) -> Tuple[int, int]:
    """Euler characteristic of the surface and the Euler class pairing."""
    return i_plus + i_minus, i_plus - i_minus


def chi_minus_best(i_plus: int, i_minus: int) -> int:
    """Complexity of the best fiber as seen from the tangencies."""
    return abs(i_plus - i_minus)


def signs_agree(i_plus: int, i_minus: int) -> bool:
    """Both indices have the same sign (or one of them vanishes).

    This is the same as the complexity of the surface being at least the
    complexity of the best fiber.
    """
    return i_plus * i_minus >= 0


class RegionCheck(api.Report):
    """Which of the feasibility inequalities the counts satisfy."""
    title = 'tangency'

    def __init__(self, variation: int, rho: int, data: TangencyData):
        """Initializes this object.

        :param variation: The capital variation of the map. Not negative.
        :param rho: The reduced twist of the surface. Not negative.
        :param data: The tangency counts.
        """
        if variation < 0 or rho < 0:
            raise ValueError('Variation and twist must be non negative')
        self.data = data.checked()
        self.i_plus, self.i_minus = indices(data)
        self.euler, self.pairing = euler_and_pairing(self.i_plus, self.i_minus)
        slack = variation * rho
        self.first = slack >= abs(self.i_plus - self.i_minus) - abs(self.euler)
        # Half the slack against the negative index, kept in integers
        self.second = slack >= 2 * self.i_minus
        self.third = self.i_plus <= 0
        self.sign = signs_agree(self.i_plus, self.i_minus)

    @property
    def feasible(self) -> bool:
        return self.first and self.second and self.third

    def fields(self):
        return [
            ('I_plus', self.i_plus),
            ('I_minus', self.i_minus),
            ('chi', self.euler),
            ('pairing', self.pairing),
            ('chi_minus', abs(self.euler)),
            ('chi_minus_best', chi_minus_best(self.i_plus, self.i_minus)),
            ('check_i', self.first),
            ('check_ii', self.second),
            ('check_iii', self.third),
            ('feasible', self.feasible),
            ('signs_agree', self.sign),
        ]


def region_check(variation: int, rho: int, data: TangencyData) -> RegionCheck:
    """Evaluates the feasibility inequalities for the tangency counts.

    :param variation: The capital variation of the map.
    :param rho: The reduced twist of the surface against the repellers.
    :param data: The tangency counts.
    :return: The three checks, the feasibility flag and the sign test.
    """
    return RegionCheck(variation, rho, data)
