# NEON AI (TM) SOFTWARE, Software Development Kit & Application Framework
# All trademark and other rights reserved by their respective owners
# Copyright 2008-2022 Neongecko.com Inc.
# Contributors: Daniel McKnight, Guy Daniels, Elon Gasper, Richard Leeds,
# Regina Bloomstine, Casimiro Ferreira, Andrii Pernatii, Kirill Hrymailo
# BSD-3 License
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
# 1. Redistributions of source code must retain the above copyright notice,
#    this list of conditions and the following disclaimer.
# 2. Redistributions in binary form must reproduce the above copyright notice,
#    this list of conditions and the following disclaimer in the documentation
#    and/or other materials provided with the distribution.
# 3. Neither the name of the copyright holder nor the names of its
#    contributors may be used to endorse or promote products derived from this
#    software without specific prior written permission.
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO,
# THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR
# PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR
# CONTRIBUTORS  BE LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL,
# EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO,
# PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA,
# OR PROFITS;  OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF
# LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING
# NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF THIS
# SOFTWARE,  EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

import os
import sys
import unittest

from fractions import Fraction
from itertools import product

sys.path.append(os.path.dirname(os.path.dirname(os.path.realpath(__file__))))
from sl3_frieze.combinatorics import Family, GroundSet, Triangle, \
    frozen_triangles, random_maximal_family
from sl3_frieze.errors import InvalidInputError, PreconditionError
from sl3_frieze.frieze import FriezeGrid, QuiddityRows, \
    almost_continuous_at, build_plucker_frieze_map, compute_frieze, \
    diamond, extend_rows, frozen_value, parse_rendered_frieze, \
    quiddity_rows, render_frieze, validate_frieze
from sl3_frieze.mutation import ValuedFamily, oracle_values

# Width 4 frieze of period 8, rows read top to bottom
INTRO_ROWS = [[4, 3, 2, 5, 1, 4, 5, 1],
              [6, 5, 4, 3, 3, 7, 4, 2],
              [9, 8, 1, 8, 3, 4, 7, 1],
              [13, 1, 2, 6, 1, 6, 2, 1]]
INTRO_DUAL = [2, 6, 1, 6, 2, 1, 13, 1]

# A cluster whose unitary frieze is INTRO_ROWS read bottom to top
FIXTURE_TRIANGLES = [(5, 7, 8), (2, 3, 8), (3, 7, 8), (4, 5, 8), (2, 7, 8),
                     (2, 3, 5), (5, 6, 8), (3, 5, 8)]
FIXTURE_ROWS = [[6, 1, 6, 2, 1, 13, 1, 2],
                [3, 4, 7, 1, 9, 8, 1, 8],
                [7, 4, 2, 6, 5, 4, 3, 3],
                [5, 1, 4, 3, 2, 5, 1, 4]]


def _fixture_family() -> Family:
    ground = GroundSet(8)
    return Family.build(ground, frozen_triangles(ground).sorted() +
                        FIXTURE_TRIANGLES, validate=True)


def _grid(rows) -> FriezeGrid:
    return FriezeGrid(len(rows) + 4, tuple(tuple(row) for row in rows))


class TestFriezeGrid(unittest.TestCase):
    def test_border_rows(self):
        grid = _grid(INTRO_ROWS)
        self.assertEqual(grid.width, 4)
        for column in (1, 5, 9):
            self.assertEqual([grid.entry(r, column) for r in (0, 1, 2)],
                             [0, 0, 1])
            self.assertEqual([grid.entry(r, column) for r in (7, 8, 9)],
                             [1, 0, 0])
        self.assertEqual(grid.entry(3, 9), 4)
        self.assertEqual(grid.delta(2, 0), 2)

    def test_invalid_grid(self):
        with self.assertRaises(InvalidInputError):
            FriezeGrid(8, ((1, 1), (1, 1)))
        with self.assertRaises(InvalidInputError):
            FriezeGrid(4, ())
        with self.assertRaises(InvalidInputError):
            FriezeGrid(6, ((1, 2), (1,)))


class TestValidation(unittest.TestCase):
    def test_intro_frieze(self):
        report = validate_frieze(_grid(INTRO_ROWS))
        self.assertTrue(report.ok, report.failures)
        self.assertTrue(report.sl3)
        self.assertTrue(report.tame)
        self.assertTrue(report.integral)
        self.assertEqual(report.failures, [])

    def test_diamond(self):
        grid = _grid(INTRO_ROWS)
        self.assertEqual(diamond(grid, 3, 4, 1),
                         [[6, 3, 1], [9, 5, 2], [13, 8, 4]])

    def test_perturbed_frieze(self):
        rows = [list(row) for row in INTRO_ROWS]
        rows[0][0] += 1
        report = validate_frieze(_grid(rows))
        self.assertFalse(report.ok)
        self.assertFalse(report.sl3)
        self.assertIn(("sl3", 3, 1, Fraction(2)),
                      [tuple(f) for f in report.failures])

    def test_rational_frieze(self):
        rows = [[Fraction(v) for v in row] for row in INTRO_ROWS]
        rows[1][2] = Fraction(9, 2)
        report = validate_frieze(_grid(rows))
        self.assertFalse(report.integral)
        self.assertFalse(report.sl3)

    def test_non_periodic_copy(self):
        rows = [row + row for row in INTRO_ROWS]
        self.assertTrue(validate_frieze(_grid(rows)).ok)
        rows = [row + row[:3] for row in INTRO_ROWS]
        self.assertFalse(validate_frieze(_grid(rows)).periodic)

    def test_width_one_grids(self):
        for values in product((1, 2, 3), repeat=5):
            grid = FriezeGrid(5, (values,))
            report = validate_frieze(grid)
            expected = all(values[c] * values[(c + 1) % 5] *
                           values[(c + 2) % 5] - values[c] -
                           values[(c + 2) % 5] == 1 for c in range(5))
            self.assertEqual(report.sl3, expected, values)


class TestRecursion(unittest.TestCase):
    def test_extend_intro_rows(self):
        grid = extend_rows(QuiddityRows(8, INTRO_ROWS[0], INTRO_DUAL))
        self.assertEqual([list(row) for row in grid.rows], INTRO_ROWS)
        self.assertEqual(grid.delta(2, 1), 6)
        self.assertEqual(grid.delta(2, 8), 2)

    def test_inconsistent_rows(self):
        dual = list(INTRO_DUAL)
        dual[0] = 3
        with self.assertRaises(InvalidInputError):
            extend_rows(QuiddityRows(8, INTRO_ROWS[0], dual))

    def test_quiddity_length(self):
        with self.assertRaises(InvalidInputError):
            QuiddityRows(8, INTRO_ROWS[0][:7], INTRO_DUAL)
        with self.assertRaises(InvalidInputError):
            QuiddityRows(8, [0] + INTRO_ROWS[0][1:], INTRO_DUAL)


class TestAlmostContinuous(unittest.TestCase):
    def test_fixture_values(self):
        valued = ValuedFamily.all_ones(_fixture_family())
        self.assertEqual(almost_continuous_at(valued, 3), (6, 3))
        self.assertEqual(almost_continuous_at(valued, 5), (6, 5))

    def test_fixture_frieze(self):
        grid = compute_frieze(ValuedFamily.all_ones(_fixture_family()))
        self.assertEqual([list(row) for row in grid.rows], FIXTURE_ROWS)
        self.assertTrue(validate_frieze(grid).ok)
        for k in range(1, 5):
            for i in range(1, 9):
                self.assertEqual(grid.delta(k, i),
                                 INTRO_ROWS[4 - k][(i + k - 7) % 8])

    def test_matches_oracle(self):
        for n, count in ((6, 6), (7, 4), (8, 2)):
            ground = GroundSet(n)
            for seed in range(count):
                valued = ValuedFamily.all_ones(
                    random_maximal_family(ground, 2 * n, seed))
                targets = {}
                for x in ground.points:
                    m2, m1, p1, p2 = (ground.wrap(x + k)
                                      for k in (-2, -1, 1, 2))
                    targets[x] = (Triangle.of(m2, m1, p1),
                                  Triangle.of(m1, p1, p2))
                expected = oracle_values(valued, [t for pair in
                                                  targets.values()
                                                  for t in pair])
                for x, (low, high) in targets.items():
                    self.assertEqual(almost_continuous_at(valued, x),
                                     (expected[low], expected[high]))

    def test_requires_unitary(self):
        family = _fixture_family()
        values = {t: 1 for t in family.triangles}
        values[Triangle(3, 5, 8)] = 2
        valued = ValuedFamily(family, values)
        with self.assertRaises(PreconditionError):
            almost_continuous_at(valued, 3)
        with self.assertRaises(PreconditionError):
            quiddity_rows(valued)


class TestPluckerFrieze(unittest.TestCase):
    def test_frieze_map(self):
        n = 8
        mapping = build_plucker_frieze_map(n)
        for column in range(1, n + 1):
            for row in (0, 1, n, n + 1):
                self.assertEqual(frozen_value(mapping[(row, column)], n), 0)
            for row in (2, n - 1):
                self.assertEqual(frozen_value(mapping[(row, column)], n), 1)
            for row in range(3, n - 1):
                self.assertIsNone(frozen_value(mapping[(row, column)], n))
        self.assertEqual(mapping[(3, 1)], (1, 2, 4))
        self.assertEqual(mapping[(4, 7)], (7, 8, 3))

    def test_frieze_matches_oracle(self):
        for n, count in ((6, 4), (7, 3), (8, 1)):
            ground = GroundSet(n)
            mapping = build_plucker_frieze_map(n)
            for seed in range(count):
                valued = ValuedFamily.all_ones(
                    random_maximal_family(ground, 3 * n, seed))
                grid = compute_frieze(valued)
                report = validate_frieze(grid)
                self.assertTrue(report.ok, report.failures)
                self.assertTrue(report.integral)
                positions = [(row, column) for row in range(3, n - 1)
                             for column in ground.points]
                triangles = {p: Triangle.of(*mapping[p]) for p in positions}
                expected = oracle_values(valued, set(triangles.values()))
                for (row, column), triangle in triangles.items():
                    self.assertEqual(grid.entry(row, column),
                                     expected[triangle])
                    self.assertGreater(grid.entry(row, column), 0)
                    if triangle in valued.family:
                        self.assertEqual(grid.entry(row, column), 1)

    def test_dual_identity(self):
        for n in (6, 7):
            ground = GroundSet(n)
            valued = ValuedFamily.all_ones(random_maximal_family(ground,
                                                                 12, 5))
            grid = compute_frieze(valued)
            duals = {(k, i): Triangle.of(i, ground.wrap(i + k + 1),
                                         ground.wrap(i + k + 2))
                     for k in range(1, n - 3) for i in ground.points}
            expected = oracle_values(valued, set(duals.values()))
            for (k, i), triangle in duals.items():
                self.assertEqual(grid.delta(n - 3 - k, i + k + 1),
                                 expected[triangle])


class TestRender(unittest.TestCase):
    def test_render_intro(self):
        text = render_frieze(_grid(INTRO_ROWS))
        lines = text.splitlines()
        self.assertEqual(len(lines), 10)
        self.assertEqual(lines[0].split(), ["0"] * 8)
        self.assertEqual(lines[2].split(), ["1"] * 8)
        self.assertEqual([[int(v) for v in line.split()]
                          for line in lines[3:7]], INTRO_ROWS)
        self.assertEqual(lines[7].split(), ["1"] * 8)
        indents = [len(line) - len(line.lstrip()) for line in lines]
        self.assertEqual(indents, sorted(indents))
        self.assertEqual(indents[0], 0)
        self.assertTrue(lines[0].startswith("0"))

    def test_render_width_one(self):
        text = render_frieze(FriezeGrid(5, ((1, 3, 1, 3, 1),)))
        lines = text.splitlines()
        self.assertEqual(len(lines), 7)
        self.assertEqual(lines[3].split(), ["1", "3", "1", "3", "1"])

    def test_parse_rendered(self):
        grid = _grid(INTRO_ROWS)
        self.assertEqual(parse_rendered_frieze(render_frieze(grid)), grid)
        with self.assertRaises(InvalidInputError):
            parse_rendered_frieze("1 2\n3 4")
        broken = render_frieze(grid).replace("0", "5", 1)
        with self.assertRaises(InvalidInputError):
            parse_rendered_frieze(broken)

    def test_render_labels(self):
        text = render_frieze(_grid(INTRO_ROWS), label_triples=True)
        lines = text.splitlines()
        self.assertEqual(lines[3].split()[0], "1,2,4")
        self.assertEqual(lines[2].split()[7], "8,1,2")


if __name__ == '__main__':
    unittest.main()
