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

from itertools import combinations

sys.path.append(os.path.dirname(os.path.dirname(os.path.realpath(__file__))))
from sl3_frieze.combinatorics import Family, GroundSet, Triangle, \
    frozen_triangles, greedy_complete, interval, random_maximal_family
from sl3_frieze.errors import ConditionViolation, InvalidInputError
from sl3_frieze.structure import StarGraph, border_triangles, \
    build_star_graph, check_converse_conditions, precedes_x, \
    realize_star_graph, star_interval, star_subfamily, \
    verify_structure_theorem

G6 = GroundSet(6)
G7 = GroundSet(7)
G8 = GroundSet(8)


def _corpus(n: int, count: int):
    ground = GroundSet(n)
    return [random_maximal_family(ground, 3 * n, seed)
            for seed in range(count)]


class TestStarGraph(unittest.TestCase):
    def test_star_subfamily(self):
        star = star_subfamily(frozen_triangles(G6), 1)
        self.assertEqual(star.sorted(), [(1, 2, 3), (1, 2, 6), (1, 5, 6)])

    def test_from_edges_rejects_center(self):
        with self.assertRaises(InvalidInputError):
            StarGraph.from_edges(1, G6, [(1, 2)])
        with self.assertRaises(InvalidInputError):
            StarGraph.from_edges(1, G6, [(2, 2)])
        with self.assertRaises(InvalidInputError):
            StarGraph.from_edges(1, G6, [(2, 9)])

    def test_classification(self):
        graph = StarGraph.from_edges(1, G8, [(2, 3), (2, 8), (7, 8), (3, 8),
                                             (3, 4)])
        self.assertEqual(graph.triangulation_points, (2, 3, 8))
        self.assertEqual(graph.leaves, {4: 3, 7: 8})
        self.assertEqual(graph.incident_points(3), [2, 4, 8])
        self.assertEqual(graph.incident_points(2), [8, 3])
        self.assertEqual(graph.incident_points(8), [3, 7, 2])
        with self.assertRaises(InvalidInputError):
            graph.incident_points(4)

    def test_build_requires_maximal(self):
        with self.assertRaises(InvalidInputError):
            build_star_graph(frozen_triangles(G6), 1)

    def test_border_triples_without_leaves(self):
        graph = StarGraph.from_edges(1, G6, [(2, 3), (3, 4), (4, 5), (5, 6),
                                             (2, 6), (2, 4), (2, 5)])
        self.assertEqual(graph.border_triples(),
                         [(2, 3, 4), (3, 4, 5), (4, 5, 6)])


class TestStructureTheorem(unittest.TestCase):
    def test_sweep(self):
        for n, count in ((6, 200), (7, 200), (8, 200), (9, 200)):
            ground = GroundSet(n)
            for family in _corpus(n, count):
                for x in ground.points:
                    graph = build_star_graph(family, x)
                    report = verify_structure_theorem(graph)
                    self.assertTrue(report.ok, report.violations)
                    points = graph.triangulation_points
                    self.assertEqual(points[0], ground.wrap(x + 1))
                    self.assertEqual(points[-1], ground.wrap(x - 1))
                    self.assertIn(ground.wrap(x + 2), graph.vertices)
                    self.assertIn(ground.wrap(x - 2), graph.vertices)
                    for triangle in border_triangles(family, x):
                        self.assertIn(triangle, family)

    def test_crossing_chords_reported(self):
        graph = StarGraph.from_edges(1, G8, [(2, 3), (3, 4), (4, 5), (5, 8),
                                             (2, 8), (2, 4), (3, 5)])
        report = verify_structure_theorem(graph)
        self.assertFalse(report.ok)
        self.assertTrue(any(rule == "triangulation" and "cross" in witness
                            for rule, witness in report.violations))

    def test_adjacent_leaves_reported(self):
        graph = StarGraph.from_edges(1, G8, [(2, 8), (2, 3), (7, 8), (5, 6)])
        report = verify_structure_theorem(graph)
        self.assertFalse(report.ok)
        self.assertIn("leaf", [rule for rule, _ in report.violations])

    def test_nesting_lemmas(self):
        for n in (7, 8):
            ground = GroundSet(n)
            for family in _corpus(n, 10):
                for x in ground.points:
                    star = star_subfamily(family, x).sorted()
                    for first in star:
                        for second in star:
                            if not precedes_x(first, second, x, ground):
                                continue
                            if first != second and not star_interval(
                                    family, first, second, x):
                                self.assertGreaterEqual(
                                    len(set(first) & set(second)), 2)
                            self._check_new_triangle(family, x, first,
                                                     second)

    def _check_new_triangle(self, family: Family, x: int, outer: Triangle,
                            inner: Triangle):
        ground = family.ground
        a, b = self._ends(outer, x, ground)
        c, d = self._ends(inner, x, ground)
        if len({a, b, c, d}) != 4:
            return
        candidates = interval(a, c, ground, closed_right=True) + \
            interval(d, b, ground, closed_left=True)
        self.assertTrue(any(Triangle.of(x, a, y) in family and
                            Triangle.of(x, y, b) in family
                            for y in candidates),
                        f"x={x} {outer} {inner}")

    @staticmethod
    def _ends(triangle: Triangle, x: int, ground: GroundSet):
        return sorted((p for p in triangle if p != x),
                      key=lambda p: (p - x) % ground.n)

    def test_precedes(self):
        outer = Triangle.of(1, 2, 6)
        inner = Triangle.of(1, 3, 5)
        self.assertTrue(precedes_x(outer, inner, 1, G6))
        self.assertFalse(precedes_x(inner, outer, 1, G6))
        self.assertTrue(precedes_x(outer, outer, 1, G6))
        self.assertFalse(precedes_x(outer, outer, 1, G6, strict=True))
        with self.assertRaises(InvalidInputError):
            precedes_x(outer, Triangle.of(2, 3, 4), 1, G6)


class TestConverse(unittest.TestCase):
    def test_round_trip(self):
        for n, count in ((6, 20), (7, 20), (8, 15)):
            ground = GroundSet(n)
            for family in _corpus(n, count):
                for x in ground.points:
                    graph = build_star_graph(family, x)
                    self.assertEqual(check_converse_conditions(graph), [])
                    realized = realize_star_graph(graph)
                    self.assertEqual(len(realized), 3 * n - 8)
                    self.assertEqual(build_star_graph(realized, x), graph)

    def test_missing_frozen_edge(self):
        graph = StarGraph.from_edges(1, G7, [(2, 4), (4, 7), (2, 7), (3, 4),
                                             (6, 7)])
        conditions = [c for c, _ in check_converse_conditions(graph)]
        self.assertEqual(conditions, ["(v)"])
        with self.assertRaises(ConditionViolation) as context:
            realize_star_graph(graph)
        self.assertEqual(context.exception.condition, "(v)")

    def test_path_is_not_a_triangulation(self):
        graph = StarGraph.from_edges(1, G6, [(2, 3), (3, 4), (4, 5), (5, 6)])
        with self.assertRaises(ConditionViolation) as context:
            realize_star_graph(graph)
        self.assertEqual(context.exception.condition, "(i)")

    def test_canonical_family(self):
        family = greedy_complete(frozen_triangles(G8))
        for x in G8.points:
            graph = build_star_graph(family, x)
            realized = realize_star_graph(graph)
            self.assertTrue(frozen_triangles(G8).triangles <=
                            realized.triangles)
            self.assertEqual(build_star_graph(realized, x), graph)


if __name__ == '__main__':
    unittest.main()
