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
import random
import sys
import unittest

sys.path.append(os.path.dirname(os.path.dirname(os.path.realpath(__file__))))
from sl3_frieze.combinatorics import Family, GroundSet, Triangle, \
    is_maximal_family, is_weakly_separated_family, random_maximal_family
from sl3_frieze.frieze import almost_continuous_at, \
    build_plucker_frieze_map, compute_frieze, validate_frieze
from sl3_frieze.mutation import ValuedFamily, available_moves, mutate, \
    oracle_values

# Full-size corpora; these take a few minutes in total


def _corpus(n: int, count: int):
    ground = GroundSet(n)
    for seed in range(count):
        yield ValuedFamily.all_ones(random_maximal_family(ground, 3 * n,
                                                          seed))


def _almost_continuous_triples(ground: GroundSet, x: int):
    m2, m1, p1, p2 = (ground.wrap(x + k) for k in (-2, -1, 1, 2))
    return Triangle.of(m2, m1, p1), Triangle.of(m1, p1, p2)


class TestFriezeCorpus(unittest.TestCase):
    def _check_grid(self, valued: ValuedFamily, positions):
        ground = valued.family.ground
        n = ground.n
        grid = compute_frieze(valued)
        report = validate_frieze(grid)
        self.assertTrue(report.ok, report.failures)
        self.assertTrue(report.integral)
        mapping = build_plucker_frieze_map(n)
        entries = {p: Triangle.of(*mapping[p]) for p in positions}
        return grid, entries

    def test_small_families(self):
        for n in (6, 7, 8):
            ground = GroundSet(n)
            positions = [(row, column) for row in range(3, n - 1)
                         for column in ground.points]
            for valued in _corpus(n, 50):
                grid, entries = self._check_grid(valued, positions)
                ends = {x: _almost_continuous_triples(ground, x)
                        for x in ground.points}
                duals = {(k, i): Triangle.of(i, ground.wrap(i + k + 1),
                                             ground.wrap(i + k + 2))
                         for k in range(1, n - 3) for i in ground.points}
                expected = oracle_values(
                    valued, set(entries.values()) | set(duals.values()) |
                    {t for pair in ends.values() for t in pair})
                for x, (low, high) in ends.items():
                    self.assertEqual(almost_continuous_at(valued, x),
                                     (expected[low], expected[high]))
                for (row, column), triangle in entries.items():
                    value = grid.entry(row, column)
                    self.assertEqual(value, expected[triangle])
                    self.assertGreater(value, 0)
                    self.assertEqual(value.denominator, 1)
                for (k, i), triangle in duals.items():
                    self.assertEqual(grid.delta(n - 3 - k, i + k + 1),
                                     expected[triangle])

    def test_large_families(self):
        for n in (9, 10):
            ground = GroundSet(n)
            all_positions = [(row, column) for row in range(3, n - 1)
                             for column in ground.points]
            for seed, valued in enumerate(_corpus(n, 5)):
                positions = random.Random(seed).sample(all_positions, 20)
                grid, entries = self._check_grid(valued, positions)
                expected = oracle_values(valued, set(entries.values()),
                                         budget=10 ** 6)
                for (row, column), triangle in entries.items():
                    self.assertEqual(grid.entry(row, column),
                                     expected[triangle])


class TestMutationClosure(unittest.TestCase):
    def test_random_moves(self):
        rng = random.Random(2024)
        checked = 0
        while checked < 10 ** 4:
            n = rng.randint(6, 10)
            valued = ValuedFamily.all_ones(random_maximal_family(
                GroundSet(n), 2 * n, rng.randrange(2 ** 16)))
            for _ in range(50):
                move = rng.choice(available_moves(valued.family))
                mutated = mutate(valued, move)
                self.assertEqual(mutate(mutated, move.inverse()), valued)
                family = Family(mutated.family.ground,
                                mutated.family.triangles)
                self.assertTrue(is_weakly_separated_family(family).ok)
                self.assertTrue(is_maximal_family(family))
                valued = mutated
                checked += 1


if __name__ == '__main__':
    unittest.main()
