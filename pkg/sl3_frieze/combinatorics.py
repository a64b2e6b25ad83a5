# NEON AI (TM) SOFTWARE, Software Development Kit & Application Development System
# All trademark and other rights reserved by their respective owners
# Copyright 2008-2024 Neongecko.com Inc.
# BSD-3
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

"""
Cyclic order on [n], triangles (3-subsets of [n]) and weak separation of
families of triangles.
"""

import random

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import FrozenSet, Iterable, Iterator, List, NamedTuple, \
    Optional, Sequence, Tuple

from ovos_utils.log import LOG

from sl3_frieze.errors import InternalConsistencyError, InvalidInputError

MIN_GROUND_SIZE = 6


@dataclass(frozen=True)
class GroundSet:
    """The points 1..n, arranged on a circle."""
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise InvalidInputError(f"n must be an integer, got {self.n!r}")
        if self.n < MIN_GROUND_SIZE:
            raise InvalidInputError(f"n must be at least {MIN_GROUND_SIZE}, "
                                    f"got {self.n}")

    @property
    def points(self) -> range:
        return range(1, self.n + 1)

    def wrap(self, index: int) -> int:
        """Map any integer into 1..n modulo n."""
        return (index - 1) % self.n + 1

    def check(self, *indices: int):
        for index in indices:
            if isinstance(index, bool) or not isinstance(index, int) or \
                    not 1 <= index <= self.n:
                raise InvalidInputError(f"Index {index!r} out of range "
                                        f"1..{self.n}")


class Triangle(NamedTuple):
    a: int
    b: int
    c: int

    @classmethod
    def of(cls, *points: int, ground: Optional[GroundSet] = None) \
            -> 'Triangle':
        """
        Build a triangle from three distinct points in any order.
        :param points: the three indices
        :param ground: if given, indices are range-checked against it
        """
        if len(points) == 1 and not isinstance(points[0], int):
            points = tuple(points[0])
        if len(points) != 3 or len(set(points)) != 3:
            raise InvalidInputError(f"A triangle needs three distinct points, "
                                    f"got {points}")
        if ground:
            ground.check(*points)
        return cls(*sorted(points))

    def __str__(self):
        return f"{{{self.a},{self.b},{self.c}}}"


@dataclass(frozen=True)
class Family:
    ground: GroundSet
    triangles: FrozenSet[Triangle]
    is_validated: bool = field(default=False, compare=False)

    @classmethod
    def build(cls, ground: GroundSet, triangles: Iterable[Sequence[int]],
              validate: bool = False) -> 'Family':
        """
        Build a family from index triples.
        :param ground: ground set the triangles live in
        :param triangles: iterable of index triples, duplicates rejected
        :param validate: if True, check pairwise weak separation and raise
            InvalidInputError naming a crossing pair
        """
        built = [Triangle.of(*t, ground=ground) for t in triangles]
        unique = frozenset(built)
        if len(unique) != len(built):
            raise InvalidInputError("Family contains duplicate triangles")
        family = cls(ground, unique)
        if validate:
            report = is_weakly_separated_family(family)
            if not report.ok:
                first, second = report.pair
                raise InvalidInputError(f"Triangles {first} and {second} cross")
            family = cls(ground, unique, True)
        return family

    @property
    def n(self) -> int:
        return self.ground.n

    def sorted(self) -> List[Triangle]:
        return sorted(self.triangles)

    def __contains__(self, item) -> bool:
        return item in self.triangles

    def __iter__(self) -> Iterator[Triangle]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.triangles)


class SeparationReport(NamedTuple):
    ok: bool
    pair: Optional[Tuple[Triangle, Triangle]] = None


def _is_cyclic(points: Sequence[int]) -> bool:
    # exactly one cyclic descent <=> a rotation of an ascending tuple
    descents = sum(1 for i in range(len(points))
                   if points[i] > points[(i + 1) % len(points)])
    return descents <= 1


def cyclically_ordered(points: Sequence[int], ground: GroundSet) -> bool:
    """
    Check whether `points` is ascending up to a single rotation.
    :param points: at least three pairwise distinct indices
    :param ground: ground set the indices belong to
    :returns: True if the tuple is cyclically ordered
    """
    if len(points) < 3:
        raise InvalidInputError(f"Need at least three points, got {points}")
    if len(set(points)) != len(points):
        raise InvalidInputError(f"Points must be distinct, got {points}")
    ground.check(*points)
    return _is_cyclic(points)


def interval(a: int, b: int, ground: GroundSet, closed_left: bool = False,
             closed_right: bool = False) -> List[int]:
    """
    Points x with (a, x, b) cyclically ordered, listed starting after `a`.
    :param a: left endpoint
    :param b: right endpoint, distinct from `a`
    :param ground: ground set
    :param closed_left: include `a`
    :param closed_right: include `b`
    """
    ground.check(a, b)
    if a == b:
        raise InvalidInputError(f"Interval endpoints must differ, got {a}")
    points = [a] if closed_left else []
    point = ground.wrap(a + 1)
    while point != b:
        points.append(point)
        point = ground.wrap(point + 1)
    if closed_right:
        points.append(b)
    return points


def less_x(x: int, a: int, b: int,
           ground: Optional[GroundSet] = None) -> bool:
    """True iff a <_x b, i.e. (x, a, b) is cyclically ordered."""
    if len({x, a, b}) != 3:
        raise InvalidInputError(f"less_x needs distinct points, "
                                f"got x={x}, a={a}, b={b}")
    if ground:
        ground.check(x, a, b)
    return _is_cyclic((x, a, b))


def sort_by_less_x(points: Iterable[int], x: int,
                   ground: GroundSet) -> List[int]:
    points = list(points)
    if x in points:
        raise InvalidInputError(f"{x} cannot be ordered by <_{x}")
    return sorted(points, key=lambda p: (p - x) % ground.n)


def crossing_definition(first: Triangle, second: Triangle) -> bool:
    """
    Exhaustive crossing test: a, c in first \\ second and b, d in
    second \\ first with (a, b, c, d) cyclically ordered.
    """
    first_only = [p for p in first if p not in second]
    second_only = [p for p in second if p not in first]
    for a, c in permutations(first_only, 2):
        for b, d in permutations(second_only, 2):
            if _is_cyclic((a, b, c, d)):
                return True
    return False


def _meets(triangle: Triangle, low: int, high: int) -> bool:
    # open interval (low, high) with low < high, no wraparound
    return any(low < p < high for p in triangle)


def _meets_wrapped(triangle: Triangle, high: int, low: int) -> bool:
    # open interval (high, low) going through n -> 1
    return any(p > high or p < low for p in triangle)


def crossing_cases(first: Triangle, second: Triangle) -> bool:
    """
    Crossing test by cases on the three arcs cut out by `first`: the
    triangles cross iff `second` meets two arcs without containing the
    vertex of `first` shared by those arcs.
    """
    a, b, c = first
    in_ab = _meets(second, a, b)
    in_bc = _meets(second, b, c)
    in_ca = _meets_wrapped(second, c, a)
    return (in_ab and in_bc and b not in second) or \
        (in_ab and in_ca and a not in second) or \
        (in_bc and in_ca and c not in second)


def is_weakly_separated_family(family: Family) -> SeparationReport:
    """
    Check that no two triangles of `family` cross.
    :param family: family to check
    :returns: report with the first crossing pair (in sorted order), if any
    """
    for first, second in combinations(family.sorted(), 2):
        if crossing_cases(first, second):
            return SeparationReport(False, (first, second))
    return SeparationReport(True)


def addable_triangles(family: Family) -> List[Triangle]:
    """Triangles outside `family` that are weakly separated from all of it."""
    return [t for t in (Triangle(*p) for p in
                        combinations(family.ground.points, 3))
            if t not in family and
            not any(crossing_cases(t, other) for other in family.triangles)]


def maximal_size(ground: GroundSet) -> int:
    return 3 * ground.n - 8


def is_maximal_family(family: Family, diagnostic: bool = False) -> bool:
    """
    Check maximality of a weakly separated family by its cardinality.
    :param family: weakly separated family
    :param diagnostic: also scan for addable triangles and raise if the
        scan disagrees with the cardinality test
    :returns: True if |family| == 3n - 8
    """
    if not family.is_validated:
        report = is_weakly_separated_family(family)
        if not report.ok:
            raise InvalidInputError(f"Family is not weakly separated: "
                                    f"{report.pair[0]} crosses "
                                    f"{report.pair[1]}")
    maximal = len(family) == maximal_size(family.ground)
    if diagnostic:
        LOG.info("Scanning all triangles for maximality check")
        addable = addable_triangles(family)
        if maximal == bool(addable):
            raise InternalConsistencyError(
                f"|F|={len(family)} but {len(addable)} triangles are addable")
    return maximal


def frozen_triangles(ground: GroundSet) -> Family:
    """The continuous triangles {i, i+1, i+2}."""
    triangles = frozenset(Triangle.of(i, ground.wrap(i + 1), ground.wrap(i + 2))
                          for i in ground.points)
    return Family(ground, triangles, True)


def greedy_complete(family: Family) -> Family:
    """
    Extend a weakly separated family to a maximal one by adding the
    lexicographically smallest compatible triangle until none is left.
    """
    if not family.is_validated:
        report = is_weakly_separated_family(family)
        if not report.ok:
            raise InvalidInputError(f"Cannot complete a crossing family: "
                                    f"{report.pair[0]} crosses "
                                    f"{report.pair[1]}")
    triangles = set(family.triangles)
    # triangles rejected once stay rejected, so one lexicographic pass suffices
    for points in combinations(family.ground.points, 3):
        candidate = Triangle(*points)
        if candidate in triangles:
            continue
        if not any(crossing_cases(candidate, t) for t in triangles):
            triangles.add(candidate)
    if len(triangles) != maximal_size(family.ground):
        raise InternalConsistencyError(f"Completion has {len(triangles)} "
                                       f"triangles, expected "
                                       f"{maximal_size(family.ground)}")
    LOG.debug(f"Completed {len(family)} to {len(triangles)} triangles")
    return Family(family.ground, frozenset(triangles), True)


def random_maximal_family(ground: GroundSet, steps: int = 0,
                          seed: int = 0) -> Family:
    """
    Generate a maximal family by random mutations of the canonical one.
    :param ground: ground set
    :param steps: number of uniformly chosen mutations to apply
    :param seed: random seed; equal seeds give equal families
    :returns: maximal weakly separated family
    """
    from sl3_frieze.mutation import apply_move, available_moves
    if steps < 0:
        raise InvalidInputError(f"steps must be non-negative, got {steps}")
    rng = random.Random(seed)
    family = greedy_complete(frozen_triangles(ground))
    for _ in range(steps):
        moves = available_moves(family)
        if not moves:
            break
        family = apply_move(family, rng.choice(moves))
    return family
