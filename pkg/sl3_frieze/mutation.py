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

import re

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, \
    Optional, Union

from ovos_utils.log import LOG

from sl3_frieze.combinatorics import Family, Triangle, cyclically_ordered
from sl3_frieze.errors import InternalConsistencyError, InvalidInputError, \
    InvalidMoveError, OracleBudgetExceeded, PreconditionError
from sl3_frieze.structure import build_star_graph
from sl3_frieze.util import format_rational, get_oracle_budget, \
    parse_rational

Rational = Union[Fraction, int]


class MutationMove(NamedTuple):
    """
    Scott move at z: with {z,a,b}, {z,b,c}, {z,c,d}, {z,d,a} and {z,a,c}
    in the family, {z,a,c} is exchanged for {z,b,d}.
    """
    z: int
    a: int
    b: int
    c: int
    d: int

    @property
    def removed(self) -> Triangle:
        return Triangle.of(self.z, self.a, self.c)

    @property
    def added(self) -> Triangle:
        return Triangle.of(self.z, self.b, self.d)

    @property
    def required(self) -> List[Triangle]:
        z, a, b, c, d = self
        return [Triangle.of(z, a, b), Triangle.of(z, b, c),
                Triangle.of(z, c, d), Triangle.of(z, d, a), self.removed]

    def inverse(self) -> 'MutationMove':
        z, a, b, c, d = self
        return MutationMove(z, b, c, d, a)

    def __str__(self):
        return f"{self.z}:({self.a},{self.b},{self.c},{self.d})"


@dataclass(frozen=True)
class ValuedFamily:
    family: Family
    values: Mapping[Triangle, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "values", {t: Fraction(v) for t, v in
                                            self.values.items()})
        if set(self.values) != set(self.family.triangles):
            raise InvalidInputError("Values must be given for exactly the "
                                    "triangles of the family")
        zeros = [str(t) for t, v in self.values.items() if v == 0]
        if zeros:
            raise InvalidInputError(f"Zero values on {', '.join(zeros)}")

    @classmethod
    def all_ones(cls, family: Family) -> 'ValuedFamily':
        """The specialization of `family` to 1."""
        return cls(family, {t: Fraction(1) for t in family.triangles})

    def __getitem__(self, triangle: Triangle) -> Fraction:
        return self.values[triangle]

    def __contains__(self, item) -> bool:
        return item in self.family

    def __iter__(self) -> Iterator[Triangle]:
        return iter(self.family)

    def __len__(self) -> int:
        return len(self.family)

    def value(self, *points: int) -> Fraction:
        return self.values[Triangle.of(*points)]


def exchange_value(v_zac: Rational, v_zab: Rational, v_zcd: Rational,
                   v_zad: Rational, v_zbc: Rational) -> Fraction:
    """
    Value of {z,b,d} forced by the 3-term Plucker relation
    v(zac) v(zbd) = v(zab) v(zcd) + v(zad) v(zbc).
    """
    if v_zac == 0:
        raise ZeroDivisionError("Exchange relation has a zero pivot")
    return (Fraction(v_zab) * Fraction(v_zcd) +
            Fraction(v_zad) * Fraction(v_zbc)) / Fraction(v_zac)


def _check_move(family: Family, move: MutationMove):
    ground = family.ground
    ground.check(*move)
    if len(set(move)) != 5:
        raise InvalidInputError(f"Move {move} needs five distinct points")
    if not cyclically_ordered(move[1:], ground):
        raise InvalidInputError(f"({move.a},{move.b},{move.c},{move.d}) is "
                                f"not cyclically ordered")
    missing = [str(t) for t in move.required if t not in family]
    if missing:
        raise InvalidMoveError(f"Move {move} needs {', '.join(missing)}")
    if move.added in family:
        raise InvalidMoveError(f"Move {move} would add {move.added}, which "
                               f"is already present")


def apply_move(family: Family, move: MutationMove) -> Family:
    """Exchange {z,a,c} for {z,b,d} without tracking values."""
    _check_move(family, move)
    triangles = (family.triangles - {move.removed}) | {move.added}
    return Family(family.ground, triangles, True)


def mutate(valued: ValuedFamily, move: MutationMove) -> ValuedFamily:
    """
    Apply a Scott move and compute the value of the new triangle.
    :param valued: valued maximal family
    :param move: move to apply
    :returns: mutated valued family
    """
    family = apply_move(valued.family, move)
    z, a, b, c, d = move
    value = exchange_value(valued.value(z, a, c), valued.value(z, a, b),
                           valued.value(z, c, d), valued.value(z, a, d),
                           valued.value(z, b, c))
    values = dict(valued.values)
    del values[move.removed]
    values[move.added] = value
    LOG.debug(f"{move}: {move.removed} -> {move.added} = {value}")
    return ValuedFamily(family, values)


def available_moves(family: Family) -> List[MutationMove]:
    """
    All Scott moves applicable to `family`, one per exchanged pair, sorted
    by (z, a, b, c, d).
    """
    neighbours: Dict[int, Dict[int, set]] = {}
    for triangle in family.triangles:
        for z in triangle:
            a, c = (p for p in triangle if p != z)
            star = neighbours.setdefault(z, {})
            star.setdefault(a, set()).add(c)
            star.setdefault(c, set()).add(a)
    moves: Dict[tuple, MutationMove] = {}
    for triangle in family.sorted():
        for z in triangle:
            a, c = (p for p in triangle if p != z)
            common = neighbours[z][a] & neighbours[z][c]
            inner = sorted(p for p in common if a < p < c)
            outer = sorted(p for p in common if p > c or p < a)
            for b in inner:
                for d in outer:
                    move = MutationMove(z, a, b, c, d)
                    if move.added in family:
                        continue
                    key = (move.removed, move.added)
                    if key not in moves or move < moves[key]:
                        moves[key] = move
    return sorted(moves.values())


def is_unitary_in(valued: ValuedFamily, x: int) -> Optional[Fraction]:
    """
    :returns: the common value of all triangles through x, or None if
        they differ
    """
    values = {v for t, v in valued.values.items() if x in t}
    return values.pop() if len(values) == 1 else None


def _require_unitary(valued: ValuedFamily, x: int):
    if is_unitary_in(valued, x) is None:
        raise PreconditionError(f"Values are not unitary in {x}")


def remove_leaf(valued: ValuedFamily, x: int, point: int, q1: int, q2: int,
                q3: int) -> ValuedFamily:
    """
    Remove the leaf q2 of the triangulation point `point` from the star
    graph at x, exchanging {x, point, q2} for {point, q1, q3}.
    :param valued: valued family, unitary in x
    :param x: center of the star graph
    :param point: triangulation point the leaf hangs off
    :param q1: incident point before q2
    :param q2: the leaf to remove; must not be x-2 or x+2
    :param q3: incident point after q2
    :returns: mutated family with v{point,q1,q3} = v{point,q1,q2} +
        v{point,q2,q3}
    """
    ground = valued.family.ground
    ground.check(x, point, q1, q2, q3)
    if q2 in (ground.wrap(x - 2), ground.wrap(x + 2)):
        raise InvalidMoveError(f"Leaf {q2} is frozen at {x}")
    _require_unitary(valued, x)
    graph = build_star_graph(valued.family, x)
    if graph.leaves.get(q2) != point:
        raise InvalidMoveError(f"{q2} is not a leaf of {point}")
    incident = graph.incident_points(point)
    i = incident.index(q2)
    if incident[i - 1] != q1 or incident[i + 1] != q3:
        raise InvalidMoveError(f"{q1} and {q3} do not flank leaf {q2} of "
                               f"{point}")
    return mutate(valued, MutationMove(point, x, q1, q2, q3))


def contract_degree2(valued: ValuedFamily, x: int, point: int,
                     side: str) -> ValuedFamily:
    """
    Cut a degree-2 triangulation point P_i off the star graph at x.
    Left: exchange {x, P_(i-1), P_i} for {Q1, P_(i-1), P_(i+1)}.
    Right: exchange {x, P_i, P_(i+1)} for {P_(i-1), P_(i+1), Q2}.
    :param side: "left" or "right"
    """
    ground = valued.family.ground
    ground.check(x, point)
    if side not in ("left", "right"):
        raise InvalidInputError(f"side must be 'left' or 'right', got {side}")
    if point in (ground.wrap(x - 1), ground.wrap(x + 1)):
        raise InvalidMoveError(f"{point} is an end of the triangulation")
    if side == "left" and point == ground.wrap(x + 2):
        raise InvalidMoveError(f"Cannot contract {point} to the left")
    if side == "right" and point == ground.wrap(x - 2):
        raise InvalidMoveError(f"Cannot contract {point} to the right")
    _require_unitary(valued, x)
    graph = build_star_graph(valued.family, x)
    points = graph.triangulation_points
    if point not in points or graph.degree(point) != 2:
        raise InvalidMoveError(f"{point} is not a triangulation point of "
                               f"degree 2")
    i = points.index(point)
    before, after = points[i - 1], points[(i + 1) % len(points)]
    if side == "left":
        q1 = graph.incident_points(before)[-2]
        move = MutationMove(before, x, q1, point, after)
    else:
        q2 = graph.incident_points(after)[1]
        move = MutationMove(after, x, before, point, q2)
    return mutate(valued, move)


def oracle_values(valued: ValuedFamily, targets: Iterable[Triangle],
                  budget: Optional[int] = None,
                  reverse_tie_break: bool = False) -> Dict[Triangle, Fraction]:
    """
    Evaluate triangles by breadth-first search over Scott mutations.
    :param valued: starting valued maximal family, all values nonzero
    :param targets: triangles to evaluate
    :param budget: maximum number of family expansions
    :param reverse_tie_break: explore moves in reverse lexicographic order
    :returns: dict of target triangle to value
    """
    budget = get_oracle_budget(budget)
    targets = set(targets)
    for target in targets:
        valued.family.ground.check(*target)
    table = dict(valued.values)
    pending = targets - set(table)
    if not pending:
        return {t: table[t] for t in targets}
    queue = deque([valued])
    seen = {valued.family.triangles}
    expansions = 0
    while queue:
        if expansions >= budget:
            raise OracleBudgetExceeded(budget, expansions,
                                       ", ".join(map(str, sorted(pending))))
        current = queue.popleft()
        expansions += 1
        moves = available_moves(current.family)
        if reverse_tie_break:
            moves.reverse()
        for move in moves:
            z, a, b, c, d = move
            value = exchange_value(current.value(z, a, c),
                                   current.value(z, a, b),
                                   current.value(z, c, d),
                                   current.value(z, a, d),
                                   current.value(z, b, c))
            known = table.get(move.added)
            if known is not None and known != value:
                LOG.error(f"{move.added} reached with {known} and {value}")
                raise InternalConsistencyError(
                    f"Path-dependent value for {move.added}: {known} != "
                    f"{value}")
            table[move.added] = value
            pending.discard(move.added)
            if not pending:
                LOG.debug(f"Oracle resolved {len(targets)} targets after "
                          f"{expansions} expansions")
                return {t: table[t] for t in targets}
            key = (current.family.triangles - {move.removed}) | {move.added}
            if key not in seen:
                seen.add(key)
                queue.append(mutate(current, move))
    raise InternalConsistencyError(f"Mutation graph exhausted without "
                                   f"reaching {sorted(pending)}")


def oracle_value(valued: ValuedFamily, target: Triangle,
                 budget: Optional[int] = None,
                 reverse_tie_break: bool = False) -> Fraction:
    return oracle_values(valued, [target], budget, reverse_tie_break)[target]


class TraceLine(NamedTuple):
    move: MutationMove
    value: Fraction

    def __str__(self):
        return format_trace_line(self.move, self.value)


_TRACE_PATTERN = re.compile(
    r"^\s*(\d+):\((\d+),(\d+),(\d+),(\d+)\)\s+"
    r"removed=\{(\d+),(\d+),(\d+)\}\s+added=\{(\d+),(\d+),(\d+)\}\s+"
    r"value=(-?\d+(?:/\d+)?)\s*$")


def format_trace_line(move: MutationMove, value: Rational) -> str:
    return f"{move} removed={move.removed} added={move.added} " \
           f"value={format_rational(value)}"


def parse_trace_line(text: str) -> TraceLine:
    """
    Parse a line `z:(a,b,c,d) removed={..} added={..} value=p/q`.
    """
    match = _TRACE_PATTERN.match(text)
    if not match:
        raise InvalidInputError(f"Malformed trace line: {text!r}")
    numbers = [int(g) for g in match.groups()[:11]]
    move = MutationMove(*numbers[:5])
    if len(set(move)) != 5:
        raise InvalidInputError(f"Malformed trace line: {text!r}")
    if Triangle.of(*numbers[5:8]) != move.removed or \
            Triangle.of(*numbers[8:11]) != move.added:
        raise InvalidInputError(f"Trace line triangles do not match move "
                                f"{move}: {text!r}")
    return TraceLine(move, parse_rational(match.group(12)))
