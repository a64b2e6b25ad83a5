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
SL3-friezes from clusters of Plucker variables: the almost continuous values
at each point, the row recursions and diamond-determinant validation.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from textwrap import dedent
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from ovos_utils.log import LOG
from sympy import Matrix, Rational

from sl3_frieze.combinatorics import GroundSet
from sl3_frieze.errors import InternalConsistencyError, InvalidInputError, \
    PreconditionError
from sl3_frieze.mutation import ValuedFamily, contract_degree2, \
    is_unitary_in, remove_leaf
from sl3_frieze.structure import StarGraph, build_star_graph
from sl3_frieze.util import format_rational, parse_rational


@dataclass(frozen=True)
class QuiddityRows:
    """
    delta_low[i-1] = v{i, i+1, i+3} and delta_high[i-1] = v{i, i+2, i+3}.
    """
    n: int
    delta_low: Tuple[Fraction, ...]
    delta_high: Tuple[Fraction, ...]

    def __post_init__(self):
        GroundSet(self.n)
        for name in ("delta_low", "delta_high"):
            row = tuple(Fraction(v) for v in getattr(self, name))
            if len(row) != self.n:
                raise InvalidInputError(f"{name} needs {self.n} entries, "
                                        f"got {len(row)}")
            if any(v == 0 for v in row):
                raise InvalidInputError(f"{name} has a zero entry")
            object.__setattr__(self, name, row)


@dataclass(frozen=True)
class FriezeGrid:
    """
    Nontrivial rows of an SL3-frieze; rows[k-1][i-1] holds Delta_k(i).
    Rows may hold several periods; columns wrap modulo the row length.
    """
    n: int
    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.rows)
        if self.n < 5 or len(rows) != self.n - 4:
            raise InvalidInputError(f"A frieze of period {self.n} needs "
                                    f"{self.n - 4} >= 1 rows, got {len(rows)}")
        if len({len(row) for row in rows}) != 1 or not rows[0]:
            raise InvalidInputError("Frieze rows must be nonempty and of "
                                    "equal length")
        object.__setattr__(self, "rows", rows)

    @property
    def width(self) -> int:
        return self.n - 4

    @property
    def length(self) -> int:
        return len(self.rows[0])

    def delta(self, k: int, i: int) -> Fraction:
        """Delta_k(i) for -2 <= k <= w + 3, including the 0/1 rows."""
        if k in (0, self.width + 1):
            return Fraction(1)
        if k in (-2, -1, self.width + 2, self.width + 3):
            return Fraction(0)
        if not 1 <= k <= self.width:
            raise InvalidInputError(f"No row {k} in a width {self.width} "
                                    f"frieze")
        return self.rows[k - 1][(i - 1) % self.length]

    def entry(self, row: int, column: int) -> Fraction:
        """Entry of the full array, rows 0..w+5 from the top."""
        return self.delta(row - 2, column)


class FriezeFailure(NamedTuple):
    kind: str
    row: int
    column: int
    value: Fraction


@dataclass
class FriezeReport:
    sl3: bool = True
    tame: bool = True
    periodic: bool = True
    integral: bool = True
    failures: List[FriezeFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.sl3 and self.tame and self.periodic


def _label_sum(valued: ValuedFamily, point: int, incident: Sequence[int],
               pairs: range) -> Fraction:
    return sum((valued.value(point, incident[j], incident[j + 1])
                for j in pairs), Fraction(0))


def _remove_leaves(valued: ValuedFamily, x: int, point: int,
                   keep: Optional[int] = None) -> ValuedFamily:
    graph = build_star_graph(valued.family, x)
    while True:
        leaves = [leaf for leaf in graph.leaves_of(point) if leaf != keep]
        if not leaves:
            return valued
        incident = graph.incident_points(point)
        i = incident.index(leaves[0])
        valued = remove_leaf(valued, x, point, incident[i - 1], leaves[0],
                             incident[i + 1])
        graph = build_star_graph(valued.family, x)


def _add_label(labels: Dict[int, Fraction], point: int, value: Fraction):
    if point not in labels:
        raise InternalConsistencyError(f"Triangulation point {point} has no "
                                       f"label")
    labels[point] += value


def _degree2_point(graph: StarGraph, ends: Tuple[int, int]) -> int:
    for point in graph.triangulation_points:
        if point not in ends and graph.degree(point) == 2:
            return point
    LOG.error(f"No degree 2 triangulation point in {sorted(graph.edges)}")
    raise InternalConsistencyError(f"No removable degree 2 triangulation "
                                   f"point at x={graph.x}")


def almost_continuous_at(valued: ValuedFamily,
                         x: int) -> Tuple[Fraction, Fraction]:
    """
    Compute v{x-2, x-1, x+1} and v{x-1, x+1, x+2} from the star graph at x
    and its border values by removing leaves and contracting degree 2
    triangulation points until only the frozen edges remain.
    :param valued: valued maximal family with v(t) = 1 for all t through x
    :param x: point to evaluate at
    :returns: (v{x-2, x-1, x+1}, v{x-1, x+1, x+2})
    """
    ground = valued.family.ground
    ground.check(x)
    if is_unitary_in(valued, x) != 1:
        raise PreconditionError(f"Triangles through {x} must all have "
                                f"value 1")
    x_m2, x_m1, x_p1, x_p2 = (ground.wrap(x + k) for k in (-2, -1, 1, 2))
    ends = (x_m1, x_p1)
    work = valued
    graph = build_star_graph(work.family, x)
    labels: Dict[int, Fraction] = {}

    for point in graph.triangulation_points:
        if point in ends:
            continue
        incident = graph.incident_points(point)
        labels[point] = _label_sum(work, point, incident,
                                   range(len(incident) - 1))
        work = _remove_leaves(work, x, point)
    graph = build_star_graph(work.family, x)
    if graph.leaves.get(x_p2) == x_p1:
        incident = graph.incident_points(x_p1)
        labels[x_p1] = _label_sum(work, x_p1, incident,
                                  range(1, len(incident) - 1))
        work = _remove_leaves(work, x, x_p1, keep=x_p2)
    graph = build_star_graph(work.family, x)
    if graph.leaves.get(x_m2) == x_m1:
        incident = graph.incident_points(x_m1)
        labels[x_m1] = _label_sum(work, x_m1, incident,
                                  range(len(incident) - 2))
        work = _remove_leaves(work, x, x_m1, keep=x_m2)
    graph = build_star_graph(work.family, x)

    while graph.graph.number_of_edges() > 3:
        point = _degree2_point(graph, ends)
        points = graph.triangulation_points
        i = points.index(point)
        before, after = points[i - 1], points[(i + 1) % len(points)]
        if point == x_p2:
            work = contract_degree2(work, x, point, "right")
            labels[x_p1] = labels[point]
            _add_label(labels, after, labels.pop(point))
        elif point == x_m2:
            work = contract_degree2(work, x, point, "left")
            labels[x_m1] = labels[point]
            _add_label(labels, before, labels.pop(point))
        else:
            work = contract_degree2(work, x, point, "left")
            graph = build_star_graph(work.family, x)
            incident = graph.incident_points(after)
            k = incident.index(point)
            work = remove_leaf(work, x, after, incident[k - 1], point,
                               incident[k + 1])
            label = labels.pop(point)
            _add_label(labels, before, label)
            _add_label(labels, after, label)
        LOG.debug(f"x={x}: removed {point}, labels={labels}")
        graph = build_star_graph(work.family, x)

    low, high = labels.get(x_m1), labels.get(x_p1)
    if low != work.value(x_m2, x_m1, x_p1) or \
            high != work.value(x_m1, x_p1, x_p2):
        LOG.error(f"x={x}: labels {low}, {high} disagree with family values")
        raise InternalConsistencyError(f"Labels at {x} disagree with the "
                                       f"mutated family")
    return low, high


def quiddity_rows(valued: ValuedFamily) -> QuiddityRows:
    """
    Evaluate the first and last nontrivial frieze rows of a cluster
    specialized to 1 by running `almost_continuous_at` at every point.
    """
    ground = valued.family.ground
    if any(v != 1 for v in valued.values.values()):
        raise PreconditionError("Quiddity rows need the specialization to 1")
    low: List[Optional[Fraction]] = [None] * ground.n
    high: List[Optional[Fraction]] = [None] * ground.n
    for x in ground.points:
        lower, upper = almost_continuous_at(valued, x)
        # v{x-2, x-1, x+1} = Delta_1(x-2), v{x-1, x+1, x+2} = Delta^1(x-1)
        low[ground.wrap(x - 2) - 1] = lower
        high[ground.wrap(x - 1) - 1] = upper
    return QuiddityRows(ground.n, tuple(low), tuple(high))


def extend_rows(quiddity: QuiddityRows) -> FriezeGrid:
    """
    Fill in all rows from Delta_1 and Delta^1, computing the rows once
    bottom-up and once top-down and requiring both to agree through
    Delta^k(i) = Delta_(n-3-k)(i+k+1).
    """
    n = quiddity.n
    width = n - 4
    low: Dict[int, Tuple[Fraction, ...]] = {1: quiddity.delta_low}
    high: Dict[int, Tuple[Fraction, ...]] = {1: quiddity.delta_high}

    def lower(k: int, i: int) -> Fraction:
        return Fraction(1) if k == 0 else low[k][(i - 1) % n]

    def upper(k: int, i: int) -> Fraction:
        return Fraction(1) if k == 0 else high[k][(i - 1) % n]

    for k in range(2, width + 1):
        if k == 2:
            low[k] = tuple(lower(1, i) * lower(1, i + 1) - upper(1, i + 1)
                           for i in range(1, n + 1))
            high[k] = tuple(upper(1, i + 1) * upper(1, i) - lower(1, i)
                            for i in range(1, n + 1))
        else:
            low[k] = tuple(lower(1, i) * lower(k - 1, i + 1) -
                           upper(1, i + 1) * lower(k - 2, i + 2) +
                           lower(k - 3, i + 3) for i in range(1, n + 1))
            high[k] = tuple(upper(1, i + k - 1) * upper(k - 1, i) -
                            lower(1, i + k - 2) * upper(k - 2, i) +
                            upper(k - 3, i) for i in range(1, n + 1))
    for k in range(1, width + 1):
        for i in range(1, n + 1):
            if upper(k, i) != lower(n - 3 - k, i + k + 1):
                raise InvalidInputError(
                    f"Inconsistent quiddity rows: Delta^{k}({i}) = "
                    f"{upper(k, i)} but Delta_{n - 3 - k}({i + k + 1}) = "
                    f"{lower(n - 3 - k, i + k + 1)}")
    LOG.info(f"Extended quiddity rows to a width {width} frieze")
    return FriezeGrid(n, tuple(low[k] for k in range(1, width + 1)))


def compute_frieze(valued: ValuedFamily) -> FriezeGrid:
    return extend_rows(quiddity_rows(valued))


def diamond(grid: FriezeGrid, size: int, row: int,
            column: int) -> List[List[Fraction]]:
    """
    The size x size diamond whose left vertex is the array entry at
    (row, column); entry [p][q] lies p steps down-right and q steps
    up-right of it.
    """
    return [[grid.entry(row + p - q, column + q) for q in range(size)]
            for p in range(size)]


def _determinant(entries: List[List[Fraction]]) -> Fraction:
    det = Matrix([[Rational(v.numerator, v.denominator) for v in row]
                  for row in entries]).det(method="bareiss")
    return Fraction(int(det.p), int(det.q))


def validate_frieze(grid: FriezeGrid) -> FriezeReport:
    """
    Check every 3x3 diamond for determinant 1 (SL3), every 4x4 diamond for
    determinant 0 (tame) and horizontal period n across one stored region.
    """
    report = FriezeReport()
    last_row = grid.width + 5
    for size, expected in ((3, 1), (4, 0)):
        for row in range(size - 1, last_row - size + 2):
            for column in range(1, grid.length + 1):
                value = _determinant(diamond(grid, size, row, column))
                if value != expected:
                    report.failures.append(FriezeFailure(
                        "sl3" if size == 3 else "tame", row, column, value))
                    if size == 3:
                        report.sl3 = False
                    else:
                        report.tame = False
    if grid.length % grid.n:
        report.periodic = False
        report.failures.append(FriezeFailure("period", 0, grid.length,
                                             Fraction(grid.length)))
    for k, values in enumerate(grid.rows, 1):
        for column, value in enumerate(values, 1):
            if value != grid.delta(k, (column - 1) % grid.n + 1):
                report.periodic = False
                report.failures.append(FriezeFailure("period", k + 2, column,
                                                     value))
            if value.denominator != 1:
                report.integral = False
    LOG.debug(f"Frieze validation: {len(report.failures)} failures")
    return report


def build_plucker_frieze_map(n: int) -> Dict[Tuple[int, int],
                                               Tuple[int, int, int]]:
    """
    The index triple of the Plucker coordinate at each array position:
    (row, column) holds {column, column+1, column+row}, rows 0..n+1 from
    the top, columns 1..n.
    """
    ground = GroundSet(n)
    return {(row, column): (column, ground.wrap(column + 1),
                            ground.wrap(column + row))
            for row in range(n + 2) for column in ground.points}


def frozen_value(triple: Sequence[int], n: int) -> Optional[int]:
    """
    0 for a triple with a repeated index, 1 for a continuous triple,
    None otherwise.
    """
    if len(set(triple)) < 3:
        return 0
    ground = GroundSet(n)
    for start in triple:
        if {start, ground.wrap(start + 1), ground.wrap(start + 2)} == \
                set(triple):
            return 1
    return None


def render_frieze(grid: FriezeGrid, label_triples: bool = False) -> str:
    """
    Render the fundamental region as a staircase: array row r is shifted
    right by r half-cells, including the 0/1 border rows.
    :param label_triples: show the Plucker index triple of each position
        instead of its value
    """
    rows = range(grid.width + 6)
    columns = range(1, grid.length + 1)
    if label_triples:
        ground = GroundSet(grid.n)
        cells = [[f"{c},{ground.wrap(c + 1)},{ground.wrap(c + r)}"
                  for c in columns] for r in rows]
    else:
        cells = [[format_rational(grid.entry(r, c)) for c in columns]
                 for r in rows]
    half = (max(len(cell) for line in cells for cell in line) + 2) // 2
    # the top border row starts at column 0
    return dedent("\n".join(" " * (r * half) +
                            "".join(cell.rjust(2 * half) for cell in cells[r])
                            for r in rows))


def parse_rendered_frieze(text: str) -> FriezeGrid:
    """
    Parse the output of `render_frieze` back into a grid.
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if len(lines) < 7:
        raise InvalidInputError(f"A rendered frieze has at least 7 rows, "
                                f"got {len(lines)}")
    rows = [[parse_rational(token) for token in line] for line in lines]
    if len({len(row) for row in rows}) != 1:
        raise InvalidInputError("Rendered frieze rows differ in length")
    for index, expected in ((0, 0), (1, 0), (2, 1), (-3, 1), (-2, 0),
                            (-1, 0)):
        if any(v != expected for v in rows[index]):
            raise InvalidInputError(f"Border row {index} must be all "
                                    f"{expected}")
    inner = rows[3:-3]
    return FriezeGrid(len(inner) + 4, tuple(tuple(row) for row in inner))
