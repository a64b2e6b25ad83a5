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
The star graph G(F_x) of a maximal family at a point x: one edge {a, b} per
triangle {x, a, b}. Its vertices of degree >= 2 (triangulation points) span
a polygon triangulation and all other vertices are leaves hanging off it.
"""

import networkx as nx

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, \
    Sequence, Tuple

from ovos_utils.log import LOG

from sl3_frieze.combinatorics import Family, GroundSet, Triangle, \
    greedy_complete, is_weakly_separated_family, less_x, \
    maximal_size, sort_by_less_x
from sl3_frieze.errors import ConditionViolation, InternalConsistencyError, \
    InvalidInputError


@dataclass(frozen=True)
class StarGraph:
    x: int
    ground: GroundSet
    edges: FrozenSet[Tuple[int, int]]

    @classmethod
    def from_edges(cls, x: int, ground: GroundSet,
                   edges: Iterable[Sequence[int]]) -> 'StarGraph':
        """
        Build a (candidate) star graph from an edge list.
        :param x: center point, must not be a vertex
        :param ground: ground set
        :param edges: pairs of distinct points other than x
        """
        ground.check(x)
        normalized = set()
        for edge in edges:
            if len(edge) != 2 or edge[0] == edge[1]:
                raise InvalidInputError(f"Invalid edge: {edge}")
            ground.check(*edge)
            if x in edge:
                raise InvalidInputError(f"Edge {edge} contains the center {x}")
            normalized.add(tuple(sorted(edge)))
        return cls(x, ground, frozenset(normalized))

    @cached_property
    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_edges_from(self.edges)
        return graph

    @property
    def vertices(self) -> List[int]:
        return sort_by_less_x(self.graph.nodes, self.x, self.ground)

    def degree(self, vertex: int) -> int:
        return self.graph.degree[vertex] if vertex in self.graph else 0

    @cached_property
    def triangulation_points(self) -> Tuple[int, ...]:
        """Vertices of degree >= 2, ordered by <_x."""
        return tuple(sort_by_less_x((v for v in self.graph.nodes
                                     if self.graph.degree[v] >= 2),
                                    self.x, self.ground))

    @cached_property
    def leaves(self) -> Dict[int, int]:
        """Map of each degree-1 vertex to its only neighbour."""
        return {v: next(iter(self.graph[v])) for v in self.vertices
                if self.graph.degree[v] == 1}

    def leaves_of(self, point: int) -> List[int]:
        return [leaf for leaf, attached in self.leaves.items()
                if attached == point]

    def incident_points(self, point: int) -> List[int]:
        """
        Previous triangulation point, the leaves of `point` in <_x order and
        the next triangulation point, with v_0 = v_r and v_(r+1) = v_1.
        """
        points = self.triangulation_points
        if point not in points:
            raise InvalidInputError(f"{point} is not a triangulation point")
        i = points.index(point)
        return [points[i - 1]] + self.leaves_of(point) + \
            [points[(i + 1) % len(points)]]

    def border_triples(self) -> List[Triangle]:
        """
        Triangles {B, P_j, P_(j+1)} over consecutive incident points of each
        triangulation point B, skipping the first pair at v_1 and the last
        pair at v_r.
        """
        points = self.triangulation_points
        triangles = []
        for i, point in enumerate(points):
            incident = self.incident_points(point)
            for j in range(len(incident) - 1):
                if (i == 0 and j == 0) or \
                        (i == len(points) - 1 and j == len(incident) - 2):
                    continue
                triangles.append(Triangle.of(point, incident[j],
                                             incident[j + 1],
                                             ground=self.ground))
        return triangles


class StructureReport(NamedTuple):
    violations: List[Tuple[str, object]]

    @property
    def ok(self) -> bool:
        return not self.violations


def star_subfamily(family: Family, x: int) -> Family:
    """The triangles of `family` containing x."""
    family.ground.check(x)
    return Family(family.ground,
                  frozenset(t for t in family.triangles if x in t),
                  family.is_validated)


def _require_maximal(family: Family):
    if not family.is_validated:
        report = is_weakly_separated_family(family)
        if not report.ok:
            raise InvalidInputError(f"Family is not weakly separated: "
                                    f"{report.pair[0]} crosses "
                                    f"{report.pair[1]}")
    if len(family) != maximal_size(family.ground):
        raise InvalidInputError(f"Family is not maximal: {len(family)} "
                                f"triangles, expected "
                                f"{maximal_size(family.ground)}")


def build_star_graph(family: Family, x: int) -> StarGraph:
    """
    Build G(F_x) for a maximal family.
    :param family: maximal weakly separated family
    :param x: center point
    :returns: classified star graph
    """
    _require_maximal(family)
    edges = [tuple(p for p in t if p != x)
             for t in star_subfamily(family, x).triangles]
    return StarGraph.from_edges(x, family.ground, edges)


def _interleave(first: Tuple[int, int], second: Tuple[int, int],
                position: Dict[int, int]) -> bool:
    if set(first) & set(second):
        return False
    low, high = sorted(position[p] for p in first)
    inside = [low < position[p] < high for p in second]
    return inside[0] != inside[1]


def _triangulation_violations(graph: StarGraph) -> List[Tuple[str, object]]:
    points = graph.triangulation_points
    r = len(points)
    violations = []
    if r < 2:
        return [("triangulation", f"only {r} triangulation points")]
    position = {p: i for i, p in enumerate(points)}
    subgraph = graph.graph.subgraph(points)
    for i in range(r):
        side = (points[i], points[(i + 1) % r])
        if not subgraph.has_edge(*side):
            violations.append(("triangulation", f"missing polygon side {side}"))
    chords = [tuple(e) for e in subgraph.edges]
    for first, second in combinations(chords, 2):
        if _interleave(first, second, position):
            violations.append(("triangulation",
                               f"chords {first} and {second} cross"))
    if subgraph.number_of_edges() != 2 * r - 3:
        violations.append(("triangulation",
                           f"{subgraph.number_of_edges()} edges on {r} points, "
                           f"expected {2 * r - 3}"))
    faces = sum(nx.triangles(subgraph).values()) // 3
    if faces != r - 2:
        violations.append(("triangulation",
                           f"{faces} triangular faces, expected {r - 2}"))
    return violations


def _in_open_interval(point: int, low: int, high: int, x: int) -> bool:
    # (low, high) in <_x order, endpoints may not equal point
    return point not in (low, high) and \
        less_x(x, low, point) and less_x(x, point, high)


def verify_structure_theorem(graph: StarGraph) -> StructureReport:
    """
    Check that `graph` has the shape of a star graph of a maximal family:
    the triangulation points form a polygon triangulation from x+1 to x-1
    and every leaf hangs off a triangulation point within the allowed range.
    Failures are reported, never raised.
    """
    violations = _triangulation_violations(graph)
    points = graph.triangulation_points
    x, ground = graph.x, graph.ground
    if points and (points[0] != ground.wrap(x + 1) or
                   points[-1] != ground.wrap(x - 1)):
        violations.append(("endpoints", f"triangulation points run from "
                                        f"{points[0]} to {points[-1]}"))
    r = len(points)
    for leaf, attached in graph.leaves.items():
        if attached not in points:
            violations.append(("leaf", f"{leaf} attaches to non-triangulation "
                                       f"vertex {attached}"))
            continue
        if r < 2:
            continue
        i = points.index(attached)
        if i == 0:
            low, high = points[0], points[1]
        elif i == r - 1:
            low, high = points[r - 2], points[r - 1]
        else:
            low, high = points[i - 1], points[i + 1]
        if not _in_open_interval(leaf, low, high, x):
            violations.append(("leaf_location",
                               f"leaf {leaf} of {attached} outside "
                               f"({low},{high})"))
    return StructureReport(violations)


def border_triangles(family: Family, x: int) -> List[Triangle]:
    """
    The border triangles of F_x, each checked to be a member of `family`.
    """
    graph = build_star_graph(family, x)
    triangles = graph.border_triples()
    for triangle in triangles:
        if triangle not in family:
            LOG.error(f"Border triangle {triangle} missing at x={x}")
            raise InternalConsistencyError(f"Border triangle {triangle} is "
                                           f"not in the family")
    return triangles


def check_converse_conditions(graph: StarGraph) -> List[Tuple[str, str]]:
    """
    Check the conditions under which a graph is the star graph of some
    maximal family, taking T as the vertices of degree >= 2.
    :returns: list of (condition id, witness); empty if realizable
    """
    x, ground = graph.x, graph.ground
    points = graph.triangulation_points
    violations = [("(i)", witness) for _, witness in
                  _triangulation_violations(graph)]
    for endpoint in (ground.wrap(x + 1), ground.wrap(x - 1)):
        if endpoint not in points:
            violations.append(("(i)", f"{endpoint} is not in T"))
    for leaf, attached in graph.leaves.items():
        if attached not in points:
            violations.append(("(ii)", f"leaf {leaf} attaches to "
                                       f"non-T vertex {attached}"))
            continue
        below = [p for p in points if less_x(x, p, leaf)]
        above = [p for p in points if less_x(x, leaf, p)]
        allowed = ([below[-1]] if below else []) + ([above[0]] if above else [])
        if attached not in allowed:
            violations.append(("(iii)", f"leaf {leaf} attaches to {attached}, "
                                        f"expected one of {allowed}"))
    for (l1, t1), (l2, t2) in combinations(graph.leaves.items(), 2):
        if t1 == t2 or t1 not in points or t2 not in points:
            continue
        if less_x(x, t1, t2) != less_x(x, l1, l2):
            violations.append(("(iv)", f"leaves {l1}->{t1} and {l2}->{t2} "
                                       f"are out of order"))
    for leaf_end, inner_end in ((x + 2, x + 1), (x - 2, x - 1)):
        leaf_end, inner_end = ground.wrap(leaf_end), ground.wrap(inner_end)
        if not graph.graph.has_edge(leaf_end, inner_end):
            violations.append(("(v)", f"missing edge {{{inner_end},"
                                      f"{leaf_end}}}"))
    return violations


def realize_star_graph(graph: StarGraph) -> Family:
    """
    Construct a maximal family whose star graph at `graph.x` is `graph`.
    The triangles {x, a, b} for all edges together with the border triangles
    of the graph are completed greedily.
    :param graph: candidate star graph, carrying x and the ground set
    :returns: maximal weakly separated family
    """
    violations = check_converse_conditions(graph)
    if violations:
        condition, witness = violations[0]
        raise ConditionViolation(condition, witness)
    x = graph.x
    triangles = {Triangle.of(x, a, b) for a, b in graph.edges}
    triangles.update(graph.border_triples())
    seed = Family(graph.ground, frozenset(triangles))
    report = is_weakly_separated_family(seed)
    if not report.ok:
        raise InternalConsistencyError(f"Seed family of a realizable graph "
                                       f"crosses: {report.pair[0]} and "
                                       f"{report.pair[1]}")
    family = greedy_complete(Family(graph.ground, seed.triangles, True))
    if build_star_graph(family, x) != graph:
        raise InternalConsistencyError(f"Completion changed the star graph "
                                       f"at {x}")
    LOG.info(f"Realized star graph at x={x} with {len(family)} triangles")
    return family


def precedes_x(first: Triangle, second: Triangle, x: int,
               ground: GroundSet, strict: bool = False) -> bool:
    """
    A <= B for A = {x, a, b}, B = {x, c, d} (a <_x b, c <_x d) iff
    a <=_x c and d <=_x b, i.e. B is nested inside A.
    """
    if x not in first or x not in second:
        raise InvalidInputError(f"Both triangles must contain {x}")
    a, b = sort_by_less_x([p for p in first if p != x], x, ground)
    c, d = sort_by_less_x([p for p in second if p != x], x, ground)
    result = (a == c or less_x(x, a, c)) and (d == b or less_x(x, d, b))
    return result and (first != second if strict else True)


def star_interval(family: Family, first: Triangle, second: Triangle,
                  x: int) -> List[Triangle]:
    """The triangles C of F_x with A < C < B."""
    ground = family.ground
    return [t for t in star_subfamily(family, x)
            if precedes_x(first, t, x, ground, strict=True) and
            precedes_x(t, second, x, ground, strict=True)]
