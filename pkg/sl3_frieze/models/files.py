"""File formats read and written by the `frieze` CLI."""
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

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from sl3_frieze.combinatorics import Family, GroundSet
from sl3_frieze.frieze import FriezeGrid, FriezeReport
from sl3_frieze.structure import StarGraph
from sl3_frieze.util import format_rational, parse_rational

SCHEMA_VERSION = 1


class _FileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    schema_version: int = SCHEMA_VERSION


class FamilyFile(_FileModel):
    """A family of triangles; each triple strictly ascending."""
    n: int
    triangles: List[Tuple[int, int, int]]

    @field_validator("triangles")
    @classmethod
    def _sorted_triples(cls, triangles):
        for triangle in triangles:
            if not triangle[0] < triangle[1] < triangle[2]:
                raise ValueError(f"triangle {list(triangle)} is not sorted")
        return triangles

    @classmethod
    def from_family(cls, family: Family) -> 'FamilyFile':
        return cls(n=family.n, triangles=[tuple(t) for t in family])

    def to_family(self, validate: bool = False) -> Family:
        return Family.build(GroundSet(self.n), self.triangles, validate)


class StarGraphFile(_FileModel):
    x: int
    n: int
    edges: List[Tuple[int, int]]

    @classmethod
    def from_star_graph(cls, graph: StarGraph) -> 'StarGraphFile':
        return cls(x=graph.x, n=graph.ground.n,
                   edges=sorted(graph.edges))

    def to_star_graph(self) -> StarGraph:
        return StarGraph.from_edges(self.x, GroundSet(self.n), self.edges)


class FriezeSummary(BaseModel):
    """Validation flags stored alongside a computed frieze."""
    sl3: bool
    tame: bool
    periodic: bool
    integral: bool


class FriezeFile(_FileModel):
    """Rows Delta_1..Delta_w of a frieze, rationals written as "p/q"."""
    n: int
    rows: List[List[str]] = Field(min_length=1)
    validation: Optional[FriezeSummary] = None

    @field_validator("rows", mode="before")
    @classmethod
    def _stringify(cls, rows):
        if isinstance(rows, list):
            return [[str(v) if isinstance(v, int) and
                     not isinstance(v, bool) else v for v in row]
                    if isinstance(row, list) else row for row in rows]
        return rows

    @field_validator("rows")
    @classmethod
    def _rationals(cls, rows):
        for row in rows:
            for value in row:
                parse_rational(value)
        return rows

    @classmethod
    def from_grid(cls, grid: FriezeGrid,
                  report: Optional[FriezeReport] = None) -> 'FriezeFile':
        validation = FriezeSummary(sl3=report.sl3, tame=report.tame,
                                   periodic=report.periodic,
                                   integral=report.integral) \
            if report else None
        return cls(n=grid.n,
                   rows=[[format_rational(v) for v in row]
                         for row in grid.rows],
                   validation=validation)

    def to_grid(self) -> FriezeGrid:
        return FriezeGrid(self.n, tuple(tuple(parse_rational(v) for v in row)
                                        for row in self.rows))
