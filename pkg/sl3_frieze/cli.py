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

import json

import click

from functools import wraps
from typing import Optional, Type

from click_default_group import DefaultGroup
from ovos_utils.log import LOG
from pydantic import BaseModel, ValidationError

from sl3_frieze.errors import ConfigurationError, FriezeError, \
    InternalConsistencyError, InvalidInputError, OracleBudgetExceeded
from sl3_frieze.util import DEFAULT_CONFIG, get_config
from sl3_frieze.version import __version__

_FORMAT = click.option("--format", "-f", "output_format", default="text",
                       type=click.Choice(["text", "json"]),
                       help="Output format")


def _fail(message: str, code: int):
    click.echo(message, err=True)
    click.get_current_context().exit(code)


def _exit_codes(func):
    """
    Map library errors to exit codes: 1 for semantically invalid input,
    2 for bad configuration, 3 for internal errors, exhausted search budgets
    and anything unexpected.
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except (InternalConsistencyError, OracleBudgetExceeded) as e:
            LOG.debug(f"{func.__name__} failed: {e!r}")
            _fail(f"Error: {e}", 3)
        except ConfigurationError as e:
            _fail(f"Configuration error: {e}", 2)
        except InvalidInputError as e:
            _fail(f"Invalid: {e}", 1)
        except Exception as e:
            LOG.debug(f"{func.__name__} crashed: {e!r}")
            _fail(f"Internal error: {e!r}", 3)
    return wrapper


def _read_model(path: str, model: Type[BaseModel]) -> BaseModel:
    try:
        with open(path, encoding="utf-8") as f:
            return model.model_validate_json(f.read())
    except (OSError, ValidationError) as e:
        _fail(f"Malformed file {path}: {e}", 2)


def _load_family(path: str):
    from sl3_frieze.models import FamilyFile
    try:
        return _read_model(path, FamilyFile).to_family()
    except FriezeError as e:
        _fail(f"Malformed file {path}: {e}", 2)


def _load_maximal_family(path: str):
    from sl3_frieze.combinatorics import Family, is_weakly_separated_family, \
        maximal_size
    family = _load_family(path)
    report = is_weakly_separated_family(family)
    if not report.ok:
        raise InvalidInputError(f"not weakly separated: {report.pair[0]} "
                                f"crosses {report.pair[1]}")
    if len(family) != maximal_size(family.ground):
        raise InvalidInputError(f"not maximal: {len(family)} triangles, "
                                f"expected {maximal_size(family.ground)}")
    return Family(family.ground, family.triangles, True)


def _check_point(family, value: int, name: str):
    if not 1 <= value <= family.n:
        raise click.BadParameter(f"must be in 1..{family.n}", param_hint=name)


def _emit_json(payload: dict):
    from sl3_frieze.models import SCHEMA_VERSION
    click.echo(json.dumps({"schema_version": SCHEMA_VERSION, **payload},
                          indent=2))


def _write_or_echo(text: str, output: Optional[str]):
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    else:
        click.echo(text)


class _IndexTuple(click.ParamType):
    def __init__(self, name: str, size: int):
        self.name = name
        self.size = size

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            points = tuple(int(p) for p in value.split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma separated list of integers",
                      param, ctx)
        if len(points) != self.size or len(set(points)) != self.size:
            self.fail(f"{value!r} needs {self.size} distinct indices",
                      param, ctx)
        return points


@click.group("frieze", cls=DefaultGroup, default="validate",
             no_args_is_help=True, invoke_without_command=True,
             help="SL3-friezes from clusters of Plucker variables.\n\n"
                  "See also: frieze COMMAND --help")
@click.option("--version", "-v", is_flag=True, required=False,
              help="Print the current version")
@click.option("--config", "-c", "config_path", default=None,
              help="Path to a config file (json or yaml)")
@click.option("--log-level", default=None,
              type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"],
                                case_sensitive=False),
              help="Log level, overrides the config file")
@click.pass_context
def frieze_cli(ctx, version: bool = False, config_path: str = None,
               log_level: str = None):
    if version:
        click.echo(f"Frieze version {__version__}")
    try:
        config = get_config(config_path)
    except (OSError, FriezeError) as e:
        _fail(f"Unable to load config: {e}", 2)
    LOG.init({"level": (log_level or config["logs"]["level"]).upper()})
    ctx.obj = config


@frieze_cli.command(help="Check a family for weak separation and maximality")
@click.argument("family_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--diagnostic", is_flag=True, default=False,
              help="Also scan all triangles for possible additions")
@_FORMAT
@click.pass_obj
@_exit_codes
def validate(config, family_file, diagnostic, output_format):
    from sl3_frieze.combinatorics import Family, is_maximal_family, \
        is_weakly_separated_family, maximal_size
    config = config or DEFAULT_CONFIG
    family = _load_family(family_file)
    n, size, expected = family.n, len(family), maximal_size(family.ground)
    report = is_weakly_separated_family(family)
    maximal = report.ok and is_maximal_family(
        Family(family.ground, family.triangles, True),
        diagnostic or config["structure"]["diagnostic"])
    if output_format == "json":
        _emit_json({"n": n, "size": size, "expected": expected,
                    "weakly_separated": report.ok, "maximal": maximal,
                    "crossing_pair": [list(t) for t in report.pair]
                    if report.pair else None})
    elif not report.ok:
        click.echo(f"not weakly separated: {report.pair[0]} crosses "
                   f"{report.pair[1]}")
    elif maximal:
        click.echo(f"maximal weakly separated ({size} = 3·{n}−8)")
    else:
        click.echo(f"weakly separated, not maximal ({size} < 3·{n}−8 = "
                   f"{expected})")
    if not maximal:
        click.get_current_context().exit(1)


@frieze_cli.command(help="Describe the star graph of a family at a point")
@click.argument("family_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--x", "-x", "x", required=True, type=click.IntRange(min=1),
              help="Center point of the star graph")
@_FORMAT
@_exit_codes
def analyze(family_file, x, output_format):
    from sl3_frieze.structure import border_triangles, build_star_graph, \
        verify_structure_theorem
    family = _load_maximal_family(family_file)
    _check_point(family, x, "--x")
    graph = build_star_graph(family, x)
    report = verify_structure_theorem(graph)
    borders = border_triangles(family, x) if report.ok else []
    if output_format == "json":
        _emit_json({"x": x, "n": family.n, "edges": sorted(graph.edges),
                    "triangulation_points": list(graph.triangulation_points),
                    "leaves": {str(leaf): point for leaf, point
                               in graph.leaves.items()},
                    "border_triangles": [list(t) for t in borders],
                    "structure": {"ok": report.ok,
                                  "violations": [list(v) for v
                                                 in report.violations]}})
    else:
        click.echo(f"star graph at x={x} (n={family.n})")
        click.echo("triangulation points: " +
                   " ".join(map(str, graph.triangulation_points)))
        click.echo("leaves: " + " ".join(f"{leaf}->{point}" for leaf, point
                                         in graph.leaves.items()))
        click.echo("border triangles: " + " ".join(map(str, borders)))
        click.echo("structure theorem: " + ("ok" if report.ok else "FAILED"))
        for rule, witness in report.violations:
            click.echo(f"  {rule}: {witness}")
    if not report.ok:
        raise InternalConsistencyError(f"Star graph at {x} violates the "
                                       f"structure theorem")


@frieze_cli.command(help="Compute the frieze of a cluster specialized to 1")
@click.argument("family_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--output", "-o", default=None,
              help="Also write the frieze JSON to this file")
@_FORMAT
@_exit_codes
def frieze(family_file, output, output_format):
    from sl3_frieze.frieze import compute_frieze, render_frieze, \
        validate_frieze
    from sl3_frieze.models import FriezeFile
    from sl3_frieze.mutation import ValuedFamily
    family = _load_maximal_family(family_file)
    grid = compute_frieze(ValuedFamily.all_ones(family))
    report = validate_frieze(grid)
    serialized = FriezeFile.from_grid(grid, report).model_dump_json(
        indent=2, exclude_none=True)
    if output:
        _write_or_echo(serialized, output)
    if output_format == "json":
        click.echo(serialized)
    else:
        click.echo(render_frieze(grid))
        click.echo(_summary(report))
    if not report.ok:
        raise InternalConsistencyError("Computed frieze failed validation")


def _summary(report) -> str:
    flags = {"SL3": report.sl3, "tame": report.tame,
             "periodic": report.periodic, "integral": report.integral}
    return "  ".join(f"{name}: {'yes' if flag else 'no'}"
                     for name, flag in flags.items())


@frieze_cli.command(name="check-frieze",
                    help="Validate a frieze given as JSON or rendered text")
@click.argument("frieze_file", type=click.Path(exists=True, dir_okay=False))
@_FORMAT
@_exit_codes
def check_frieze(frieze_file, output_format):
    from sl3_frieze.frieze import parse_rendered_frieze, validate_frieze
    from sl3_frieze.models import FriezeFile
    from sl3_frieze.util import format_rational
    with open(frieze_file, encoding="utf-8") as f:
        text = f.read()
    try:
        if text.lstrip().startswith("{"):
            grid = FriezeFile.model_validate_json(text).to_grid()
        else:
            grid = parse_rendered_frieze(text)
    except (ValidationError, FriezeError) as e:
        _fail(f"Malformed file {frieze_file}: {e}", 2)
    report = validate_frieze(grid)
    if output_format == "json":
        _emit_json({"n": grid.n, "ok": report.ok, "sl3": report.sl3,
                    "tame": report.tame, "periodic": report.periodic,
                    "integral": report.integral,
                    "failures": [{"kind": f.kind, "row": f.row,
                                  "column": f.column,
                                  "value": format_rational(f.value)}
                                 for f in report.failures]})
    else:
        click.echo(f"{'valid' if report.ok else 'invalid'} frieze of width "
                   f"{grid.width}, period {grid.n}")
        click.echo(_summary(report))
        for failure in report.failures:
            click.echo(f"  {failure.kind} at row {failure.row}, column "
                       f"{failure.column}: {format_rational(failure.value)}")
    if not report.ok:
        click.get_current_context().exit(1)


@frieze_cli.command(help="Evaluate a Plucker coordinate by mutation search")
@click.argument("family_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--triangle", "-t", required=True, type=_IndexTuple("i,j,k", 3),
              help="Triangle to evaluate, e.g. 1,3,5")
@click.option("--budget", "-b", default=None, type=click.IntRange(min=1),
              help="Maximum number of families to expand")
@_FORMAT
@click.pass_obj
@_exit_codes
def oracle(config, family_file, triangle, budget, output_format):
    from sl3_frieze.combinatorics import Triangle
    from sl3_frieze.mutation import ValuedFamily, oracle_value
    from sl3_frieze.util import format_rational, get_oracle_budget
    family = _load_maximal_family(family_file)
    for point in triangle:
        _check_point(family, point, "--triangle")
    target = Triangle.of(*triangle)
    value = oracle_value(ValuedFamily.all_ones(family), target,
                         budget=get_oracle_budget(budget, config))
    if output_format == "json":
        _emit_json({"triangle": list(target),
                    "value": format_rational(value)})
    else:
        click.echo(format_rational(value))


@frieze_cli.command(help="Apply or replay mutations of a family")
@click.argument("family_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--move", "-m", "moves", multiple=True,
              type=_IndexTuple("z,a,b,c,d", 5),
              help="Move z,a,b,c,d exchanging {z,a,c} for {z,b,d}")
@click.option("--replay", "-r", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="Trace file to re-apply and check line by line")
@click.option("--output", "-o", default=None,
              help="Write the mutated family JSON to this file")
@_exit_codes
def mutate(family_file, moves, replay, output):
    from sl3_frieze.models import FamilyFile
    from sl3_frieze.mutation import MutationMove, ValuedFamily, \
        available_moves, format_trace_line, mutate as apply, \
        parse_trace_line
    from sl3_frieze.util import format_rational
    family = _load_maximal_family(family_file)
    valued = ValuedFamily.all_ones(family)
    if not moves and not replay:
        for move in available_moves(family):
            click.echo(str(move))
        return
    steps = [(MutationMove(*m), None) for m in moves]
    if replay:
        with open(replay, encoding="utf-8") as f:
            lines = [line for line in f.read().splitlines() if line.strip()]
        try:
            steps += [tuple(parse_trace_line(line)) for line in lines]
        except InvalidInputError as e:
            _fail(f"Malformed trace {replay}: {e}", 2)
    for number, (move, expected) in enumerate(steps, 1):
        valued = apply(valued, move)
        value = valued[move.added]
        click.echo(format_trace_line(move, value))
        if expected is not None and expected != value:
            raise InvalidInputError(f"trace step {number} recorded "
                                    f"{format_rational(expected)}, computed "
                                    f"{format_rational(value)}")
    if output:
        _write_or_echo(FamilyFile.from_family(valued.family)
                       .model_dump_json(indent=2), output)


@frieze_cli.command(help="Generate a maximal family")
@click.option("--n", "-n", "n", default=None, type=click.IntRange(min=6),
              help="Number of points")
@click.option("--steps", "-s", default=0, type=click.IntRange(min=0),
              help="Number of random mutations to apply")
@click.option("--seed", default=0, type=int, help="Random seed")
@click.option("--star-graph-file", "-g", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="Realize this star graph instead of sampling")
@click.option("--output", "-o", default=None,
              help="Write the family JSON to this file")
@_exit_codes
def gen(n, steps, seed, star_graph_file, output):
    from sl3_frieze.combinatorics import GroundSet, random_maximal_family
    from sl3_frieze.models import FamilyFile, StarGraphFile
    from sl3_frieze.structure import realize_star_graph
    if star_graph_file:
        try:
            graph = _read_model(star_graph_file, StarGraphFile).to_star_graph()
        except FriezeError as e:
            _fail(f"Malformed file {star_graph_file}: {e}", 2)
        family = realize_star_graph(graph)
    elif n is None:
        raise click.UsageError("Either --n or --star-graph-file is required")
    else:
        family = random_maximal_family(GroundSet(n), steps, seed)
    _write_or_echo(FamilyFile.from_family(family).model_dump_json(indent=2),
                   output)
