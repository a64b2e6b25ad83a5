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
import yaml

from copy import deepcopy
from fractions import Fraction
from os import environ
from os.path import isfile, join
from typing import Literal, Optional, Union

from ovos_utils.json_helper import merge_dict
from ovos_utils.log import LOG
from ovos_utils.xdg_utils import xdg_config_home
from pydantic import BaseModel, ConfigDict, Field, StrictBool, StrictInt, \
    ValidationError, field_validator

from sl3_frieze.errors import ConfigurationError, InvalidInputError

ORACLE_BUDGET_ENV = "FRIEZE_ORACLE_BUDGET"

DEFAULT_CONFIG = {
    "oracle": {"budget": 100000},
    "structure": {"diagnostic": False},
    "logs": {"level": "WARNING"}
}


class _OracleConfig(BaseModel):
    model_config = ConfigDict(extra="allow")
    budget: StrictInt = Field(DEFAULT_CONFIG["oracle"]["budget"], ge=1)


class _StructureConfig(BaseModel):
    model_config = ConfigDict(extra="allow")
    diagnostic: StrictBool = False


class _LogsConfig(BaseModel):
    model_config = ConfigDict(extra="allow")
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"

    @field_validator("level", mode="before")
    @classmethod
    def _upper(cls, value):
        return value.upper() if isinstance(value, str) else value


class FriezeConfig(BaseModel):
    model_config = ConfigDict(extra="allow")
    oracle: _OracleConfig = _OracleConfig()
    structure: _StructureConfig = _StructureConfig()
    logs: _LogsConfig = _LogsConfig()


def load_config_file(file_path: str) -> dict:
    """
    Load a config file (json or yaml) and return the dict contents
    :param file_path: path to config file to load
    """
    if not isfile(file_path):
        raise FileNotFoundError(f"Requested config file not found: {file_path}")
    with open(file_path) as f:
        try:
            config = json.load(f)
        except Exception as e:
            LOG.debug(e)
            f.seek(0)
            config = yaml.safe_load(f)
    return config or {}


def default_config_path() -> str:
    return join(xdg_config_home(), "sl3_frieze", "sl3_frieze.yaml")


def get_config(config_path: Optional[str] = None) -> dict:
    """
    Build the effective configuration: defaults updated by a config file.
    :param config_path: explicit file to load; if None, the XDG default is
        used when it exists
    :returns: merged configuration dict
    """
    config = deepcopy(DEFAULT_CONFIG)
    config_path = config_path or default_config_path()
    if not isfile(config_path) and config_path == default_config_path():
        return config
    try:
        user_config = load_config_file(config_path)
    except (yaml.YAMLError, UnicodeDecodeError) as e:
        raise ConfigurationError(f"Unable to parse {config_path}: {e}") from e
    if not isinstance(user_config, dict):
        raise ConfigurationError(f"Config must be a mapping: {config_path}")
    LOG.debug(f"Loaded config: {user_config}")
    try:
        return FriezeConfig.model_validate(
            merge_dict(config, user_config)).model_dump()
    except ValidationError as e:
        raise ConfigurationError(f"Invalid config {config_path}: {e}") from e


def get_oracle_budget(budget: Optional[int] = None,
                      config: Optional[dict] = None) -> int:
    """
    Resolve the mutation search budget.
    :param budget: explicit budget, takes precedence over everything else
    :param config: configuration dict (see `get_config`)
    :returns: number of family expansions the oracle may perform
    """
    if budget is None and environ.get(ORACLE_BUDGET_ENV):
        try:
            budget = int(environ[ORACLE_BUDGET_ENV])
        except ValueError:
            raise ConfigurationError(f"{ORACLE_BUDGET_ENV} must be an integer, "
                                     f"got {environ[ORACLE_BUDGET_ENV]!r}")
        if budget < 1:
            raise ConfigurationError(f"{ORACLE_BUDGET_ENV} must be positive, "
                                     f"got {budget}")
    if budget is None:
        config = config or DEFAULT_CONFIG
        value = config.get("oracle", {}).get(
            "budget", DEFAULT_CONFIG["oracle"]["budget"])
        try:
            budget = int(value)
        except (TypeError, ValueError):
            raise ConfigurationError(f"oracle.budget must be an integer, "
                                     f"got {value!r}")
    if budget < 1:
        raise InvalidInputError(f"Oracle budget must be positive, got {budget}")
    return budget


def format_rational(value: Union[Fraction, int]) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Union[str, int]) -> Fraction:
    """
    Parse an exact rational written as "p" or "p/q".
    :param text: string (or int) to parse
    :returns: parsed Fraction
    """
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not text.strip():
        raise InvalidInputError(f"Not a rational: {text!r}")
    try:
        numerator, _, denominator = text.strip().partition("/")
        if denominator:
            return Fraction(int(numerator), int(denominator))
        return Fraction(int(numerator))
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"Not a rational: {text!r}") from e
