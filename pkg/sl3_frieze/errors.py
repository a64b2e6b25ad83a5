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

from typing import Optional


class FriezeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(FriezeError, ValueError):
    """Malformed or out-of-range input, or data violating a precondition."""


class ConfigurationError(InvalidInputError):
    """Invalid config file contents or environment variables."""


class InvalidMoveError(InvalidInputError):
    """A mutation move whose prerequisite triangles are not available."""


class PreconditionError(InvalidInputError):
    """Input is well-formed but not unitary/maximal as an operation requires."""


class ConditionViolation(InvalidInputError):
    def __init__(self, condition: str, message: str):
        """
        Raised when a candidate star graph cannot be realized by a family.
        :param condition: id of the violated condition, e.g. "(iii)"
        :param message: human-readable description of the witness
        """
        self.condition = condition
        super().__init__(f"condition {condition} violated: {message}")


class InternalConsistencyError(FriezeError, RuntimeError):
    """A state the theory rules out was reached; this indicates a bug."""


class OracleBudgetExceeded(FriezeError, LookupError):
    def __init__(self, budget: int, expansions: int,
                 target: Optional[object] = None):
        self.budget = budget
        self.expansions = expansions
        self.target = target
        super().__init__(f"mutation search budget of {budget} expansions "
                         f"exhausted ({expansions} expanded) before reaching "
                         f"{target}")
