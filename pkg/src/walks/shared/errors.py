# Copyright 2025 Vijil, Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# The vijil trademark is owned by Vijil Inc.

"""
Exception hierarchy shared by every walks module.
"""
from enum import Enum
from typing import Optional


class WalksError(Exception):
    """Base class for all errors raised by the walks package."""


class DomainError(WalksError, ValueError):
    """
    An operation was called outside its domain.

    :param message: Human readable description.
    :param field: Name of the offending argument, if any.
    """

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class ParseError(DomainError):
    """Text or JSON input could not be parsed into a domain object."""


class BijectionReason(str, Enum):
    NEVER_HITS_AXIS = "never_hits_axis"
    PARITY = "parity"
    ASYMMETRIC_STEPS = "asymmetric_steps"
    LARGE_HEIGHT_VARIATION = "large_height_variation"
    OUTSIDE_REGION = "outside_region"
    WRONG_END_LEVEL = "wrong_end_level"


class BijectionError(DomainError):
    """
    A flip-bijection precondition failed.

    :param reason: Which precondition failed.
    """

    def __init__(self, message: str, reason: BijectionReason):
        super().__init__(message, field="walk")
        self.reason = reason


class TruncationError(WalksError):
    """A series coefficient was requested beyond its known order."""


class CutError(DomainError):
    """A point lies on (or too close to) a branch cut."""


class PathError(WalksError):
    """A continuation path comes too close to a branch cut."""


class AmbiguousSelectionError(WalksError):
    """A numeric selection rule matched zero or several candidates."""

    def __init__(self, message: str, candidates: Optional[list] = None):
        super().__init__(message)
        self.candidates = candidates or []
