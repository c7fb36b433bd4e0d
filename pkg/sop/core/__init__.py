"""
Core infrastructure package.

Provides configuration, logging setup and the exception hierarchy.
"""

from sop.core.config import config, get_settings, Settings
from sop.core.exceptions import (
    SmallOverlapError,
    ConfigurationError,
    PresentationError,
    PresentationParseError,
    PreconditionError,
    EnumerationGuardError,
    InvariantViolationError,
)

__all__ = [
    "config",
    "get_settings",
    "Settings",
    "SmallOverlapError",
    "ConfigurationError",
    "PresentationError",
    "PresentationParseError",
    "PreconditionError",
    "EnumerationGuardError",
    "InvariantViolationError",
]
