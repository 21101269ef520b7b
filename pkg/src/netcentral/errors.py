"""Exception types shared across the package.

Each class maps onto one CLI exit status so the command layer can translate
failures uniformly (2 = parse, 3 = validation, 4 = analysis, 5 = usage).
"""

from __future__ import annotations


class NetcentralError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class ParseError(NetcentralError):
    """Malformed network document (syntax or structural shape).

    Carries a position when the underlying decoder provides one, so
    diagnostics can be rendered as ``file:line:col: message``.
    """

    exit_code = 2

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(NetcentralError):
    """Semantically invalid network (bad reference, self-loop, disconnect...)."""

    exit_code = 3


class DisconnectedError(ValidationError):
    """Network is not connected; ``components`` lists the station-id groups."""

    def __init__(self, components: list[list[str]]):
        self.components = components
        preview = "; ".join("{" + ", ".join(c[:5]) + ("..." if len(c) > 5 else "") + "}" for c in components)
        super().__init__(
            f"network is disconnected into {len(components)} components: {preview}"
        )


class AnalysisError(NetcentralError):
    """A well-formed request that cannot be answered (scenario disconnects...)."""

    exit_code = 4


class UsageError(NetcentralError):
    """Bad command-line usage (unknown measure, conflicting flags...)."""

    exit_code = 5
