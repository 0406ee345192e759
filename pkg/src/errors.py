# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Business exceptions."""


class InvalidHypergraphError(Exception):
    """Raised when a hypergraph is malformed (edge size, vertex range, duplicates)."""


class InvalidColoringError(Exception):
    """Raised when a coloring does not fit the hypergraph or breaks a precondition."""


class InvalidTreeError(Exception):
    """Raised when an r-tree operation receives unusable parameters."""


class ParameterMismatchError(Exception):
    """Raised when uniformity, edge count or palette size disagree between inputs."""


class BudgetExceededError(Exception):
    """Raised when an exhaustive search would exceed its configured budget."""

    def __init__(self, limit_name: str, limit: int, requested: int):
        """Initialize.

        Args:
            limit_name: The name of the budget field that was exceeded.
            limit: The configured limit.
            requested: The value that the input required.
        """
        super().__init__(f"{limit_name} exceeded: limit {limit}, requested {requested}")
        self.limit_name = limit_name
        self.limit = limit
        self.requested = requested


class InvariantViolationError(Exception):
    """Raised when a runtime check of the recoloring argument fails.

    Any occurrence is a bug in the repair loop.
    """


class FileFormatError(Exception):
    """Raised when a hypergraph or certificate file cannot be parsed."""

    def __init__(self, original: Exception, source: str):
        """Initialize.

        Args:
            original: The original exception that caused the failure.
            source: The path (or "<string>") of the text that was being parsed.
        """
        super().__init__(f"Failed to parse {source}: {original}")
        self.original = original
        self.source = source


class InvalidCliConfigError(Exception):
    """Raised when the command-line configuration is invalid."""
