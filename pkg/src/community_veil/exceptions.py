"""
Exception hierarchy for Community-Veil.

Every error raised deliberately by the library derives from CommunityVeilError,
which the CLI turns into a machine-readable JSON object on stderr.
"""

from typing import Any


class CommunityVeilError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict[str, Any]:
        """Serialize the error for the CLI's stderr payload."""
        return {"error": type(self).__name__, "message": self.message, **self.details}


class GraphFormatError(CommunityVeilError, ValueError):
    """Malformed graph file (edge list or GML)."""

    def __init__(self, message: str, line: int | None = None, **details: Any) -> None:
        if line is not None:
            message = f"line {line}: {message}"
            details["line"] = line
        super().__init__(message, **details)
        self.line = line


class GraphUpdateError(CommunityVeilError, ValueError):
    """Edge update that violates the simple-graph contract."""


class UnknownNodeError(CommunityVeilError, KeyError):
    """Node id or label that does not exist in the graph."""

    def __str__(self) -> str:
        return self.message


class PartitionError(CommunityVeilError, ValueError):
    """Invalid community structure or community reference."""


class CacheMismatchError(CommunityVeilError):
    """Permanence cache used against a graph or partition it was not built for."""


class BudgetError(CommunityVeilError, ValueError):
    """Invalid edit budget or budget fraction."""


class MetricError(CommunityVeilError, ValueError):
    """Metric undefined for the given input (e.g. edgeless graph)."""


class EigensolverError(CommunityVeilError):
    """Laplacian eigen-decomposition failed or produced invalid values."""


class DetectorError(CommunityVeilError, ValueError):
    """Unknown detector name or detector failure."""


class TargetResolutionError(CommunityVeilError, ValueError):
    """Target selector could not be resolved against a community structure."""


class ConfigError(CommunityVeilError, ValueError):
    """Invalid experiment configuration."""
