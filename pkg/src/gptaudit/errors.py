"""Exception types shared across the package."""

from __future__ import annotations


class GptAuditError(Exception):
    """Base class for all package errors."""


class ConfigError(GptAuditError):
    """Invalid pipeline configuration."""


class ParseError(GptAuditError):
    """Malformed manifest or other unparseable input."""


class ValidationError(GptAuditError):
    """A structural invariant was violated; message names the first violation."""


class DimensionMismatch(GptAuditError):
    """Embedding dimensions of query and pool disagree."""


class BackendFormatError(GptAuditError):
    """Backend response failed strict parsing even after one repair re-prompt."""


class BackendUnavailable(GptAuditError):
    """Transport-level failure talking to a model backend."""


class CoverageMismatch(GptAuditError):
    """Gold and predicted entity-id sets differ."""


class LengthMismatch(GptAuditError):
    """Paired vectors have different lengths."""


class DegenerateInput(GptAuditError):
    """A statistic is undefined for the given input (e.g. constant vector)."""


class UnknownNode(GptAuditError):
    """Graph query for a node that is not in the graph."""
