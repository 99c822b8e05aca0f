"""Exception hierarchy and error classification."""
from enum import Enum
from typing import Any, Dict, Optional


class ErrorCategory(str, Enum):
    """Error categories for classification."""
    ARGUMENT_ERROR = "argument_error"
    PARSE_ERROR = "parse_error"
    CONFIGURATION_ERROR = "configuration_error"
    INFEASIBLE_ERROR = "infeasible_error"
    NUMERIC_ERROR = "numeric_error"
    INPUT_ERROR = "input_error"


class NetblendError(Exception):
    """Base class for every error raised deliberately by netblend."""

    category: ErrorCategory = ErrorCategory.ARGUMENT_ERROR

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for structured logging."""
        return {
            "error": self.message,
            "category": self.category.value,
            "exception_type": type(self).__name__,
            **self.context,
        }


class GraphArgumentError(NetblendError, ValueError):
    """Invalid argument to a graph, metric or generator operation."""
    category = ErrorCategory.ARGUMENT_ERROR


class UnknownMetricError(GraphArgumentError):
    """Metric id outside the supported set."""


class EdgeListParseError(NetblendError, ValueError):
    """Malformed edge-list input."""
    category = ErrorCategory.PARSE_ERROR

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}", {"line_number": line_number})
        self.line_number = line_number


class ConfigError(NetblendError, ValueError):
    """Invalid run configuration or mixture configuration."""
    category = ErrorCategory.CONFIGURATION_ERROR


class InfeasibleRangeError(NetblendError, ValueError):
    """Gene ranges cannot be satisfied for the requested size."""
    category = ErrorCategory.INFEASIBLE_ERROR


class NumericError(NetblendError, ArithmeticError):
    """An iterative numeric method failed to converge."""
    category = ErrorCategory.NUMERIC_ERROR


class DegenerateGraphError(NetblendError, ValueError):
    """The graph is too small or has no edges for the requested computation."""
    category = ErrorCategory.INPUT_ERROR
