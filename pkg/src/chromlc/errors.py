"""Exception types shared across the package."""

from __future__ import annotations


class InvalidVertexError(ValueError):
    """An edge endpoint is outside ``range(n)``."""


class SelfLoopError(ValueError):
    pass


class InvalidParameterError(ValueError):
    pass


class GraphParseError(ValueError):
    """Malformed edge-list input. ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BudgetExceededError(RuntimeError):
    """An exponential computation would exceed its configured budget."""


class DomainError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    """Root iteration hit its cap. Carries the last iterate and its residuals."""

    def __init__(self, message: str, roots, residuals):
        super().__init__(message)
        self.roots = roots
        self.residuals = residuals
