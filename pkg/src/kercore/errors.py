"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list input. ``lineno`` is 1-based, or None for whole-document problems."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


class GraphClassError(ValueError):
    """The graph is outside the class an operation requires (e.g. not bipartite)."""


class CertificateMismatch(ValueError):
    """An odd-cycle certificate does not describe the graph it was passed with."""


class GuardExceeded(RuntimeError):
    """An exponential oracle was asked to run above its configured size limit."""


class InternalInconsistency(RuntimeError):
    """Two independent routes to the same quantity disagreed.

    This always indicates a bug in this package; ``details`` carries the
    disagreeing values so the failure can be replayed.
    """

    def __init__(self, message: str, details: dict | None = None):
        self.details = details or {}
        super().__init__(message)


class GenerationError(RuntimeError):
    """A random generator could not satisfy its specification."""
