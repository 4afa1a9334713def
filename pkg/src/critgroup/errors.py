"""Shared exception types."""


class GraphError(ValueError):
    """Invalid graph data or an operation applied to an unsupported graph."""


class GraphFormatError(GraphError):
    """Malformed graph file. Carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(GraphError):
    """Operation requires a connected (underlying) graph."""


class StructureError(GraphError):
    """Graph lacks the combinatorial structure an operation needs."""


class InternalCheckError(RuntimeError):
    """An exact identity that must hold by construction failed to verify."""
