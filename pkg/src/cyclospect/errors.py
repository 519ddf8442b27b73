"""Exception hierarchy and the process exit codes the CLI maps them to."""


class CyclospectError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class ValidationError(CyclospectError):
    """An argument or input value violates a documented precondition."""

    exit_code = 2


class GraphParseError(CyclospectError):
    """Input text could not be parsed as a graph."""

    exit_code = 3

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class EmptyGraphError(CyclospectError):
    """The input contained no nodes or edges at all."""

    exit_code = 3


class AnalysisError(CyclospectError):
    """The input is valid but the requested analysis is degenerate on it."""

    exit_code = 4


class EmptySpectrumError(AnalysisError):
    """No eigenvalues remain after the zero-eigenvalue policy is applied."""


class NoCycleError(AnalysisError):
    """Fewer than two nonzero eigenvalues; there is no cycle order to find."""


class DegenerateSpectrumError(AnalysisError):
    """No eigenvalue lies in the generating angular band."""


class DegenerateEigenvectorError(AnalysisError):
    """Every component of the generating eigenvector is numerically zero."""


class DisconnectedGraphError(AnalysisError):
    """The operation needs a connected graph; rerun on the largest SCC."""


class NoCutFoundError(AnalysisError):
    """The Fiedler vector is single-signed, so no bipartition exists."""


class EigensolverError(CyclospectError):
    """The dense eigensolver failed to converge."""

    exit_code = 5
