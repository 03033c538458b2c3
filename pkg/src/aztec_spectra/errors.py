"""Exception types shared by the package."""


class EnumerationCapExceeded(RuntimeError):
    """The brute-force tree enumerator was asked for more trees than its cap."""


class InconsistencyError(ArithmeticError):
    """An exact computation produced a value that is impossible if the code is correct."""


class NonRationalProductError(InconsistencyError):
    """A conjugate-orbit product failed to reduce to a rational integer."""


class DisconnectedGraphWarning(UserWarning):
    """Spanning trees were requested for a disconnected graph; the count is 0."""
