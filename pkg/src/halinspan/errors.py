class HalinSpanError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(HalinSpanError, ValueError):
    """Input does not describe a valid Halin graph."""


class NotATreeError(ValidationError):
    pass


class DegreeTwoVertexError(ValidationError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex!s} has degree two")


class TooFewLeavesError(ValidationError):
    pass


class LeafOrderMismatchError(ValidationError):
    pass


class ParseError(HalinSpanError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class InfeasibleParamsError(HalinSpanError, ValueError):
    pass


class InvalidParamsError(HalinSpanError, ValueError):
    pass


class TooLargeError(HalinSpanError, ValueError):
    pass


class SinkOverflowError(HalinSpanError):
    """Store-mode sink exceeded its cap.  ``report`` holds the partial counts."""

    def __init__(self, cap: int, report=None):
        self.cap = cap
        self.report = report
        super().__init__(f"store cap of {cap} trees exceeded")


class ColoredRightEdgeError(HalinSpanError, AssertionError):
    pass


class ParallelRunError(HalinSpanError):
    """A worker failed; ``report`` is partial and ``cause`` is the original error."""

    def __init__(self, cause: BaseException, report=None):
        self.cause = cause
        self.report = report
        super().__init__(f"worker failed: {cause!r}")
