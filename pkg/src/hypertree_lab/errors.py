"""Exception types shared across the package."""


class HypertreeLabError(Exception):
    """Base class for errors raised by this package."""


class ParseError(HypertreeLabError):
    """Raised when an instance file cannot be parsed.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotHypertreeError(HypertreeLabError):
    """Raised when an operation requires a hypertree and the input is not one."""


class NotChordalError(HypertreeLabError):
    """Raised when an operation requires a chordal graph.

    ``witness`` holds an induced cycle of length at least four (vertex
    indices in cycle order) when one was computed.
    """

    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        self.witness = witness
        super().__init__(message)


class NotDuallyChordalError(HypertreeLabError):
    """Raised when an operation requires a dually chordal graph."""


class NotConnectedError(HypertreeLabError):
    """Raised when an operation requires a connected graph."""


class CapExceededError(HypertreeLabError):
    """Raised when an enumeration would produce more items than its cap.

    ``count`` holds the exact number of items that would have been produced
    when it is cheap to know; ``None`` means only the overflow is known.
    """

    def __init__(self, message: str, count: int | None = None, cap: int | None = None):
        self.count = count
        self.cap = cap
        super().__init__(message)
