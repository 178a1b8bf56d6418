"""Exception hierarchy shared by every module."""


class FrameError(Exception):
    """Base class for all errors raised by tensorframes."""


class ShapeMismatch(FrameError, ValueError):
    pass


class NotSquare(FrameError, ValueError):
    pass


class NotHermitian(FrameError, ValueError):
    pass


class NoConvergence(FrameError, ArithmeticError):
    pass


class NotHPD(FrameError, ValueError):
    pass


class RankDeficient(FrameError, ValueError):
    pass


class SizeCapExceeded(FrameError, ValueError):
    pass


class NotAFrame(FrameError, ValueError):
    """The family's frame operator is (numerically) singular."""


class NotNormalizedTight(FrameError, ValueError):
    pass


class NotInvertible(FrameError, ValueError):
    pass


class ZeroScalar(FrameError, ValueError):
    pass


class ParseError(FrameError, ValueError):
    """Malformed frame file.  ``field`` and ``line`` locate the problem when known."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
