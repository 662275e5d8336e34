"""Exception hierarchy shared by every coxc module."""


class CoxcError(Exception):
    """Base class for all coxc errors."""


class UnsupportedOrder(CoxcError, ValueError):
    """A Coxeter matrix entry outside {1, 2, 3, 4, 6, inf} reached the root arithmetic."""


class ArithmeticOverflow(CoxcError, OverflowError):
    """Root coordinates grew past the configured integer width."""


class InvalidMatrix(CoxcError, ValueError):
    pass


class NotReversible(CoxcError, ValueError):
    pass


class CapExceeded(CoxcError):
    pass


class DimensionMismatch(CoxcError, ValueError):
    pass


class NotInvolution(CoxcError, ValueError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"generator {index + 1} does not square to the identity")


class UndecidedOrder(CoxcError):
    def __init__(self, i, j, cap):
        self.i, self.j, self.cap = i, j, cap
        super().__init__(
            f"order of r{i + 1} r{j + 1} is not certified (power cap {cap}); "
            "pass assume_infinite=True to record it as infinity"
        )


class ParseError(CoxcError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ArityError(ParseError):
    pass


class LineCollision(CoxcError, ValueError):
    pass


class Disconnected(CoxcError, ValueError):
    pass


class NotARelator(CoxcError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"relator {index + 1} does not evaluate to the identity")
