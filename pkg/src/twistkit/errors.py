"""Exception types raised across twistkit."""


class TwistkitError(Exception):
    pass


class DivisionByZero(TwistkitError, ZeroDivisionError):
    pass


class AmbientMismatch(TwistkitError, ValueError):
    pass


class SizeMismatch(TwistkitError, ValueError):
    pass


class LetterOutOfRange(TwistkitError, IndexError):
    pass


class LegOutOfRange(TwistkitError, IndexError):
    pass


class DegreeTooSmall(TwistkitError, ValueError):
    pass


class DegreeMismatch(TwistkitError, ValueError):
    pass


class DegreeBoundExceeded(TwistkitError, ValueError):
    pass


class InvalidWord(TwistkitError, KeyError):
    pass


class ModuleAlgebraViolation(TwistkitError):
    pass


class ImageEscape(TwistkitError):
    """A chain map produced a vector outside the target Koszul space."""


class DimensionError(TwistkitError, ValueError):
    pass


class ParseError(TwistkitError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
