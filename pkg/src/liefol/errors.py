"""Exception hierarchy. Every error raised by the package derives from LieFolError."""


class LieFolError(Exception):
    pass


class DimensionMismatch(LieFolError, ValueError):
    pass


class DegenerateForm(LieFolError, ValueError):
    pass


class InvalidAlgebra(LieFolError, ValueError):
    """Structure constants violate antisymmetry or the Jacobi identity."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class NotASubalgebra(LieFolError, ValueError):
    pass


class NotAnIdeal(LieFolError, ValueError):
    pass


class NotAComplement(LieFolError, ValueError):
    pass


class NotPositiveDefinite(LieFolError, ValueError):
    pass


class DegenerateSplit(LieFolError, ValueError):
    """Vertical or horizontal part of a split is zero-dimensional."""


class NotVertical(LieFolError, ValueError):
    pass


class NotHorizontal(LieFolError, ValueError):
    pass


class NotConformal(LieFolError, ValueError):
    pass


class NotRiemannian(LieFolError, ValueError):
    pass


class NonPositiveWeight(LieFolError, ValueError):
    pass


class ParseError(LieFolError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class UnknownLabel(ParseError):
    pass


class DuplicateBracket(ParseError):
    pass


class UnboundParam(ParseError):
    pass
