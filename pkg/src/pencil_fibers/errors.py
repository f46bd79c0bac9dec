"""Exception hierarchy shared by every module."""


class PencilError(Exception):
    """Base class for all errors raised by pencil_fibers."""


class InputError(PencilError):
    """The user-supplied data cannot be turned into a valid pencil."""


class ParseError(InputError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownSymbol(ParseError):
    pass


class NonHomogeneous(InputError):
    pass


class ReducibleMinimalPolynomial(InputError):
    pass


class FixedComponent(InputError):
    """The generators share a factor, so the linear system has a fixed part."""


class ProportionalGenerators(InputError):
    pass


class ExtensionRequired(PencilError):
    """A base point is not rational over the working field.

    ``factor`` is the irreducible polynomial (coefficients over the field,
    constant term first) whose root would have to be adjoined.
    """

    def __init__(self, factor, where=""):
        self.factor = tuple(factor)
        self.where = where
        super().__init__(f"base point not rational over the field{where}: adjoin a root of {self.factor_str()}")

    def factor_str(self, var="t"):
        from .univariate import upoly_str

        return upoly_str(self.factor, var)


class InvariantViolation(PencilError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class NonTermination(InvariantViolation):
    pass


class ZeroPolynomial(PencilError, ValueError):
    pass


class InexactDivision(PencilError, ArithmeticError):
    pass


class UnknownPoint(PencilError, KeyError):
    pass


class DimensionNotZero(PencilError, ValueError):
    pass


class NoFiberFound(InvariantViolation):
    pass


class AmbiguousFiber(InvariantViolation):
    pass
