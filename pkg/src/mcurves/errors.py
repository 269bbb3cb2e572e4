"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command line front end:
2 for malformed input, 3 for unsupported singularities, 4 for internal
inconsistencies.
"""


class MCurveError(Exception):
    exit_code = 4


class InputError(MCurveError):
    exit_code = 2


class ParseError(InputError):
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


class NegativeCount(InputError):
    pass


class InvalidComponent(InputError):
    pass


class ZeroForm(InputError):
    pass


class DuplicateComponent(InputError):
    pass


class SingularConic(InputError):
    pass


class UnknownComponent(InputError):
    pass


class TooFewComponents(InputError):
    pass


class OutOfRange(InputError):
    pass


class DegreeTooSmall(InputError):
    pass


class UnsupportedSingularity(MCurveError):
    exit_code = 3


class NonOrdinarySingularity(UnsupportedSingularity):
    pass


class MultiplicityTooHigh(UnsupportedSingularity):
    pass


class UnsupportedMultiplicity(UnsupportedSingularity):
    pass


class InternalInconsistency(MCurveError):
    pass


class ShearExhausted(InternalInconsistency):
    pass


class StabilizationFailure(InternalInconsistency):
    pass


class BoundViolated(InternalInconsistency):
    pass


class NotFree(MCurveError):
    exit_code = 1
