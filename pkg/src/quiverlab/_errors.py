"""
Errors raised by the library.

The command line interface maps some of these to exit codes.
"""

from beartype import beartype


class QuiverlabError(Exception):
    """
    Base class for all errors raised by this library.
    """


class ParseError(QuiverlabError):
    """
    A ``.bq`` document does not describe a valid bound quiver.
    """


@beartype
class BoundQuiverSyntaxError(ParseError):
    """
    A line of a ``.bq`` document cannot be read.
    """

    def __init__(self, *, message: str, line: int, column: int) -> None:
        """
        Args:
            message: What is wrong.
            line: The 1-based line number.
            column: The 1-based column number.
        """
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownIdentifierError(ParseError):
    """
    A vertex or arrow is used before it is declared.
    """


class InvalidQuiverError(ParseError):
    """
    Duplicate identifiers or arrows with undeclared endpoints.
    """


class NonUniformRelationError(ParseError):
    """
    The paths of a relation do not share a source and a target.
    """


class ShortPathError(ParseError):
    """
    A relation contains a path of length less than two.
    """


class DisconnectedQuiverError(ParseError):
    """
    The underlying graph of a quiver is not connected.
    """


class NotAdmissibleError(QuiverlabError):
    """
    No power of the arrow ideal up to the bound lies in the ideal.
    """


class NonParallelError(QuiverlabError):
    """
    A linear combination mixes paths with different endpoints.
    """


class NotANodeError(QuiverlabError):
    """
    A vertex which is not a node was asked to be resolved.
    """


class GluingError(QuiverlabError):
    """
    A source and a sink cannot be glued.
    """


class NotSpecialBiserialError(QuiverlabError):
    """
    The bound quiver is not special biserial.
    """


class PreconditionError(QuiverlabError):
    """
    An input does not satisfy the conditions of a construction.
    """


class BudgetExceededError(QuiverlabError):
    """
    An exhaustive search would examine too many candidates.
    """


class RepresentationError(QuiverlabError):
    """
    Matrices do not define a representation of the bound quiver.
    """


class VerificationError(QuiverlabError):
    """
    A constructed object failed the check that certifies it.
    """


class ReportSchemaError(QuiverlabError):
    """
    A JSON document is not a report this version can read.
    """
