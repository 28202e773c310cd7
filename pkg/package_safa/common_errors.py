"""A Python module to define the exceptions raised by this package."""


class SafaError(Exception):
    """Base class of every error raised by this package."""


class InvalidArgumentError(SafaError, ValueError):
    """A precondition of an operation does not hold."""


class InvalidAutomatonError(InvalidArgumentError):
    """Structural validation of an automaton failed.

    Attributes
    ----------
    problems : list[str]
        One message per violation, each naming its location.
    """

    def __init__(self,
                 message: str,
                 problems: list[str] | None = None) -> None:

        super().__init__(message)
        self.problems: list[str] = problems if problems is not None else []


class ParseError(SafaError):
    """Syntax error in an automaton file, a word, or a DIMACS input.

    Attributes
    ----------
    line : int
        The 1-based line number.
    column : int
        The 1-based column number (0 when the whole line is at fault).
    message : str
        What went wrong.
    """

    def __init__(self,
                 message: str,
                 *,
                 line: int = 1,
                 column: int = 0) -> None:

        self.line: int = line
        self.column: int = column
        self.message: str = message
        super().__init__(f'line {line}, column {column}: {message}')


class SearchLimitError(SafaError):
    """A configured search limit would be exceeded."""


class VerificationError(SafaError):
    """A constructed object failed its own post-check."""
