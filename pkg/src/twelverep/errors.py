"""Exception hierarchy shared by all modules."""


class TwelveRepError(ValueError):
    """Base class for every error raised by this package."""


class InvalidGraph(TwelveRepError):
    pass


class InvalidSelection(TwelveRepError):
    pass


class ParseError(TwelveRepError):
    pass


class IncompleteAlphabet(TwelveRepError):
    pass


class LetterOutOfRange(TwelveRepError):
    pass


class AlphabetMismatch(TwelveRepError):
    pass


class TooManyOccurrences(TwelveRepError):
    pass


class PreconditionViolated(TwelveRepError):
    pass


class BudgetExceeded(TwelveRepError):
    pass


class NotRepresentable(TwelveRepError):
    pass
