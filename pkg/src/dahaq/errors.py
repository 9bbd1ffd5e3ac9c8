"""Exception types shared across the engine."""


class DahaqError(Exception):
    pass


class NotAMonomial(DahaqError):
    pass


class NotInvertibleCoefficient(DahaqError):
    pass


class NonMonomialImage(DahaqError):
    pass


class DivergentLimit(DahaqError):
    """Raised when an eps -> 0 limit has terms of negative eps degree."""

    def __init__(self, message, terms=()):
        super().__init__(message)
        self.terms = tuple(terms)


class EpsPresent(DahaqError):
    pass


class NotCentral(DahaqError):
    pass


class QuadraticNotSatisfied(DahaqError):
    pass


class NotInvertibleParameter(DahaqError):
    pass


class InverseNotFound(DahaqError):
    pass


class LexError(DahaqError):
    def __init__(self, position, character):
        super().__init__(f"unexpected character {character!r} at position {position}")
        self.position = position
        self.character = character


class ParseError(DahaqError):
    def __init__(self, position, expected):
        super().__init__(f"parse error at position {position}: expected {expected}")
        self.position = position
        self.expected = expected


class EvalError(DahaqError):
    pass


class UnknownName(EvalError):
    pass


class TypeMismatch(EvalError):
    pass


class SpecParseError(DahaqError):
    pass


class UsageError(DahaqError):
    pass
