"""Exception hierarchy shared by every module."""


class DyckStatError(Exception):
    pass


class WordError(DyckStatError, ValueError):
    """Base class for malformed word input."""


class InvalidCharacter(WordError):
    pass


class PrefixViolation(WordError):
    pass


class UnbalancedWord(WordError):
    pass


class DomainError(DyckStatError, ValueError):
    """An argument lies outside the domain of a bijection."""


class BallotPreconditionViolated(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class WrongStarCount(DomainError):
    pass


class NotPrime(DyckStatError, ValueError):
    pass


class OracleBoundExceeded(DyckStatError):
    pass
