"""Exception hierarchy shared by every module."""


class BurstBallError(ValueError):
    """Base class for all library errors."""


class AlphabetError(BurstBallError):
    """A symbol lies outside ``[0, q-1]``."""


class EmptyWordError(BurstBallError):
    pass


class DomainError(BurstBallError):
    """A parameter violates an operation's precondition."""


class UnsupportedError(BurstBallError):
    """The requested case has no closed form in this library."""


class BudgetExceeded(BurstBallError):
    def __init__(self, words: int, budget: int):
        super().__init__(
            f"enumeration needs {words} words, exceeds budget of {budget}"
        )
        self.words = words
        self.budget = budget
