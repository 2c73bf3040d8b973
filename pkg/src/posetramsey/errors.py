class PosetRamseyError(Exception):
    pass


class InvalidInput(PosetRamseyError, ValueError):
    pass


class CapacityError(PosetRamseyError):
    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class InvariantViolation(PosetRamseyError, AssertionError):
    """A proven structural property failed on a concrete object.

    `lemma` names the property so the CLI can report it.
    """

    def __init__(self, lemma, message):
        super().__init__(f"{lemma}: {message}")
        self.lemma = lemma
