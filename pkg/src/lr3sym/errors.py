"""Exception types raised by lr3sym."""


class Lr3Error(Exception):
    """Base class for all lr3sym errors."""


class SingularMatrix(Lr3Error):
    pass


class RankDeficient(Lr3Error):
    pass


class DataCorrupt(Lr3Error):
    """Chamber complex data violates one of its invariants."""


class InconsistentFormulas(Lr3Error):
    """Two chambers containing the same point give different values."""


class ValidationFailure(Lr3Error):
    """A sweep found a counterexample; ``point`` holds the first one."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class NoLift(Lr3Error):
    pass


class NotUnimodular(Lr3Error):
    pass


class NotChamberMap(Lr3Error):
    pass


class PolynomialMismatch(Lr3Error):
    def __init__(self, message, chamber=None):
        super().__init__(message)
        self.chamber = chamber
