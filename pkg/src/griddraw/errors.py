"""Exception types shared across the package."""


class BudgetExceeded(RuntimeError):
    """An exact search ran out of its node budget before reaching a verdict.

    This is never a "no" answer: the question stays undecided.
    """


class DegenerateSegment(ValueError):
    """A segment was requested between a point and itself."""


class InconsistentSystem(ValueError):
    """A residue system has no solution."""

    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(
            f"x = {first[1]} (mod {first[0]}) conflicts with x = {second[1]} (mod {second[0]})"
        )


class FormatError(ValueError):
    """Malformed JSON or DIMACS input; the message names the field or line."""
