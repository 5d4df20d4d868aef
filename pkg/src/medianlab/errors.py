"""Shared exception types."""


class InputError(ValueError):
    """An input object violates a documented precondition."""


class DisconnectedGraphError(InputError):
    """Input graph is disconnected; carries one representative per side."""

    def __init__(self, rep_a, rep_b):
        super().__init__(
            f"graph is disconnected: vertex {rep_a} cannot reach vertex {rep_b}"
        )
        self.rep_a = rep_a
        self.rep_b = rep_b


class BudgetError(RuntimeError):
    """An enumeration exceeded its configured cap."""

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


class FormatError(ValueError):
    """A text payload does not match the documented file format."""
