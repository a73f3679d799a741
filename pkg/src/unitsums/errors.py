class PreconditionError(ValueError):
    """An input violates a mathematical precondition (not a usage error)."""


class NotNiceError(PreconditionError):
    """The closed form was requested on a subgroup that fails the minimax test."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
