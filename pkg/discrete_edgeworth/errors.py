"""
Exceptions for the discrete expansion engine.
"""


class DomainError(ValueError):
    """Input outside the domain of an operation (violated precondition)."""

    pass


class SweepError(RuntimeError):
    """A scaling sweep row failed; carries the offending N."""

    def __init__(self, n: int, message: str):
        super().__init__(f"sweep failed at N={n}: {message}")
        self.n = n
