"""
The :mod:`stratkit.exceptions` module includes all custom warnings and error
classes and functions used across strat-kit.
"""

# License: MIT


class MalformedInputError(ValueError):
    """Raised on invalid posets, flags, face data or serialized input."""


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration reaches the configured expansion budget.

    This signals a desk-scale limit and not a wrong answer.

    Parameters
    ----------
    budget : int
        The ceiling that was reached.
    """

    def __init__(self, budget, what="enumeration"):
        self.budget = budget
        super().__init__(
            f"The {what} exceeded the budget of {budget} candidate expansions."
        )


class HomologyOverflowError(ArithmeticError):
    """Raised when Smith normal form arithmetic leaves the int64 range."""


class NotCofibrantError(ValueError):
    """Raised when a diagram fails the cofibrancy conditions.

    Parameters
    ----------
    certificate : tuple
        The first violated instance reported by
        :func:`~stratkit.diagrams.is_cofibrant`.
    """

    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__(f"The diagram is not cofibrant: {certificate}")


class TruncationWarning(UserWarning):
    """Warning used when data above the trusted degree of a truncation is read."""


def raise_isinstance_error(variable_name, possible_type, variable):
    raise MalformedInputError(
        f"{variable_name} has to be one of {possible_type}. "
        f"Got {type(variable)} instead."
    )
