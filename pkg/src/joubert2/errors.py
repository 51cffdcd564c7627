"""Error types shared across the package."""


class DomainError(ValueError):
    """Arguments outside an operation's mathematical domain (mixed fields,
    invalid degrees, parameters that violate a precondition)."""


class BudgetError(RuntimeError):
    """An exhaustive scan would exceed the configured size budget.

    Never downgraded to a silent skip: callers either re-run with a larger
    budget or record the operation as skipped.
    """

    def __init__(self, parameter: str, needed: int, budget: int):
        self.parameter = parameter
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"{parameter}: scan of {needed} elements exceeds budget {budget}"
        )
