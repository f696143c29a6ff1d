"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """A grid, problem, or experiment was set up with invalid parameters."""


class UsageError(ValueError):
    """An operation was called on operands it cannot act on (wrong space, wrong grid)."""


class InstabilityError(RuntimeError):
    """The time stepper produced non-finite or exploding values.

    Carries the step index at which the blow-up was detected.
    """

    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step
