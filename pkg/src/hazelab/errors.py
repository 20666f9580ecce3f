"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """An argument violates a documented precondition."""


class UnstableStepError(ArithmeticError):
    """An explicit Euler step would amplify the residual instead of damping it."""
