"""Exception types shared across the package."""


class VnumError(Exception):
    """Base class for all mathematical/domain errors raised by this package."""


class AmbientMismatchError(VnumError):
    """Operands live in polynomial rings with different variable counts."""


class ExponentOverflowError(VnumError):
    """An exponent left the supported 64-bit range during a product/power."""


class BudgetExceededError(VnumError):
    """A brute-force search would exceed the configured point budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"search budget exceeded: {required} points required, budget is {budget}"
        )


class ParseError(VnumError):
    """Malformed ideal or graph expression."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} (at position {pos} in {text!r})")
