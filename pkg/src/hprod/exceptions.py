"""Exception types raised across the package."""


class GuardError(ValueError):
    """An exact search was refused because the input exceeds its size guard."""


class HypothesisError(ValueError):
    """A formula was refused because the theorem hypotheses do not hold."""


class ConditionViolation(ValueError):
    """A structural condition failed; ``witness`` names the offending tuple."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InstanceError(ValueError):
    """Malformed instance document or graph text."""
