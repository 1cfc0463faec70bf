"""
Exceptions raised across plaplace. Sampled hypothesis violations, sweep-row
failures and multistart member failures are reported as data instead.
"""


class PLaplaceError(Exception):
    pass


class InputShapeError(PLaplaceError, ValueError):
    pass


class ExpressionSyntaxError(PLaplaceError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownIdentifierError(ExpressionSyntaxError):
    pass


class ExpressionEvaluationError(PLaplaceError, ArithmeticError):
    pass


class QuadratureAccuracyError(PLaplaceError, ArithmeticError):
    pass


class OraclePreconditionError(PLaplaceError, ValueError):
    pass


class AntiCoerciveError(PLaplaceError, RuntimeError):
    """The energy escaped below the divergence floor or the iterate escaped to infinity."""

    def __init__(self, message, iterate=None, energy=None, iteration=None, regime=None):
        super().__init__(message)
        self.iterate = iterate
        self.energy = energy
        self.iteration = iteration
        self.regime = regime


class ConfigError(PLaplaceError, ValueError):
    """Collects every path-qualified validation failure of a config document."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("Invalid configuration:\n" + "\n".join(f"  - {e}" for e in self.errors))
