class GinvError(RuntimeError):
    """Base class for every error raised by the toolkit."""
    exit_code = 2


class InputError(GinvError):
    """Malformed literal, mismatched operands or a violated precondition."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ScalarDivisionError(GinvError, ZeroDivisionError):
    pass


class UnsupportedContextError(GinvError):
    """An operation needs a field but the scalars only form a ring."""


class CapabilityError(GinvError):
    """The context lacks a capability (ring operations, enumeration)."""


class ResourceError(GinvError):
    pass


class StructureValidationError(GinvError):
    def __init__(self, axiom, witness):
        super().__init__(f"axiom '{axiom}' violated at {witness}")
        self.axiom = axiom
        self.witness = tuple(witness)


class InvariantViolation(GinvError):
    """A self-verifying construction or internal cross-check failed."""
    exit_code = 1
