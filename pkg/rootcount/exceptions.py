# rootcount/exceptions.py


class RootCountError(Exception):
    """Base class for every error raised by the counting engine."""


class InvalidRingError(RootCountError, ValueError):
    pass


class ZeroPolynomialError(RootCountError, ValueError):
    pass


class LiftError(RootCountError, ArithmeticError):
    """A division that must be exact was not. Always a logic error upstream."""


class OracleGuardError(RootCountError):
    def __init__(self, modulus, guard):
        self.modulus = modulus
        self.guard = guard
        super().__init__(
            f"refusing brute force over {modulus} residues (guard is {guard})"
        )


class PolySyntaxError(RootCountError, ValueError):
    def __init__(self, message, position):
        self.message = message
        self.position = position
        super().__init__(f"{message} at position {position}")
