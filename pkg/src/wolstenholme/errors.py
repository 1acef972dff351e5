"""Exception types shared across the package."""


class NotInvertible(ArithmeticError):
    """Raised when an inverse is requested for a value sharing a factor with the modulus."""

    def __init__(self, value: int, modulus: int, gcd: int):
        super().__init__(f"{value} is not invertible mod {modulus} (gcd {gcd})")
        self.value = value
        self.modulus = modulus
        self.gcd = gcd


class NonCoprimeModuli(ValueError):
    def __init__(self, m1: int, m2: int, gcd: int):
        super().__init__(f"moduli {m1} and {m2} share the factor {gcd}")
        self.moduli = (m1, m2)
        self.gcd = gcd


class IndexOutOfRange(ValueError):
    pass


class NotComposite(ValueError):
    pass


class EvenInput(ValueError):
    pass


class ConsistencyError(AssertionError):
    """Two independent evaluation paths disagreed.

    This always indicates a bug or a false mathematical assumption, never bad
    user input.
    """


class ConfirmationMismatch(ConsistencyError):
    """A search fast path and its direct confirmation disagreed."""


class CorruptCheckpoint(ValueError):
    pass


class UnknownStatement(KeyError):
    pass
