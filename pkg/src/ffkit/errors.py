"""Exception types shared across the toolkit.

Division by zero (inverting 0, dividing by the zero polynomial) raises the
builtin ZeroDivisionError rather than a custom class.
"""


class FFKitError(Exception):
    """Base class for all toolkit errors."""


class NotPrimeError(FFKitError):
    """A composite (or too small) integer was offered as a prime modulus."""


class ScaleLimitError(FFKitError):
    """An operation exceeded its desk-scale guard (e.g. p^r too large)."""


class ModulusMismatchError(FFKitError):
    """Mixed residues or polynomials over different prime moduli."""


class FieldMismatchError(FFKitError):
    """Mixed elements of two different field representations."""


class ParseError(FFKitError):
    """Polynomial text that does not match the grammar."""

    def __init__(self, position: int, reason: str):
        super().__init__(f"at position {position}: {reason}")
        self.position = position
        self.reason = reason


class NotMonicError(FFKitError):
    """A monic polynomial was required."""


class ConstantPolynomialError(FFKitError):
    """A non-constant polynomial was required."""


class ReduciblePolynomialError(FFKitError):
    """A reducible polynomial was offered where an irreducible one is required.

    Carries a witness: a monic proper factor of the offending polynomial.
    """

    def __init__(self, poly, witness):
        super().__init__(f"{poly} is reducible; witness factor {witness}")
        self.poly = poly
        self.witness = witness


class DegreeMismatchError(FFKitError):
    """A polynomial of the wrong degree was offered as a field modulus."""


class OrderMismatchError(FFKitError):
    """Two structures that must have equal order (p, r) do not."""


class RootNotFoundError(FFKitError):
    """No root found where theory guarantees one; indicates an internal bug."""


class DegreeNotDividingError(FFKitError):
    """A degree-d polynomial cannot split over GF(p^r) unless d divides r."""
