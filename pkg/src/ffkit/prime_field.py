"""Exact arithmetic in the prime field Z_p.

PrimeModulus is a validated prime p; Residue is a canonical representative
in [0, p).  These are the coefficient ring for every polynomial and field
element in the toolkit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ModulusMismatchError, NotPrimeError, ScaleLimitError

# Keeps every intermediate product within 32 bits.
MAX_PRIME = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class PrimeModulus:
    """A validated prime p, 2 <= p < 2^16, naming the base field Z_p."""

    p: int

    def __post_init__(self):
        if self.p >= MAX_PRIME:
            raise ScaleLimitError(f"modulus {self.p} exceeds limit {MAX_PRIME}")
        if not is_prime(self.p):
            raise NotPrimeError(f"{self.p} is not prime")

    def residue(self, value: int) -> Residue:
        return Residue(value, self)

    def __str__(self) -> str:
        return f"Z_{self.p}"


def check_prime(n: int) -> PrimeModulus:
    """Validate n as a prime modulus; raises NotPrimeError for composites."""
    return PrimeModulus(n)


def as_modulus(p: int | PrimeModulus) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else check_prime(p)


@dataclass(frozen=True)
class Residue:
    """An element of Z_p, always stored canonically in [0, p)."""

    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus.p)

    def _check(self, other: Residue) -> None:
        if not isinstance(other, Residue):
            raise TypeError(f"expected Residue, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatchError(
                f"mixed moduli {self.modulus.p} and {other.modulus.p}"
            )

    def __add__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.value + other.value, self.modulus)

    def __sub__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.value - other.value, self.modulus)

    def __mul__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.value * other.value, self.modulus)

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.modulus)

    def __pow__(self, e: int) -> Residue:
        if e < 0:
            return self.inverse() ** (-e)
        return Residue(pow(self.value, e, self.modulus.p), self.modulus)

    def inverse(self) -> Residue:
        """Multiplicative inverse via extended Euclid on integers."""
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.modulus}")
        g, s, _ = xgcd(self.value, self.modulus.p)
        assert g == 1  # p prime and value nonzero
        return Residue(s, self.modulus)

    def __truediv__(self, other: Residue) -> Residue:
        self._check(other)
        return self * other.inverse()

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)
