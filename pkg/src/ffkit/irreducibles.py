"""Irreducibility testing and enumeration of monic irreducibles over Z_p.

The enumeration is a sieve: degree-1 polynomials are all irreducible, and a
higher-degree candidate is kept iff it has no root in Z_p and no stored
irreducible of degree <= d/2 divides it.  Candidates are visited in
ascending base-p value of their coefficient vector (constant term least
significant), which fixes a deterministic order for CLI output and for the
default-modulus choice downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    ConstantPolynomialError,
    NotMonicError,
    ReduciblePolynomialError,
    ScaleLimitError,
)
from .polynomial import Polynomial
from .prime_field import PrimeModulus, as_modulus

MAX_ORDER = 1 << 20


def _require_monic_nonconstant(f: Polynomial) -> None:
    if f.degree < 1:
        raise ConstantPolynomialError(f"{f} has no nontrivial factorization")
    if not f.is_monic:
        raise NotMonicError(f"{f} is not monic")


def _eval_at(coeffs: tuple[int, ...], a: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * a + c) % p
    return acc


def _monic_divides(den: tuple[int, ...], num: tuple[int, ...], p: int) -> bool:
    """Remainder-only long division by a monic divisor, on raw tuples."""
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return False
    rem = list(num)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            for i in range(dd):
                rem[k - dd + i] = (rem[k - dd + i] - c * den[i]) % p
    return not any(rem[:dd])


@lru_cache(maxsize=None)
def _irreducible_tuples(p: int, d: int) -> tuple[tuple[int, ...], ...]:
    if d == 1:
        return tuple((c, 1) for c in range(p))
    divisors = []
    for k in range(2, d // 2 + 1):
        divisors.extend(_irreducible_tuples(p, k))
    found = []
    for value in range(p**d):
        digits, v = [], value
        for _ in range(d):
            v, rem = divmod(v, p)
            digits.append(rem)
        if digits[0] == 0:  # divisible by x
            continue
        cand = tuple(digits) + (1,)
        if any(_eval_at(cand, a, p) == 0 for a in range(1, p)):
            continue
        if any(_monic_divides(g, cand, p) for g in divisors):
            continue
        found.append(cand)
    return tuple(found)


def find_factor(f: Polynomial) -> Polynomial | None:
    """A monic proper factor of f, or None when f is irreducible.

    Root scan settles degrees <= 3 (a reducible cubic or quadratic must have
    a linear factor); higher degrees fall back to trial division by every
    monic irreducible of degree <= deg f / 2.
    """
    _require_monic_nonconstant(f)
    d = f.degree
    if d == 1:
        return None
    p = f.modulus.p
    for a in range(p):
        if _eval_at(f.coeffs, a, p) == 0:
            return Polynomial((-a, 1), f.modulus)
    if d <= 3:
        return None
    for k in range(2, d // 2 + 1):
        for g in _irreducible_tuples(p, k):
            if _monic_divides(g, f.coeffs, p):
                return Polynomial(g, f.modulus)
    return None


def is_irreducible(f: Polynomial) -> bool:
    """True iff monic f (degree >= 1) has no proper monic factor."""
    return find_factor(f) is None


@dataclass(frozen=True)
class IrreduciblePolynomial:
    """A monic irreducible polynomial, validated on construction."""

    poly: Polynomial

    def __post_init__(self):
        witness = find_factor(self.poly)
        if witness is not None:
            raise ReduciblePolynomialError(self.poly, witness)

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def modulus(self) -> PrimeModulus:
        return self.poly.modulus

    def format(self, var: str = "x") -> str:
        return self.poly.format(var)

    def __str__(self) -> str:
        return self.poly.format()


def _check_scale(p: int, d: int) -> None:
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if p**d > MAX_ORDER:
        raise ScaleLimitError(f"{p}^{d} exceeds the scale guard {MAX_ORDER}")


def enumerate_irreducibles(
    p: int | PrimeModulus, d: int
) -> list[IrreduciblePolynomial]:
    """All monic irreducibles of degree exactly d over Z_p, in ascending
    base-p coefficient order."""
    modulus = as_modulus(p)
    _check_scale(modulus.p, d)
    return [
        IrreduciblePolynomial(Polynomial(coeffs, modulus))
        for coeffs in _irreducible_tuples(modulus.p, d)
    ]


def count_irreducibles(p: int | PrimeModulus, d: int) -> int:
    modulus = as_modulus(p)
    _check_scale(modulus.p, d)
    return len(_irreducible_tuples(modulus.p, d))
