"""Factoring x^q - x: over Z_p into all irreducibles of degree dividing r,
and over GF(q) into q distinct linear factors.

The base factorization is built constructively from the irreducible sieve,
never by dividing x^q - x; re-multiplying the factors and comparing is the
deliberately independent check.  Root finding over an extension is by
exhaustive evaluation, which the q <= 2^12 guard keeps instant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegreeNotDividingError,
    ModulusMismatchError,
    RootNotFoundError,
    ScaleLimitError,
)
from .field_extension import FieldElement, FieldSpec, enumerate_elements
from .irreducibles import IrreduciblePolynomial, enumerate_irreducibles
from .polynomial import Polynomial
from .prime_field import PrimeModulus, as_modulus
from .structure import divisors, find_generator

MAX_BASE_ORDER = 1 << 20
MAX_ROOT_ORDER = 1 << 12


def x_pow_q_minus_x(modulus: PrimeModulus, q: int) -> Polynomial:
    """The polynomial x^q - x over Z_p, materialized densely."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    coeffs = [0] * (q + 1)
    coeffs[1] = -1
    coeffs[q] += 1
    return Polynomial(tuple(coeffs), modulus)


@dataclass(frozen=True)
class BaseFactorization:
    """x^q - x over Z_p as the product of all monic irreducibles of degree
    dividing r, each exactly once."""

    p: PrimeModulus
    r: int
    q: int
    factors: tuple[IrreduciblePolynomial, ...]

    def polynomial(self) -> Polynomial:
        return x_pow_q_minus_x(self.p, self.q)

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for f in self.factors:
            hist[f.degree] = hist.get(f.degree, 0) + 1
        return hist


def factor_xq_minus_x_base(p: int | PrimeModulus, r: int) -> BaseFactorization:
    """Enumerate the irreducibles of each degree d | r; their product is
    x^q - x (checked by tests via re-multiplication, not assumed here)."""
    modulus = as_modulus(p)
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    q = modulus.p**r
    if q > MAX_BASE_ORDER:
        raise ScaleLimitError(f"{modulus.p}^{r} exceeds {MAX_BASE_ORDER}")
    factors: list[IrreduciblePolynomial] = []
    for d in divisors(r):
        factors.extend(enumerate_irreducibles(modulus, d))
    return BaseFactorization(modulus, r, q, tuple(factors))


@dataclass(frozen=True)
class LinearFactorization:
    """x^q - x split over GF(q): one linear factor (x - a) per element."""

    field: FieldSpec
    roots: tuple[FieldElement, ...]
    source: Polynomial


def factor_xq_minus_x_extension(F: FieldSpec) -> LinearFactorization:
    """Every element of F is a root of x^q - x; verified by computing a^q
    element by element rather than assumed."""
    q = F.q
    if q > MAX_ROOT_ORDER:
        raise ScaleLimitError(f"order {q} exceeds {MAX_ROOT_ORDER}")
    roots = tuple(a for a in enumerate_elements(F) if a**q == a)
    if len(roots) != q:
        raise AssertionError(
            f"x^{q}-x has {len(roots)} roots in {F}; arithmetic is broken"
        )
    return LinearFactorization(F, roots, x_pow_q_minus_x(F.p, q))


def lift_to_field(f: Polynomial, F: FieldSpec) -> list[FieldElement]:
    """Coefficients of f embedded as constants of F, little-endian."""
    if f.modulus != F.p:
        raise ModulusMismatchError(
            f"polynomial over Z_{f.modulus.p}, field has characteristic {F.p.p}"
        )
    return [F.element(Polynomial.constant(c, F.p)) for c in f.coeffs]


def evaluate_in_field(f: Polynomial, a: FieldElement) -> FieldElement:
    """Horner evaluation of f (over Z_p) at a point of an extension of Z_p."""
    F = a.field
    if f.modulus != F.p:
        raise ModulusMismatchError(
            f"polynomial over Z_{f.modulus.p}, field has characteristic {F.p.p}"
        )
    acc = F.zero
    for c in reversed(f.coeffs):
        acc = acc * a + F.element(Polynomial.constant(c, F.p))
    return acc


def roots_in_field(f: Polynomial, F: FieldSpec) -> list[FieldElement]:
    """All a in F with f(a) = 0, in enumeration order."""
    if f.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere")
    if F.q > MAX_ROOT_ORDER:
        raise ScaleLimitError(f"order {F.q} exceeds {MAX_ROOT_ORDER}")
    return [a for a in enumerate_elements(F) if evaluate_in_field(f, a).is_zero]


def lift_linear_split(f: IrreduciblePolynomial, F: FieldSpec) -> list[FieldElement]:
    """The deg(f) distinct roots of f in F, available iff deg(f) | r."""
    if F.r % f.degree != 0:
        raise DegreeNotDividingError(
            f"degree {f.degree} does not divide {F.r}; {f} has no roots in {F}"
        )
    roots = roots_in_field(f.poly, F)
    if len(roots) != f.degree:
        raise RootNotFoundError(
            f"{f} has {len(roots)} roots in {F}, expected {f.degree}; "
            "this contradicts the divisibility criterion"
        )
    return roots


def remultiply(
    factors: list[IrreduciblePolynomial] | tuple[IrreduciblePolynomial, ...],
    modulus: PrimeModulus,
) -> Polynomial:
    """Product of base factors by convolution; the verification path meant
    to be compared against x^q - x, independent of the sieve that produced
    the factors."""
    p = modulus.p
    acc = np.ones(1, dtype=np.int64)
    for f in factors:
        poly = f.poly if isinstance(f, IrreduciblePolynomial) else f
        acc = np.convolve(acc, np.array(poly.coeffs, dtype=np.int64)) % p
    return Polynomial(tuple(int(c) for c in acc), modulus)


def expand_linear_factors(
    F: FieldSpec, roots: tuple[FieldElement, ...] | list[FieldElement]
) -> list[FieldElement]:
    """Coefficients (little-endian) of prod (x - a) over F.

    Works in enumeration-code space so that re-multiplying all q linear
    factors of x^q - x stays fast: multiplication routes through discrete
    logs over a generator, addition through base-p digit arithmetic.
    """
    q, p, r = F.q, F.p.p, F.r
    if q > MAX_ROOT_ORDER:
        raise ScaleLimitError(f"order {q} exceeds {MAX_ROOT_ORDER}")

    if r == 1:

        def mul_vec(codes, scalar):
            return (codes * scalar) % p

        def add_vec(u, v):
            return (u + v) % p

    else:
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        g = find_generator(F)
        cur = F.one
        for i in range(q - 1):
            c = cur.code
            exp[i] = c
            log[c] = i
            cur = cur * g

        def mul_vec(codes, scalar):
            out = np.zeros_like(codes)
            mask = codes != 0
            if scalar != 0:
                out[mask] = exp[(log[codes[mask]] + log[scalar]) % (q - 1)]
            return out

        if p == 2:

            def add_vec(u, v):
                return u ^ v

        else:

            def add_vec(u, v):
                out = np.zeros_like(u)
                uu, vv, scale = u.copy(), v.copy(), 1
                for _ in range(r):
                    out += ((uu % p + vv % p) % p) * scale
                    uu //= p
                    vv //= p
                    scale *= p
                return out

    coeffs = np.zeros(len(roots) + 1, dtype=np.int64)
    coeffs[0] = 1
    deg = 0
    for a in roots:
        neg_code = (-a).code
        shifted = np.zeros(deg + 2, dtype=np.int64)
        shifted[1:] = coeffs[: deg + 1]
        if neg_code:
            shifted[:-1] = add_vec(
                shifted[:-1], mul_vec(coeffs[: deg + 1], neg_code)
            )
        coeffs[: deg + 2] = shifted
        deg += 1
    return [F.element_at(int(c)) for c in coeffs]
