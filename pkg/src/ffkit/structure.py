"""Multiplicative structure of GF(q): orders, generators, FTFF part (c).

Element orders are found by testing the divisors of q - 1 in ascending
order (every order divides q - 1 since the nonzero elements form a group
of that size), and a generator is the first element in enumeration order
of order exactly q - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ScaleLimitError
from .field_extension import FieldElement, FieldSpec, enumerate_elements

MAX_EXHAUSTIVE_ORDER = 1 << 12


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    """Euler's totient by trial-division factorization."""
    result, m = n, n
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def multiplicative_order(a: FieldElement) -> int:
    """Least n >= 1 with a^n = 1."""
    if a.is_zero:
        raise ZeroDivisionError("the order of 0 is undefined")
    one = a.field.one
    for d in divisors(a.field.q - 1):
        if a**d == one:
            return d
    raise AssertionError(f"{a} has no order dividing q-1; arithmetic is broken")


def find_generator(F: FieldSpec) -> FieldElement:
    """First element in enumeration order generating the nonzero elements.

    Existence is a theorem; running off the end means the arithmetic is
    broken, so that aborts rather than raising a domain error.
    """
    target = F.q - 1
    for code in range(1, F.q):
        a = F.element_at(code)
        if multiplicative_order(a) == target:
            return a
    raise AssertionError(f"no generator found in {F}; arithmetic is broken")


def order_table(F: FieldSpec) -> dict[FieldElement, int]:
    """Multiplicative order of every nonzero element, in enumeration order."""
    if F.q > MAX_EXHAUSTIVE_ORDER:
        raise ScaleLimitError(f"order {F.q} exceeds {MAX_EXHAUSTIVE_ORDER}")
    return {
        a: multiplicative_order(a)
        for a in enumerate_elements(F)
        if not a.is_zero
    }


def count_generators(F: FieldSpec) -> int:
    """Number of elements of order exactly q - 1, by brute scan,
    cross-checked against Euler phi of q - 1."""
    if F.q > MAX_EXHAUSTIVE_ORDER:
        raise ScaleLimitError(f"order {F.q} exceeds {MAX_EXHAUSTIVE_ORDER}")
    count = sum(1 for n in order_table(F).values() if n == F.q - 1)
    expected = euler_phi(F.q - 1)
    assert count == expected, (
        f"generator count {count} != phi({F.q - 1}) = {expected}"
    )
    return count


@dataclass
class GeneratorReport:
    field: FieldSpec
    generator: FieldElement
    order_table: dict[FieldElement, int]
    generator_count: int


def generator_report(F: FieldSpec) -> GeneratorReport:
    return GeneratorReport(
        field=F,
        generator=find_generator(F),
        order_table=order_table(F),
        generator_count=count_generators(F),
    )


@dataclass
class FtffPartCReport:
    """Verification record for FTFF part (c) on one field."""

    field: FieldSpec
    additive_orders_ok: bool
    basis_independent: bool
    generator: FieldElement
    powers_exhaust: bool
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_ftff_c(F: FieldSpec) -> FtffPartCReport:
    """Check both halves of FTFF part (c).

    (i)  Every nonzero element has additive order exactly p (p*a = 0 forces
         the order to divide the prime p), and 1, z, ..., z^{r-1} admit no
         vanishing nontrivial Z_p-combination, so (F, +) is an r-dimensional
         vector space over Z_p.
    (ii) A generator exists and its first q - 1 powers enumerate the
         nonzero elements without repetition.
    """
    if F.q > MAX_EXHAUSTIVE_ORDER:
        raise ScaleLimitError(f"order {F.q} exceeds {MAX_EXHAUSTIVE_ORDER}")
    failures: list[str] = []
    p = F.p.p

    additive_ok = True
    for code in range(1, F.q):
        a = F.element_at(code)
        if not (p * a).is_zero:
            additive_ok = False
            failures.append(f"{p}*({a}) != 0")

    basis_ok = True
    powers = [F.one]
    if F.r >= 2:
        z = F.element_at(p)
        for _ in range(F.r - 1):
            powers.append(powers[-1] * z)
    for code in range(1, F.q):
        digits, v = [], code
        for _ in range(F.r):
            v, rem = divmod(v, p)
            digits.append(rem)
        combo = F.zero
        for c, basis_elem in zip(digits, powers):
            if c:
                combo = combo + c * basis_elem
        if combo.is_zero:
            basis_ok = False
            failures.append(f"nontrivial combination {digits} vanishes")

    g = find_generator(F)
    seen = set()
    cur = g
    for _ in range(F.q - 1):
        seen.add(cur)
        cur = cur * g
    powers_ok = len(seen) == F.q - 1 and F.zero not in seen
    if not powers_ok:
        failures.append(
            f"powers of {g} cover {len(seen)} of {F.q - 1} nonzero elements"
        )

    return FtffPartCReport(
        field=F,
        additive_orders_ok=additive_ok,
        basis_independent=basis_ok,
        generator=g,
        powers_exhaust=powers_ok,
        failures=failures,
    )
