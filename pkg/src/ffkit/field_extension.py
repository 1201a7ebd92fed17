"""GF(p^r) as the quotient ring Z_p[z]/<f(z)>.

A FieldSpec names one concrete representation: the prime p, the extension
degree r, and a monic irreducible modulus of degree r.  Elements are the
canonical residues, i.e. polynomials of degree < r.  Two specs with the
same (p, r) but different moduli are distinct representations (isomorphic
but not equal); the display variable never enters equality.

Elements are enumerated by the base-p value of their coefficient vector,
so 0 comes first, 1 second, then z, z+1, ... matching the table layout of
the classic worked examples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field

from .errors import (
    DegreeMismatchError,
    FieldMismatchError,
    ModulusMismatchError,
    ScaleLimitError,
)
from .irreducibles import IrreduciblePolynomial, find_factor
from .polynomial import Polynomial
from .prime_field import PrimeModulus, as_modulus

MAX_FIELD_ORDER = 1 << 20
MAX_TABLE_ORDER = 256


@dataclass(frozen=True)
class FieldSpec:
    """A concrete representation of GF(p^r)."""

    p: PrimeModulus
    r: int
    modulus: IrreduciblePolynomial
    variable: str = dataclass_field(default="z", compare=False)

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"extension degree must be positive, got {self.r}")
        if self.modulus.modulus != self.p:
            raise ModulusMismatchError(
                f"modulus polynomial is over Z_{self.modulus.modulus.p}, "
                f"field over Z_{self.p.p}"
            )
        if self.modulus.degree != self.r:
            raise DegreeMismatchError(
                f"modulus {self.modulus} has degree {self.modulus.degree}, "
                f"expected {self.r}"
            )
        if self.p.p**self.r > MAX_FIELD_ORDER:
            raise ScaleLimitError(
                f"{self.p.p}^{self.r} exceeds the scale guard {MAX_FIELD_ORDER}"
            )

    @property
    def q(self) -> int:
        return self.p.p**self.r

    @property
    def zero(self) -> FieldElement:
        return FieldElement(Polynomial.zero(self.p), self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(Polynomial.one(self.p), self)

    def element_at(self, code: int) -> FieldElement:
        """Element whose coefficient vector is code written in base p."""
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for order {self.q}")
        digits, v = [], code
        for _ in range(self.r):
            v, rem = divmod(v, self.p.p)
            digits.append(rem)
        return FieldElement(Polynomial(tuple(digits), self.p), self)

    def element(self, x) -> FieldElement:
        """Coerce x (FieldElement, Polynomial, text, or enumeration code)
        into this field, reducing modulo the field modulus."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatchError(f"{x} belongs to {x.field}, not {self}")
            return x
        if isinstance(x, str):
            x = Polynomial.parse(x, self.p)
        if isinstance(x, Polynomial):
            if x.modulus != self.p:
                raise ModulusMismatchError(
                    f"polynomial over Z_{x.modulus.p}, field over Z_{self.p.p}"
                )
            return FieldElement(x % self.modulus.poly, self)
        if isinstance(x, int):
            return self.element_at(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def __str__(self) -> str:
        v = self.variable
        return f"GF({self.q}) = Z_{self.p.p}[{v}]/<{self.modulus.format(v)}>"


@dataclass(frozen=True)
class FieldElement:
    """A canonical residue (degree < r) inside a FieldSpec."""

    rep: Polynomial
    field: FieldSpec

    def __post_init__(self):
        if self.rep.modulus != self.field.p:
            raise ModulusMismatchError(
                f"representative over Z_{self.rep.modulus.p}, "
                f"field over Z_{self.field.p.p}"
            )
        if self.rep.degree >= self.field.r:
            raise ValueError(
                f"representative {self.rep} not reduced below degree {self.field.r}"
            )

    @property
    def code(self) -> int:
        """Base-p value of the coefficient vector; the enumeration index."""
        p, out = self.field.p.p, 0
        for c in reversed(self.rep.coeffs):
            out = out * p + c
        return out

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(
                f"mixed fields {self.field} and {other.field}"
            )

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.rep + other.rep, self.field)

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.rep - other.rep, self.field)

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.rep, self.field)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(
            (self.rep * other.rep) % self.field.modulus.poly, self.field
        )

    def __rmul__(self, n: int) -> FieldElement:
        """Additive multiple n*a by double-and-add."""
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (-n) * (-self)
        if self.field.r == 1:  # degree-0 representative: plain Z_p scaling
            return FieldElement(
                Polynomial.constant(n * self.rep.coefficient(0), self.field.p),
                self.field,
            )
        acc, base = self.field.zero, self
        while n:
            if n & 1:
                acc = acc + base
            base = base + base
            n >>= 1
        return acc

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        if self.field.r == 1:
            return FieldElement(
                Polynomial.constant(
                    pow(self.rep.coefficient(0), e, self.field.p.p), self.field.p
                ),
                self.field,
            )
        return FieldElement(
            self.rep.powmod(e, self.field.modulus.poly), self.field
        )

    def inverse(self) -> FieldElement:
        """Multiplicative inverse via extended Euclid against the modulus."""
        if self.is_zero:
            raise ZeroDivisionError(f"0 has no inverse in {self.field}")
        g, s, _ = self.rep.xgcd(self.field.modulus.poly)
        assert g.degree == 0  # modulus irreducible, rep nonzero
        return FieldElement(s % self.field.modulus.poly, self.field)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self * other.inverse()

    def frobenius(self) -> FieldElement:
        """The map a -> a^p; a ring homomorphism in characteristic p."""
        return self ** self.field.p.p

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        return self.rep.format(self.field.variable)

    def __repr__(self) -> str:
        return f"<{self} in GF({self.field.q})>"


def frobenius(a: FieldElement) -> FieldElement:
    return a.frobenius()


def default_modulus(p: PrimeModulus, r: int) -> IrreduciblePolynomial:
    """First irreducible of degree r in ascending base-p coefficient order."""
    if p.p**r > MAX_FIELD_ORDER:
        raise ScaleLimitError(f"{p.p}^{r} exceeds the scale guard {MAX_FIELD_ORDER}")
    if r == 1:
        return IrreduciblePolynomial(Polynomial.x(p))
    for value in range(p.p**r):
        digits, v = [], value
        for _ in range(r):
            v, rem = divmod(v, p.p)
            digits.append(rem)
        cand = Polynomial(tuple(digits) + (1,), p)
        if find_factor(cand) is None:
            return IrreduciblePolynomial(cand)
    raise AssertionError(f"no irreducible of degree {r} over Z_{p.p}")


def construct_field(
    p: int | PrimeModulus,
    r: int,
    modulus: Polynomial | IrreduciblePolynomial | str | None = None,
    variable: str | None = None,
) -> FieldSpec:
    """Build a validated GF(p^r) representation.

    With no modulus given, the first degree-r irreducible in ascending
    base-p coefficient order is chosen.  A reducible modulus is rejected
    with a witness factor inside the error.
    """
    prime = as_modulus(p)
    if r < 1:
        raise ValueError(f"extension degree must be positive, got {r}")
    if prime.p**r > MAX_FIELD_ORDER:
        raise ScaleLimitError(
            f"{prime.p}^{r} exceeds the scale guard {MAX_FIELD_ORDER}"
        )
    if modulus is None:
        irr = default_modulus(prime, r)
    else:
        if isinstance(modulus, str):
            modulus = Polynomial.parse(modulus, prime)
        if isinstance(modulus, IrreduciblePolynomial):
            poly = modulus.poly
        else:
            poly = modulus
        if poly.modulus != prime:
            raise ModulusMismatchError(
                f"modulus over Z_{poly.modulus.p}, field over Z_{prime.p}"
            )
        if poly.degree != r:
            raise DegreeMismatchError(
                f"modulus {poly} has degree {poly.degree}, expected {r}"
            )
        irr = IrreduciblePolynomial(poly)
    return FieldSpec(prime, r, irr, variable or "z")


def enumerate_elements(F: FieldSpec) -> list[FieldElement]:
    """All q elements, ordered by base-p value of the coefficient vector."""
    if F.q > MAX_FIELD_ORDER:
        raise ScaleLimitError(f"order {F.q} exceeds {MAX_FIELD_ORDER}")
    return [F.element_at(i) for i in range(F.q)]


def operation_tables(
    F: FieldSpec,
) -> tuple[tuple[tuple[FieldElement, ...], ...], tuple[tuple[FieldElement, ...], ...]]:
    """The q x q addition and multiplication tables, indexed by the
    canonical element enumeration."""
    if F.q > MAX_TABLE_ORDER:
        raise ScaleLimitError(
            f"tables are quadratic in q; {F.q} exceeds {MAX_TABLE_ORDER}"
        )
    elems = enumerate_elements(F)
    add = tuple(tuple(a + b for b in elems) for a in elems)
    mul = tuple(tuple(a * b for b in elems) for a in elems)
    return add, mul


def operation_code_tables(F: FieldSpec) -> tuple[list[list[int]], list[list[int]]]:
    """Same tables with entries as enumeration codes (plain ints)."""
    add, mul = operation_tables(F)
    return (
        [[e.code for e in row] for row in add],
        [[e.code for e in row] for row in mul],
    )


@dataclass
class FieldAxiomReport:
    field: FieldSpec
    exhaustive: bool
    cases: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def check_field_axioms(
    F: FieldSpec, seed: int = 0, samples: int = 2000
) -> FieldAxiomReport:
    """Verify associativity, commutativity, distributivity, identities and
    inverses: exhaustively over the operation tables for q <= 64, on seeded
    random triples above that."""
    failures: list[str] = []
    if F.q <= 64:
        add, mul = operation_code_tables(F)
        n = F.q
        cases = 0
        for a in range(n):
            if add[0][a] != a:
                failures.append(f"0 + e{a} != e{a}")
            if mul[1][a] != a:
                failures.append(f"1 * e{a} != e{a}")
            if mul[0][a] != 0:
                failures.append(f"0 * e{a} != 0")
            if 0 not in add[a]:
                failures.append(f"e{a} has no additive inverse")
            if a and 1 not in mul[a]:
                failures.append(f"e{a} has no multiplicative inverse")
            for b in range(n):
                if add[a][b] != add[b][a]:
                    failures.append(f"+ not commutative at ({a},{b})")
                if mul[a][b] != mul[b][a]:
                    failures.append(f"* not commutative at ({a},{b})")
                for c in range(n):
                    cases += 1
                    if add[add[a][b]][c] != add[a][add[b][c]]:
                        failures.append(f"+ not associative at ({a},{b},{c})")
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        failures.append(f"* not associative at ({a},{b},{c})")
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                        failures.append(f"not distributive at ({a},{b},{c})")
        return FieldAxiomReport(F, True, cases, failures)

    rng = random.Random(seed)
    cases = 0
    for _ in range(samples):
        a = F.element_at(rng.randrange(F.q))
        b = F.element_at(rng.randrange(F.q))
        c = F.element_at(rng.randrange(F.q))
        cases += 1
        if (a + b) + c != a + (b + c):
            failures.append(f"+ not associative at ({a},{b},{c})")
        if (a * b) * c != a * (b * c):
            failures.append(f"* not associative at ({a},{b},{c})")
        if a * (b + c) != a * b + a * c:
            failures.append(f"not distributive at ({a},{b},{c})")
        if a + b != b + a or a * b != b * a:
            failures.append(f"not commutative at ({a},{b})")
        if a + F.zero != a or a * F.one != a:
            failures.append(f"identity failure at {a}")
        if not a.is_zero and a * a.inverse() != F.one:
            failures.append(f"inverse failure at {a}")
    return FieldAxiomReport(F, False, cases, failures)
