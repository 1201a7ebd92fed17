"""Dense univariate polynomial arithmetic over Z_p.

Coefficients are stored little-endian (index i holds the coefficient of x^i)
with no trailing zeros; the zero polynomial is the empty tuple and has
degree -1.  All arithmetic keeps coefficients canonical in [0, p).

Text format
-----------
Input grammar: ``term (('+'|'-') term)*`` where a term is
``[coeff][letter['^' exponent]]`` with decimal coefficient and exponent;
whitespace is ignored and any single ASCII letter may serve as the variable.
Canonical output uses descending powers, '+' separators, coefficients
reduced into [0, p), and omits zero terms and unit coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ModulusMismatchError, ParseError
from .prime_field import PrimeModulus, Residue, xgcd as int_xgcd

MAX_PARSE_EXPONENT = 1 << 16


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...]
    modulus: PrimeModulus

    def __post_init__(self):
        p = self.modulus.p
        coeffs = [c % p for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], modulus: PrimeModulus) -> Polynomial:
        return cls(tuple(coeffs), modulus)

    @classmethod
    def zero(cls, modulus: PrimeModulus) -> Polynomial:
        return cls((), modulus)

    @classmethod
    def one(cls, modulus: PrimeModulus) -> Polynomial:
        return cls((1,), modulus)

    @classmethod
    def constant(cls, c: int, modulus: PrimeModulus) -> Polynomial:
        return cls((c,), modulus)

    @classmethod
    def x(cls, modulus: PrimeModulus) -> Polynomial:
        return cls((0, 1), modulus)

    @classmethod
    def monomial(cls, degree: int, modulus: PrimeModulus, coeff: int = 1) -> Polynomial:
        return cls((0,) * degree + (coeff,), modulus)

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 marks the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: Polynomial) -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatchError(
                f"mixed moduli {self.modulus.p} and {other.modulus.p}"
            )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out), self.modulus)

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs), self.modulus)

    def __sub__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(self.modulus)
        p = self.modulus.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(tuple(c % p for c in out), self.modulus)

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Long division: returns (q, rem) with self = q*other + rem,
        deg rem < deg other."""
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.modulus.p
        den = other.coeffs
        dd = len(den) - 1
        rem = list(self.coeffs)
        if len(rem) - 1 < dd:
            return Polynomial.zero(self.modulus), self
        inv_lead = int_xgcd(den[-1], p)[1] % p
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] % p
            if c == 0:
                continue
            factor = (c * inv_lead) % p
            quot[k - dd] = factor
            for i in range(dd + 1):
                rem[k - dd + i] = (rem[k - dd + i] - factor * den[i]) % p
        return (
            Polynomial(tuple(quot), self.modulus),
            Polynomial(tuple(rem[:dd]), self.modulus),
        )

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def divides(self, other: Polynomial) -> bool:
        return (other % self).is_zero

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.one(self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self) -> Polynomial:
        if self.is_zero or self.is_monic:
            return self
        p = self.modulus.p
        inv = int_xgcd(self.leading_coefficient, p)[1]
        return Polynomial(tuple(c * inv for c in self.coeffs), self.modulus)

    def gcd(self, other: Polynomial) -> Polynomial:
        """Monic greatest common divisor via the Euclidean algorithm."""
        self._check(other)
        a, b = self, other
        if a.is_zero and b.is_zero:
            raise ValueError("gcd(0, 0) is undefined")
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
        """Extended Euclid: (g, s, t) with s*self + t*other = g, g monic."""
        self._check(other)
        zero, one = Polynomial.zero(self.modulus), Polynomial.one(self.modulus)
        old_r, r = self, other
        old_s, s = one, zero
        old_t, t = zero, one
        while not r.is_zero:
            q, rem = divmod(old_r, r)
            old_r, r = r, rem
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        if old_r.is_zero:
            raise ValueError("gcd(0, 0) is undefined")
        inv = Polynomial.constant(
            int_xgcd(old_r.leading_coefficient, self.modulus.p)[1], self.modulus
        )
        return old_r.monic(), old_s * inv, old_t * inv

    def derivative(self) -> Polynomial:
        return Polynomial(
            tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1)
            if len(self.coeffs) > 1
            else (),
            self.modulus,
        )

    def evaluate(self, a: Residue) -> Residue:
        """Horner evaluation at a point of Z_p."""
        if a.modulus != self.modulus:
            raise ModulusMismatchError(
                f"mixed moduli {self.modulus.p} and {a.modulus.p}"
            )
        p = self.modulus.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a.value + c) % p
        return Residue(acc, self.modulus)

    def powmod(self, e: int, m: Polynomial) -> Polynomial:
        """self^e reduced mod m, by square-and-multiply with reduction
        each step.  Keeps degrees below deg m even for e up to 2^20."""
        self._check(m)
        if e < 0:
            raise ValueError("negative exponent")
        if m.is_zero:
            raise ZeroDivisionError("reduction modulo the zero polynomial")
        if m.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        result = Polynomial.one(self.modulus) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    # -- text format -------------------------------------------------------

    def format(self, var: str = "x") -> str:
        """Canonical rendering: descending powers, '+' separators, zero
        terms and unit coefficients omitted."""
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                tail = var if i == 1 else f"{var}^{i}"
                terms.append(head + tail)
        return "+".join(terms)

    @classmethod
    def parse(cls, text: str, modulus: PrimeModulus) -> Polynomial:
        """Parse the text grammar above; round-trips with format()."""
        coeffs: dict[int, int] = {}
        var: str | None = None
        i, n = 0, len(text)

        def skip_ws(j: int) -> int:
            while j < n and text[j].isspace():
                j += 1
            return j

        def read_int(j: int) -> tuple[int, int]:
            start = j
            while j < n and text[j].isdigit():
                j += 1
            if j == start:
                raise ParseError(start, "expected a decimal number")
            return int(text[start:j]), j

        i = skip_ws(i)
        if i >= n:
            raise ParseError(i, "empty polynomial")
        sign = 1
        if text[i] in "+-":
            if text[i] == "-":
                sign = -1
            i = skip_ws(i + 1)
        while True:
            if i >= n:
                raise ParseError(i, "expected a term")
            coeff = 1
            has_coeff = False
            if text[i].isdigit():
                coeff, i = read_int(i)
                has_coeff = True
                i = skip_ws(i)
            power = 0
            if i < n and text[i].isalpha():
                letter = text[i]
                if not letter.isascii():
                    raise ParseError(i, f"invalid variable {letter!r}")
                if var is None:
                    var = letter
                elif letter != var:
                    raise ParseError(i, f"inconsistent variable {letter!r}")
                i = skip_ws(i + 1)
                power = 1
                if i < n and text[i] == "^":
                    i = skip_ws(i + 1)
                    power, i = read_int(i)
                    if power > MAX_PARSE_EXPONENT:
                        raise ParseError(i, f"exponent {power} too large")
                    i = skip_ws(i)
            elif not has_coeff:
                raise ParseError(i, f"unexpected character {text[i]!r}")
            else:
                i = skip_ws(i)
            coeffs[power] = coeffs.get(power, 0) + sign * coeff
            if i >= n:
                break
            if text[i] == "+":
                sign = 1
            elif text[i] == "-":
                sign = -1
            else:
                raise ParseError(i, f"expected '+' or '-', got {text[i]!r}")
            i = skip_ws(i + 1)
        out = [0] * (max(coeffs) + 1)
        for power, c in coeffs.items():
            out[power] = c
        return cls(tuple(out), modulus)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r} over Z_{self.modulus.p})"


def detect_variable(text: str) -> str | None:
    """First ASCII letter in a polynomial string, or None for constants."""
    for ch in text:
        if ch.isalpha() and ch.isascii():
            return ch
    return None


def product(polys: Sequence[Polynomial], modulus: PrimeModulus) -> Polynomial:
    out = Polynomial.one(modulus)
    for f in polys:
        out = out * f
    return out
