import random

import pytest

from ffkit import ModulusMismatchError, ParseError, check_prime
from ffkit.polynomial import Polynomial, detect_variable


def P(text, p):
    return Polynomial.parse(text, check_prime(p))


def random_poly(rng, p, max_deg):
    deg = rng.randrange(max_deg + 1)
    return Polynomial(
        tuple(rng.randrange(p) for _ in range(deg + 1)), check_prime(p)
    )


class TestParsing:
    def test_examples(self):
        assert P("x^2+x+1", 2).coeffs == (1, 1, 1)
        assert P("2x+2", 3).coeffs == (2, 2)
        assert P("x^2-x", 3).coeffs == (0, 2, 1)

    def test_any_single_letter(self):
        assert P("z^2+z+1", 2) == P("w^2+w+1", 2) == P("x^2+x+1", 2)

    def test_constants_and_zero(self):
        assert P("0", 5).is_zero
        assert P("7", 5).coeffs == (2,)

    def test_whitespace_and_signs(self):
        assert P(" x^2 + 2 x + 1 ", 3).coeffs == (1, 2, 1)
        assert P("-x", 3).coeffs == (0, 2)
        assert P("x - x", 3).is_zero

    def test_repeated_terms_accumulate(self):
        assert P("x+x", 2).is_zero
        assert P("x+x+1", 3).coeffs == (1, 2)

    @pytest.mark.parametrize("bad", ["", "x+", "^2", "x^", "2^3", "x+y", "x*x"])
    def test_rejects(self, bad):
        with pytest.raises(ParseError):
            P(bad, 3)

    def test_error_position(self):
        with pytest.raises(ParseError) as err:
            P("x+y", 3)
        assert err.value.position == 2

    def test_round_trip_random(self):
        rng = random.Random(7)
        for p in (2, 3, 5):
            for _ in range(200):
                f = random_poly(rng, p, 8)
                assert Polynomial.parse(f.format(), check_prime(p)) == f
                assert Polynomial.parse(f.format("w"), check_prime(p)) == f

    def test_detect_variable(self):
        assert detect_variable("w^3+w^2+1") == "w"
        assert detect_variable("42") is None


class TestFormatting:
    def test_canonical_output(self):
        assert str(P("x^2+x+1", 2)) == "x^2+x+1"
        assert str(P("x^9-x", 3)) == "x^9+2x"
        assert str(Polynomial.zero(check_prime(2))) == "0"
        assert str(P("3x^2", 3)) == "0"
        assert P("x^3+x+1", 2).format("z") == "z^3+z+1"


class TestArithmetic:
    def test_addition_examples(self):
        assert (P("x+1", 2) + P("x+1", 2)).is_zero
        assert P("x^2+1", 2) + P("x", 2) == P("x^2+x+1", 2)
        f = P("x^3+x", 5)
        assert f + Polynomial.zero(check_prime(5)) == f

    def test_multiplication_examples(self):
        two = check_prime(2)
        assert P("x+1", 2) * P("x+1", 2) == P("x^2+1", 2)
        prod = P("x", 2) * P("x-1", 2) * P("x^2+x+1", 2)
        assert prod == P("x^4+x", 2)
        prod = P("x^3+x+1", 2) * P("x^3+x^2+1", 2) * P("x", 2) * P("x+1", 2)
        assert prod == Polynomial.parse("x^8+x", two)

    def test_degree_of_product(self):
        rng = random.Random(11)
        for _ in range(100):
            f, g = random_poly(rng, 5, 6), random_poly(rng, 5, 6)
            if f.is_zero or g.is_zero:
                continue
            assert (f * g).degree == f.degree + g.degree

    def test_zero_degree_marker(self):
        assert Polynomial.zero(check_prime(3)).degree == -1

    def test_divmod_examples(self):
        q, r = divmod(P("x^4+x", 2), P("x^2+x+1", 2))
        assert q == P("x^2+x", 2) and r.is_zero
        q, r = divmod(P("z^2+2z+1", 2), P("z^2+z+1", 2))
        assert q == P("1", 2) and r == P("z", 2)
        f = P("x^3+2x+1", 3)
        assert divmod(f, f) == (P("1", 3), Polynomial.zero(check_prime(3)))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(P("x", 2), Polynomial.zero(check_prime(2)))

    def test_division_contract_random(self):
        rng = random.Random(23)
        for p in (2, 3, 5, 7):
            for _ in range(150):
                f = random_poly(rng, p, 8)
                g = random_poly(rng, p, 5)
                if g.is_zero:
                    continue
                q, r = divmod(f, g)
                assert q * g + r == f
                assert r.degree < g.degree

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatchError):
            P("x", 2) + P("x", 3)


class TestGcd:
    def test_examples(self):
        g = P("x^4+x", 2).gcd(P("x^2+x+1", 2))
        assert g == P("x^2+x+1", 2)
        # derived check: the gcd really divides x^4+x
        assert (P("x^4+x", 2) % g).is_zero

        f = P("2x^3+x", 3)
        assert f.gcd(Polynomial.zero(check_prime(3))) == f.monic()

        g = P("x^3+x+1", 2).gcd(P("x^3+x^2+1", 2))
        assert g == P("1", 2)

    def test_gcd_of_zeros_undefined(self):
        zero = Polynomial.zero(check_prime(2))
        with pytest.raises(ValueError):
            zero.gcd(zero)

    def test_gcd_is_monic_and_divides(self):
        rng = random.Random(5)
        for _ in range(100):
            f, g = random_poly(rng, 3, 6), random_poly(rng, 3, 6)
            if f.is_zero and g.is_zero:
                continue
            d = f.gcd(g)
            assert d.is_monic
            for h in (f, g):
                if not h.is_zero:
                    assert (h % d).is_zero

    def test_xgcd_bezout(self):
        rng = random.Random(9)
        for _ in range(100):
            f, g = random_poly(rng, 5, 5), random_poly(rng, 5, 5)
            if f.is_zero and g.is_zero:
                continue
            d, s, t = f.xgcd(g)
            assert s * f + t * g == d


class TestEvaluation:
    def test_examples(self, Z2, Z3):
        f = P("x^2+x+1", 2)
        assert f.evaluate(Z2.residue(0)).value == 1
        assert f.evaluate(Z2.residue(1)).value == 1
        g = P("x^9-x", 3)
        assert g.evaluate(Z3.residue(2)).value == 0

    def test_horner_matches_sum(self, Z3):
        rng = random.Random(3)
        for _ in range(100):
            f = random_poly(rng, 3, 6)
            for a in range(3):
                direct = sum(c * a**i for i, c in enumerate(f.coeffs)) % 3
                assert f.evaluate(Z3.residue(a)).value == direct


class TestPowMod:
    def test_examples(self, Z2):
        x = Polynomial.x(Z2)
        assert x.powmod(4, P("x^2+x+1", 2)) == x
        assert x.powmod(8, P("x^3+x+1", 2)) == x
        f = P("x^5+x^2", 2)
        assert f.powmod(0, P("x^2+x+1", 2)) == Polynomial.one(Z2)

    def test_matches_naive(self):
        rng = random.Random(17)
        for _ in range(50):
            f = random_poly(rng, 3, 4)
            m = random_poly(rng, 3, 3)
            if m.degree < 1:
                continue
            e = rng.randrange(12)
            naive = Polynomial.one(check_prime(3))
            for _ in range(e):
                naive = (naive * f) % m
            assert f.powmod(e, m) == naive

    def test_large_exponent_stays_reduced(self, Z2):
        x = Polynomial.x(Z2)
        out = x.powmod(2**20, P("x^3+x+1", 2))
        assert out.degree < 3

    def test_degenerate_modulus(self, Z2):
        x = Polynomial.x(Z2)
        with pytest.raises(ZeroDivisionError):
            x.powmod(3, Polynomial.zero(Z2))
        with pytest.raises(ValueError):
            x.powmod(3, Polynomial.one(Z2))


class TestRootTheorem:
    def test_equivalence_exhaustive_small_degrees(self):
        # f(a) = 0 iff (x - a) divides f, for every monic f of degree <= 4
        for p in (2, 3):
            mod = check_prime(p)
            for deg in range(1, 5):
                for packed in range(p**deg):
                    digits, v = [], packed
                    for _ in range(deg):
                        v, rem = divmod(v, p)
                        digits.append(rem)
                    f = Polynomial(tuple(digits) + (1,), mod)
                    for a in range(p):
                        linear = Polynomial((-a, 1), mod)
                        has_root = f.evaluate(mod.residue(a)).value == 0
                        divides = (f % linear).is_zero
                        assert has_root == divides
