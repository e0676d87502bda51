"""Cyclotomic field arithmetic over exact rationals."""

import random
from fractions import Fraction

import pytest

from gha.errors import FieldMismatch, NoEmbedding
from gha.field import (
    RATIONALS,
    FieldDesc,
    FieldElement,
    cyclotomic_coeffs,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
)

Q3 = FieldDesc(3)
Q4 = FieldDesc(4)
Q6 = FieldDesc(6)


def test_divisors_and_phi():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert [euler_phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


KNOWN_CYCLOTOMICS = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    10: (1, -1, 1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


def test_cyclotomic_coeffs_against_table():
    for m, coeffs in KNOWN_CYCLOTOMICS.items():
        assert cyclotomic_coeffs(m) == tuple(Fraction(c) for c in coeffs)


def test_cyclotomic_product_recovers_power_minus_one():
    # prod over d | m of Phi_d(t) must equal t^m - 1; checked with plain
    # list convolution so the comparison does not reuse the implementation
    for m in range(1, 25):
        prod = [Fraction(1)]
        for d in divisors(m):
            phi_d = cyclotomic_coeffs(d)
            out = [Fraction(0)] * (len(prod) + len(phi_d) - 1)
            for a, ca in enumerate(prod):
                for b, cb in enumerate(phi_d):
                    out[a + b] += ca * cb
            prod = out
        expected = [Fraction(0)] * (m + 1)
        expected[0], expected[m] = Fraction(-1), Fraction(1)
        assert prod == expected


def test_cyclotomic_polynomial_text():
    assert cyclotomic_polynomial(6).to_text("t") == "t^2 - t + 1"
    assert cyclotomic_polynomial(1).to_text("t") == "t - 1"


def test_rational_arithmetic():
    a = FieldElement.rational(Fraction(2, 3))
    b = FieldElement.rational(Fraction(1, 6))
    assert (a + b).as_fraction() == Fraction(5, 6)
    assert (a * b).as_fraction() == Fraction(1, 9)
    assert (a - b).as_fraction() == Fraction(1, 2)
    assert (a / b).as_fraction() == 4
    assert (a ** -1).as_fraction() == Fraction(3, 2)
    assert str(a) == "2/3"


def test_zeta4_squares_to_minus_one():
    z = FieldElement.zeta(Q4)
    assert z * z == FieldElement.rational(-1, Q4)
    assert z ** 4 == FieldElement.one(Q4)
    assert str(z) == "zeta"


def test_zeta3_inverse_frozen():
    z = FieldElement.zeta(Q3)
    inv = z.inverse()
    assert inv.coords == (Fraction(-1), Fraction(-1))
    assert inv * z == FieldElement.one(Q3)
    assert str(inv) == "-zeta - 1"


def test_minimal_polynomial_annihilates_zeta():
    for m in range(1, 25):
        desc = FieldDesc(m)
        z = FieldElement.zeta(desc)
        phi = cyclotomic_coeffs(m)
        acc = FieldElement.zero(desc)
        power = FieldElement.one(desc)
        for c in phi:
            acc = acc + power * FieldElement.rational(c, desc)
            power = power * z
        assert acc.is_zero
        assert z ** m == FieldElement.one(desc)
        for j in range(1, m):
            assert z ** j != FieldElement.one(desc)


def test_zeta_power_wraps_modulo_m():
    z = FieldElement.zeta(Q6)
    assert FieldElement.zeta_power(Q6, 7) == z
    assert FieldElement.zeta_power(Q6, -1) == z ** 5
    assert FieldElement.zeta_power(Q6, 0) == FieldElement.one(Q6)


def test_embedding_zeta3_into_q_zeta6():
    z3 = FieldElement.zeta(Q3)
    lifted = z3.embed(Q6)
    assert lifted.coords == (Fraction(-1), Fraction(1))
    # zeta_6^2 is the canonical image of zeta_3
    assert lifted == FieldElement.zeta_power(Q6, 2)
    assert lifted ** 3 == FieldElement.one(Q6)


def test_embedding_is_ring_homomorphism():
    rng = random.Random(61)
    for _ in range(25):
        coords = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2))
        other = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2))
        a, b = FieldElement(Q4, coords), FieldElement(Q4, other)
        big = FieldDesc(12)
        assert (a + b).embed(big) == a.embed(big) + b.embed(big)
        assert (a * b).embed(big) == a.embed(big) * b.embed(big)


def test_embedding_requires_divisibility():
    with pytest.raises(NoEmbedding):
        FieldElement.zeta(Q4).embed(Q6)
    assert not Q4.embeds_into(Q6)
    assert Q3.embeds_into(Q6)
    assert Q3.join(Q4) == FieldDesc(12)


def test_rationals_embed_everywhere():
    half = FieldElement.rational(Fraction(1, 2))
    lifted = half.embed(Q6)
    assert lifted.desc == Q6
    assert lifted.as_fraction() == Fraction(1, 2)


def test_field_axioms_random():
    rng = random.Random(1201)
    for m in (1, 3, 4, 6, 8, 12):
        desc = FieldDesc(m)
        deg = desc.degree
        def pick():
            return FieldElement(
                desc, tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(deg))
            )
        for _ in range(20):
            a, b, c = pick(), pick(), pick()
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            if not a.is_zero:
                assert a * a.inverse() == FieldElement.one(desc)


def test_mixed_field_operations_raise():
    with pytest.raises(FieldMismatch):
        FieldElement.zeta(Q3) + FieldElement.zeta(Q4)
    with pytest.raises(FieldMismatch):
        FieldElement.zeta(Q3) * FieldElement.zeta(Q4)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        FieldElement.zero(Q4).inverse()
    with pytest.raises(ZeroDivisionError):
        FieldElement.one(RATIONALS) / FieldElement.zero(RATIONALS)


def test_int_and_fraction_coercion():
    z = FieldElement.zeta(Q4)
    assert z + 0 == z
    assert z * 2 == z + z
    assert (z - Fraction(1, 2)) + Fraction(1, 2) == z
    assert 1 - z == -(z - 1)


def test_display_forms():
    z = FieldElement.zeta(Q6)
    e = z * 2 - 1 + z * z  # zeta^2 reduces to zeta - 1 in Q(zeta_6)
    assert str(e) == "3*zeta - 2"
    assert str(FieldElement.zero(Q6)) == "0"
    assert str(-z) == "-zeta"


def test_desc_str_and_m_validation():
    assert str(RATIONALS) == "Q"
    assert str(Q6) == "Q(zeta_6)"
    with pytest.raises(ValueError):
        FieldDesc(0)
