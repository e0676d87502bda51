"""Seeded random builders shared by the test modules.

Everything takes an explicit random.Random so failures reproduce from the
seed alone.
"""

from __future__ import annotations

import random
from fractions import Fraction

from gha.core import AlgebraElement, Context
from gha.field import FieldElement
from gha.poly import Poly


def random_fraction(rng: random.Random, span: int = 5) -> Fraction:
    num = rng.randint(-span, span)
    den = rng.randint(1, span)
    return Fraction(num, den)


def random_scalar(rng: random.Random, field, span: int = 5) -> FieldElement:
    if field.is_rational:
        return FieldElement.rational(random_fraction(rng, span), field)
    coords = tuple(random_fraction(rng, span) for _ in range(field.degree))
    return FieldElement(field, coords)


def random_poly(rng: random.Random, field, max_degree: int = 3, span: int = 5) -> Poly:
    deg = rng.randint(0, max_degree)
    coeffs = [random_scalar(rng, field, span) for _ in range(deg + 1)]
    return Poly(field, tuple(coeffs))


def random_element(
    rng: random.Random,
    ctx: Context,
    max_ik: int = 3,
    max_terms: int = 3,
    max_degree: int = 2,
    span: int = 3,
) -> AlgebraElement:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        i = rng.randint(0, max_ik)
        k = rng.randint(0, max_ik)
        terms[(i, k)] = random_poly(rng, ctx.field, max_degree, span)
    return AlgebraElement(ctx, terms)


def random_diagonal_element(
    rng: random.Random,
    ctx: Context,
    max_k: int = 3,
    max_degree: int = 2,
    span: int = 3,
) -> AlgebraElement:
    """Element of the degree-0 subalgebra: every term has i == k."""
    terms = {}
    for _ in range(rng.randint(1, 3)):
        k = rng.randint(0, max_k)
        terms[(k, k)] = random_poly(rng, ctx.field, max_degree, span)
    return AlgebraElement(ctx, terms)
