"""Structural decision procedures for H(f).

Classification flags, the non-Noetherian witness chain, membership in the
center C[z] and in C[z, h], and the admissible generator gradings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import AlgebraElement, Context, generators, multiply
from .errors import UnsupportedCase
from .field import FieldElement
from .poly import NEG_INF, Poly, compose_mod, decompose_as_polynomial_in, poly_gcd, sigma_power_h


class CenterKind(Enum):
    POLYNOMIAL_IN_Z = "C[z]"
    NOT_COMPUTED_DEG_ONE = "not computed (deg f = 1)"


@dataclass(frozen=True)
class Classification:
    deg_f: int
    is_domain: bool
    is_noetherian: bool
    is_generalized_down_up: bool
    center_description: CenterKind


def classify(ctx: Context) -> Classification:
    """Degree-driven structural flags."""
    d = ctx.f.degree
    return Classification(
        deg_f=0 if d == NEG_INF else int(d),  # the zero polynomial counts as degree 0
        is_domain=d >= 1,
        is_noetherian=d == 1,
        is_generalized_down_up=d <= 1,
        center_description=(
            CenterKind.NOT_COMPUTED_DEG_ONE if d == 1 else CenterKind.POLYNOMIAL_IN_Z
        ),
    )


@dataclass(frozen=True)
class WitnessReport:
    """Whether h lies in the ideal (sigma^1(h), ..., sigma^(n+1)(h)) of C[h]."""

    n: int
    generator_gcd: Poly
    is_member: bool


def noetherian_witness(ctx: Context, max_n: int) -> list[WitnessReport]:
    """The ascending-chain witness for n = 0..max_n; requires f(0) = 0.

    C[h] is a principal ideal domain, so membership of h reduces to
    divisibility by the monic gcd of the generators.  sigma^j(h) has
    degree (deg f)^j, so the gcd is updated through composition modulo
    the current gcd instead of ever materializing sigma^j(h).
    """
    f = ctx.f
    if not f.coeff(0).is_zero:
        raise UnsupportedCase(
            "witness chain needs f(0) = 0; substitute h -> h + alpha for a root "
            "alpha of f(h) - h first (see find_shift_root and shift_polynomial)"
        )
    h = Poly.gen(ctx.field)
    reports = []
    g = f.monic()  # gcd of sigma^1(h) .. sigma^j(h) so far
    s = f % g if not g.is_zero else None  # sigma^j(h) mod g
    j = 1
    for n in range(max_n + 1):
        while j < n + 1:
            j += 1
            if g.is_zero:
                continue  # every sigma^j(h) is 0, the gcd stays 0
            s = compose_mod(f, s, g)  # sigma^j(h) = f(sigma^(j-1)(h))
            new_g = poly_gcd(g, s)
            if new_g != g:
                g = new_g
                s = f % g
                for _ in range(j - 1):
                    s = compose_mod(f, s, g)
        member = (not g.is_zero) and (h % g).is_zero
        reports.append(WitnessReport(n=n, generator_gcd=g, is_member=member))
    return reports


def find_shift_root(f: Poly) -> FieldElement | None:
    """A rational root alpha of f(h) - h, if one exists.

    Only rational candidates are searched (rational root theorem); None
    means no rational root, including the case of irrational-only roots.
    """
    p = f - Poly.gen(f.field)
    if p.is_zero:
        return FieldElement.zero(f.field)
    if not all(c.is_rational_value for c in p.coeffs):
        return None
    coeffs = [c.as_fraction() for c in p.coeffs]
    low = 0
    while not coeffs[low]:
        low += 1
    if low > 0:
        return FieldElement.zero(f.field)  # h | f(h) - h
    denom = 1
    for c in coeffs:
        denom = math.lcm(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    for num in _int_divisors(abs(ints[0])):
        for den in _int_divisors(abs(ints[-1])):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if p(FieldElement.rational(cand, f.field)).is_zero:
                    return FieldElement.rational(cand, f.field)
    return None


def _int_divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def shift_polynomial(f: Poly, alpha: FieldElement) -> Poly:
    """F(h) = f(h + alpha) - alpha; when f(alpha) = alpha, F(0) = 0."""
    line = Poly(f.field, (alpha, 1))
    return f.compose(line) - Poly.constant(f.field, alpha)


def _z_power(ctx: Context, k: int) -> AlgebraElement:
    cache = ctx._z_pow_cache
    if not cache:
        cache.append(AlgebraElement.one(ctx))
    z = generators(ctx).z
    while len(cache) <= k:
        cache.append(multiply(cache[-1], z))
    return cache[k]


def center_membership(a: AlgebraElement) -> Poly | None:
    """Write a = p(z) if possible; the polynomial p, else None.

    Requires deg f != 1 (for deg f = 1 the center is larger than C[z]).
    Peels the top diagonal term: z^K has (K, K) coefficient exactly 1,
    so a central candidate must carry a constant there.
    """
    ctx = a.ctx
    if ctx.f.degree == 1:
        raise UnsupportedCase("center membership is not computed when deg f = 1")
    if any(i != k for (i, k) in a.terms):
        return None
    coeffs: dict[int, FieldElement] = {}
    rem = a
    while rem.terms:
        top = max(i for (i, _) in rem.terms)
        g = rem.terms[(top, top)]
        if g.degree > 0:
            return None
        c = g.coeff(0)
        coeffs[top] = c
        rem = rem - _z_power(ctx, top) * c
    size = max(coeffs) + 1 if coeffs else 0
    return Poly(ctx.field, (coeffs.get(j, 0) for j in range(size)))


def zh_membership(a: AlgebraElement) -> dict[int, Poly] | None:
    """Write a = sum_k p_k(h) z^k if possible; {k: p_k}, else None.

    Requires deg f > 1 and a in the degree-0 subalgebra.  The (K, K)
    coefficient of p_K(h) z^K is sigma^K(p_K), so each peel is decided by
    decomposing the top diagonal coefficient as a polynomial in sigma^K(h).
    """
    ctx = a.ctx
    if not ctx.f.degree > 1:
        raise UnsupportedCase("membership in C[z, h] is decided only for deg f > 1")
    if any(i != k for (i, k) in a.terms):
        raise UnsupportedCase("element is not in the degree-0 subalgebra")
    out: dict[int, Poly] = {}
    rem = a
    while rem.terms:
        top = max(i for (i, _) in rem.terms)
        g = rem.terms[(top, top)]
        p_top = decompose_as_polynomial_in(g, sigma_power_h(ctx.f, top))
        if p_top is None:
            return None
        out[top] = p_top
        rem = rem - multiply(AlgebraElement.from_poly(ctx, p_top), _z_power(ctx, top))
    return {k: out[k] for k in sorted(out)}


@dataclass(frozen=True)
class GradingFamily:
    """All admissible generator gradings: integer multiples of the generator."""

    generator: tuple[int, int, int] = (1, -1, 0)

    def member(self, l: int) -> tuple[int, int, int]:
        dx, dy, dh = self.generator
        return (l * dx, l * dy, l * dh)

    def contains(self, triple: tuple[int, int, int]) -> bool:
        dx, dy, dh = triple
        return dh == 0 and dx + dy == 0

    def __str__(self):
        return "(l, -l, 0) for every integer l"


def _support(p: Poly) -> set[int]:
    return {j for j, c in enumerate(p.coeffs) if not c.is_zero}


def is_admissible_grading(ctx: Context, triple: tuple[int, int, int]) -> bool:
    """Do the degrees (d_x, d_y, d_h) make all three relations homogeneous?"""
    dx, dy, dh = triple
    supp_f = _support(ctx.f)
    rel1 = {dh + dx} | {dx + j * dh for j in supp_f}  # h*x = x*f(h)
    rel2 = {dy + dh} | {j * dh + dy for j in supp_f}  # y*h = f(h)*y
    supp_fmh = _support(ctx.f - Poly.gen(ctx.field))
    rel3 = {dy + dx} | {j * dh for j in supp_fmh}  # y*x - x*y = f(h) - h
    return len(rel1) == 1 and len(rel2) == 1 and len(rel3) == 1


def admissible_generator_gradings(ctx: Context) -> GradingFamily:
    """Solve the homogeneity constraints of the relations; requires deg f > 1.

    h*x = x*f(h) forces (j - 1)*d_h = 0 for every exponent j in the
    support of f.  Since deg f > 1 the support contains some j != 1
    (including the monomial case f = a*h^n), so d_h = 0; then
    y*x - x*y = f(h) - h gives d_x + d_y = 0.
    """
    if not ctx.f.degree > 1:
        raise UnsupportedCase("grading analysis requires deg f > 1")
    forcing = [j - 1 for j in _support(ctx.f) if j != 1]
    assert forcing, "deg f > 1 guarantees a constraint forcing d_h = 0"
    return GradingFamily()
