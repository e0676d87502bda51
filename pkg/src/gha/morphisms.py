"""Derivations and automorphisms of H(f).

A candidate derivation is given by the images of the three generators
and extended by the Leibniz rule over the normal-form factorization
x^i h^j y^k.  The automorphism group splits as the scaling torus
phi_lambda times a finite cyclic part of x-fixing maps

    x -> x,  y -> a*y,  h -> a*h + b,

cut out by the polynomial identity f(a*h + b) = a*f(h) + b together
with a^(n-1) = 1 and b = (a - 1)*a_{n-1} / (n*a_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import AlgebraElement, Context, generators, homogeneous_parts, multiply
from .errors import FieldMismatch, UnsupportedCase
from .field import FieldDesc, FieldElement, divisors
from .poly import Poly


@dataclass(frozen=True)
class DerivationSpec:
    """A candidate derivation, recorded by the images of x, y and h."""

    ctx: Context
    im_x: AlgebraElement
    im_y: AlgebraElement
    im_h: AlgebraElement

    def __post_init__(self):
        for image in (self.im_x, self.im_y, self.im_h):
            if image.ctx != self.ctx:
                raise FieldMismatch("derivation images live over different contexts")

    @staticmethod
    def diagonal(ctx: Context, lam=1) -> "DerivationSpec":
        """lam * d, where d is the grading derivation x -> x, y -> -y, h -> 0."""
        gens = generators(ctx)
        c = ctx.scalar(lam)
        return DerivationSpec(ctx, gens.x * c, gens.y * (-c), AlgebraElement.zero(ctx))


def _derive_power(base: AlgebraElement, image: AlgebraElement, p: int) -> AlgebraElement:
    """Leibniz on base^p: sum_r base^r image base^(p-1-r)."""
    ctx = base.ctx
    total = AlgebraElement.zero(ctx)
    powers = [AlgebraElement.one(ctx)]
    for _ in range(p):
        powers.append(multiply(powers[-1], base))
    for r in range(p):
        total = total + multiply(multiply(powers[r], image), powers[p - 1 - r])
    return total


def _derive_poly(d: DerivationSpec, g: Poly) -> AlgebraElement:
    """Leibniz on g(h): sum_j c_j sum_s h^s im_h h^(j-1-s)."""
    ctx = d.ctx
    h = generators(ctx).h
    total = AlgebraElement.zero(ctx)
    for j, c in enumerate(g.coeffs):
        if j and not c.is_zero:
            total = total + _derive_power(h, d.im_h, j) * c
    return total


def apply_derivation(d: DerivationSpec, a: AlgebraElement) -> AlgebraElement:
    """The Leibniz extension of d, applied term by term."""
    ctx = d.ctx
    if a.ctx != ctx:
        raise FieldMismatch("element lives over a different context")
    gens = generators(ctx)
    out = AlgebraElement.zero(ctx)
    for (i, k), g in a.terms.items():
        head = gens.x ** i
        mid = AlgebraElement.from_poly(ctx, g)
        tail = gens.y ** k
        out = out + _derive_power(gens.x, d.im_x, i) * mid * tail
        out = out + head * _derive_poly(d, g) * tail
        out = out + head * mid * _derive_power(gens.y, d.im_y, k)
    return out


def check_derivation(d: DerivationSpec) -> bool:
    """Does the Leibniz extension respect the three defining relations?"""
    gens = generators(d.ctx)
    f_elem = AlgebraElement.from_poly(d.ctx, d.ctx.f)
    df = _derive_poly(d, d.ctx.f)
    dx, dy, dh = d.im_x, d.im_y, d.im_h
    rel1 = dh * gens.x + gens.h * dx == dx * f_elem + gens.x * df
    rel2 = dy * gens.h + gens.y * dh == df * gens.y + f_elem * dy
    rel3 = dy * gens.x + gens.y * dx - dx * gens.y - gens.x * dy == df - dh
    return rel1 and rel2 and rel3


def derivation_homogeneous_parts(d: DerivationSpec) -> dict[int, DerivationSpec]:
    """Split into graded components d_r with d_r(H_l) contained in H_(l+r)."""
    pieces: dict[int, dict[str, AlgebraElement]] = {}
    for attr, image, gen_deg in (("im_x", d.im_x, 1), ("im_y", d.im_y, -1), ("im_h", d.im_h, 0)):
        for l, part in homogeneous_parts(image).items():
            pieces.setdefault(l - gen_deg, {})[attr] = part
    zero = AlgebraElement.zero(d.ctx)
    return {
        r: DerivationSpec(
            d.ctx,
            pieces[r].get("im_x", zero),
            pieces[r].get("im_y", zero),
            pieces[r].get("im_h", zero),
        )
        for r in sorted(pieces)
    }


def _scalar_multiple_of(a: AlgebraElement, key: tuple[int, int]) -> FieldElement | None:
    """c with a = c * (the basis monomial at key), or None."""
    if a.is_zero:
        return FieldElement.zero(a.ctx.field)
    if set(a.terms) != {key}:
        return None
    g = a.terms[key]
    if g.degree > 0:
        return None
    return g.coeff(0)


def classify_locally_finite(d: DerivationSpec) -> FieldElement | None:
    """Match against the locally finite normal form x -> c x, y -> -c y, h -> 0.

    For deg f > 1 these scalings are exactly the locally finite derivations;
    returns the scalar c, or None when d is not of that shape.
    """
    if not d.ctx.f.degree > 1:
        raise UnsupportedCase("classification of derivations requires deg f > 1")
    if not check_derivation(d):
        raise UnsupportedCase("the given images do not define a derivation")
    if not d.im_h.is_zero:
        return None
    lam = _scalar_multiple_of(d.im_x, (1, 0))
    mu = _scalar_multiple_of(d.im_y, (0, 1))
    if lam is None or mu is None or mu != -lam:
        return None
    return lam


@dataclass(frozen=True)
class NilpotencyProbe:
    nilpotent: bool
    steps: int

    def __str__(self):
        return f"NilpotentAt({self.steps})" if self.nilpotent else f"NotNilpotentWithin({self.steps})"


def derivation_power_bounded(d: DerivationSpec, a: AlgebraElement, max_iter: int) -> NilpotencyProbe:
    """Iterate d on a until it vanishes, giving up after max_iter steps."""
    if a.is_zero:
        return NilpotencyProbe(True, 0)
    current = a
    for k in range(1, max_iter + 1):
        current = apply_derivation(d, current)
        if current.is_zero:
            return NilpotencyProbe(True, k)
    return NilpotencyProbe(False, max_iter)


# --- automorphisms ---------------------------------------------------------


def x_fixing_pair_is_valid(f: Poly, a: FieldElement, b: FieldElement) -> bool:
    """Exact test of f(a*h + b) = a*f(h) + b over the pair's field."""
    field = a.desc
    fe = f.embed(field)
    line = Poly(field, (b, a))
    return fe.compose(line) == fe * a + Poly.constant(field, b)


@dataclass(frozen=True)
class AutGroup:
    """Aut(H(f)) = (scaling torus phi_lambda) x (cyclic x-fixing part).

    generator is the pair (a, b) of the x-fixing map x -> x, y -> a*y,
    h -> a*h + b generating the cyclic part; its order divides n - 1.
    """

    n: int
    cyclic_order: int
    generator: tuple[FieldElement, FieldElement]
    field: FieldDesc

    def describe(self) -> str:
        return f"C* x Z_{self.cyclic_order}"


def _root_of_unity(desc: FieldDesc, d: int) -> FieldElement:
    if d == 1:
        return FieldElement.one(desc)
    if d == 2:
        return FieldElement.rational(-1, desc)
    return FieldElement.zeta_power(desc, desc.m // d)


def automorphism_group(ctx: Context) -> AutGroup:
    """The automorphism group for deg f > 1.

    The x-fixing pairs form a cyclic group of order k | n - 1, so they are
    exactly the d-th roots of unity for d | k; it suffices to test, for each
    divisor d of n - 1, the canonical primitive d-th root with its forced
    b = (a - 1)*a_{n-1} / (n*a_n), extending the field by zeta_d as needed.
    """
    if not ctx.f.degree > 1:
        raise UnsupportedCase("automorphism group is computed only for deg f > 1")
    n = ctx.n
    base = ctx.field
    best = None
    for d in divisors(n - 1):
        desc = base if d <= 2 else base.join(FieldDesc(d))
        a = _root_of_unity(desc, d)
        lead = ctx.lead_coeff.embed(desc)
        sub = ctx.subleading_coeff.embed(desc)
        b = (a - 1) * sub / (lead * n)
        if x_fixing_pair_is_valid(ctx.f, a, b):
            if best is None or d > best[0]:
                best = (d, a, b, desc)
    d, a, b, desc = best  # d = 1, the identity pair, always passes
    return AutGroup(n=n, cyclic_order=d, generator=(a, b), field=desc)


def apply_x_fixing_automorphism(
    pair: tuple[FieldElement, FieldElement], e: AlgebraElement
) -> AlgebraElement:
    """Apply x -> x, y -> a*y, h -> a*h + b to a normal form.

    The element is lifted into the smallest field containing both its own
    scalars and the pair; the pair is verified against f first.
    """
    a, b = pair
    if a.desc != b.desc:
        raise FieldMismatch("pair entries live in different fields")
    target = e.ctx.field.join(a.desc)
    a, b = a.embed(target), b.embed(target)
    ctx = e.ctx.embed(target)
    if not x_fixing_pair_is_valid(ctx.f, a, b):
        raise UnsupportedCase("pair does not satisfy f(a*h + b) = a*f(h) + b")
    line = Poly(target, (b, a))
    terms = {}
    for (i, k), g in e.terms.items():
        terms[(i, k)] = g.embed(target).compose(line) * (a ** k)
    return AlgebraElement(ctx, terms)
