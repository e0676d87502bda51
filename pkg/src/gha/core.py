"""The algebra H(f): exact normal forms over the basis x^i h^j y^k.

An element is a finite sum of terms x^i * g(h) * y^k, stored as a map
(i, k) -> g.  The defining relations

    h*x = x*f(h),    y*h = f(h)*y,    y*x - x*y = f(h) - h

enter through the commutation rules g(h)*x^j = x^j*sigma^j(g) and
y^k*g(h) = sigma^k(g)*y^k together with the rewrite

    y * x^j = x^j * y + x^(j-1) * (sigma^j(h) - h),

whose iterates (the normal forms of y^k x^j) are memoized per context.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import FieldMismatch, UnsupportedCase
from .field import FieldDesc, FieldElement
from .poly import NEG_INF, Poly, sigma_apply, sigma_power_h


class Context:
    """A fixed defining polynomial f together with its coefficient field."""

    __slots__ = ("f", "field", "n", "lead_coeff", "subleading_coeff", "_yx_cache", "_z_pow_cache")

    def __init__(self, f: Poly):
        self.f = f
        self.field = f.field
        self.n = int(f.degree) if not f.is_zero else 0
        self.lead_coeff = f.leading_coeff
        self.subleading_coeff = f.coeff(self.n - 1) if self.n >= 1 else FieldElement.zero(f.field)
        self._yx_cache: dict[tuple[int, int], "AlgebraElement"] = {}
        self._z_pow_cache: list["AlgebraElement"] = []

    def scalar(self, value) -> FieldElement:
        """Coerce an int, Fraction or embeddable FieldElement into the field."""
        if isinstance(value, FieldElement):
            return value.embed(self.field) if value.desc != self.field else value
        return FieldElement.rational(value, self.field)

    def embed(self, target: FieldDesc) -> "Context":
        return Context(self.f.embed(target))

    def __eq__(self, other):
        return isinstance(other, Context) and self.f == other.f

    def __repr__(self):
        return f"Context(f = {self.f.to_text()} over {self.field})"


class Generators(NamedTuple):
    x: "AlgebraElement"
    y: "AlgebraElement"
    h: "AlgebraElement"
    z: "AlgebraElement"


class AlgebraElement:
    """A normal form: finite sum of x^i * g_{i,k}(h) * y^k."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms=None):
        clean: dict[tuple[int, int], Poly] = {}
        for (i, k), g in (terms or {}).items():
            if i < 0 or k < 0:
                raise ValueError("term exponents must be nonnegative")
            if not isinstance(g, Poly):
                g = Poly.constant(ctx.field, g)
            elif g.field != ctx.field:
                raise FieldMismatch(f"term over {g.field}, context over {ctx.field}")
            if not g.is_zero:
                clean[(i, k)] = g
        self.ctx = ctx
        self.terms = clean

    # --- construction ---------------------------------------------------
    @classmethod
    def zero(cls, ctx: Context) -> "AlgebraElement":
        return cls(ctx)

    @classmethod
    def one(cls, ctx: Context) -> "AlgebraElement":
        return cls(ctx, {(0, 0): Poly.one(ctx.field)})

    @classmethod
    def from_poly(cls, ctx: Context, g: Poly) -> "AlgebraElement":
        return cls(ctx, {(0, 0): g})

    @classmethod
    def from_scalar(cls, ctx: Context, c) -> "AlgebraElement":
        return cls(ctx, {(0, 0): Poly.constant(ctx.field, ctx.scalar(c))})

    # --- queries -----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def standard_degree(self) -> int | None:
        """The common degree i - k, None when mixed; zero counts as degree 0."""
        degs = {i - k for (i, k) in self.terms}
        if not degs:
            return 0
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return self.standard_degree() is not None

    # --- linear structure ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            if other.ctx != self.ctx:
                raise FieldMismatch("elements live over different contexts")
            return other
        if isinstance(other, Poly):
            return AlgebraElement.from_poly(self.ctx, other)
        if isinstance(other, (int, Fraction, FieldElement)):
            return AlgebraElement.from_scalar(self.ctx, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for key, g in o.terms.items():
            _add_term(out, key[0], key[1], g, self.ctx.field)
        return AlgebraElement(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.ctx, {key: -g for key, g in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return multiply(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return multiply(o, self)

    def __pow__(self, e: int) -> "AlgebraElement":
        if not isinstance(e, int) or e < 0:
            raise ValueError("element exponent must be a nonnegative integer")
        result = AlgebraElement.one(self.ctx)
        for _ in range(e):
            result = multiply(result, self)
        return result

    def embed(self, target: FieldDesc) -> "AlgebraElement":
        ctx = self.ctx.embed(target)
        return AlgebraElement(ctx, {key: g.embed(target) for key, g in self.terms.items()})

    # --- display -----------------------------------------------------------
    def to_text(self) -> str:
        """Terms in ascending lexicographic (i, k) order, joined by ' + '."""
        if self.is_zero:
            return "0"
        parts = []
        for (i, k) in sorted(self.terms):
            g = self.terms[(i, k)]
            factors = []
            if i:
                factors.append(f"x^{i}")
            factors.append(f"({g.to_text()})")
            if k:
                factors.append(f"y^{k}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<{self.to_text()}>"


def _add_term(out: dict, i: int, k: int, g: Poly, field: FieldDesc) -> None:
    cur = out.get((i, k))
    out[(i, k)] = g if cur is None else cur + g


def generators(ctx: Context) -> Generators:
    """x, y, h and the central element z = x*y - h."""
    one = Poly.one(ctx.field)
    h = Poly.gen(ctx.field)
    return Generators(
        x=AlgebraElement(ctx, {(1, 0): one}),
        y=AlgebraElement(ctx, {(0, 1): one}),
        h=AlgebraElement(ctx, {(0, 0): h}),
        z=AlgebraElement(ctx, {(1, 1): one, (0, 0): -h}),
    )


def _y_pow_x_pow(ctx: Context, k: int, j: int) -> AlgebraElement:
    """Normal form of y^k x^j, memoized on the context.

    y^k x^j = (y^(k-1) x^j) y + (y^(k-1) x^(j-1)) (sigma^j(h) - h).
    """
    key = (k, j)
    cached = ctx._yx_cache.get(key)
    if cached is not None:
        return cached
    if k == 0:
        result = AlgebraElement(ctx, {(j, 0): Poly.one(ctx.field)})
    elif j == 0:
        result = AlgebraElement(ctx, {(0, k): Poly.one(ctx.field)})
    else:
        first = _shift_y(_y_pow_x_pow(ctx, k - 1, j))
        corr = sigma_power_h(ctx.f, j) - Poly.gen(ctx.field)
        second = _right_mul_poly(_y_pow_x_pow(ctx, k - 1, j - 1), corr)
        result = first + second
    ctx._yx_cache[key] = result
    return result


def _shift_y(e: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(e.ctx, {(i, k + 1): g for (i, k), g in e.terms.items()})


def _right_mul_poly(e: AlgebraElement, p: Poly) -> AlgebraElement:
    """e * p(h): the poly commutes past each y^k as sigma^k(p)."""
    out: dict[tuple[int, int], Poly] = {}
    for (i, k), g in e.terms.items():
        _add_term(out, i, k, g * sigma_apply(p, e.ctx.f, k), e.ctx.field)
    return AlgebraElement(e.ctx, out)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Product in H(f), term by term.

    (x^i g y^k)(x^j gh y^l) is immediate when k = 0 or j = 0; otherwise
    the memoized normal form of y^k x^j is spliced in the middle.
    """
    if a.ctx != b.ctx:
        raise FieldMismatch("elements live over different contexts")
    ctx = a.ctx
    f = ctx.f
    out: dict[tuple[int, int], Poly] = {}
    for (i, k), g in a.terms.items():
        for (j, l), gh in b.terms.items():
            if k == 0:
                _add_term(out, i + j, l, sigma_apply(g, f, j) * gh, ctx.field)
            elif j == 0:
                _add_term(out, i, k + l, g * sigma_apply(gh, f, k), ctx.field)
            else:
                mid = _y_pow_x_pow(ctx, k, j)
                for (p, q), w in mid.terms.items():
                    # x^i g (x^p w y^q) gh y^l = x^(i+p) sigma^p(g) w sigma^q(gh) y^(q+l)
                    left = sigma_apply(g, f, p) * w
                    _add_term(out, i + p, q + l, left * sigma_apply(gh, f, q), ctx.field)
    return AlgebraElement(ctx, out)


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return multiply(a, b) - multiply(b, a)


def homogeneous_parts(a: AlgebraElement) -> dict[int, AlgebraElement]:
    """Split along the standard grading deg(x^i g y^k) = i - k; keys ascending."""
    buckets: dict[int, dict] = {}
    for (i, k), g in a.terms.items():
        buckets.setdefault(i - k, {})[(i, k)] = g
    return {l: AlgebraElement(a.ctx, buckets[l]) for l in sorted(buckets)}


def sigma_h0(theta: AlgebraElement) -> AlgebraElement:
    """sigma on the degree-0 subalgebra H_0.

    x^k g y^k -> x^k sigma(g) y^k + x^(k-1) (sigma^k(h) - h) g y^(k-1);
    characterized by theta * x = x * sigma(theta) and y * theta = sigma(theta) * y.
    """
    ctx = theta.ctx
    out: dict[tuple[int, int], Poly] = {}
    for (i, k), g in theta.terms.items():
        if i != k:
            raise UnsupportedCase("sigma is defined only on the degree-0 subalgebra")
        _add_term(out, k, k, sigma_apply(g, ctx.f, 1), ctx.field)
        if k:
            corr = (sigma_power_h(ctx.f, k) - Poly.gen(ctx.field)) * g
            _add_term(out, k - 1, k - 1, corr, ctx.field)
    return AlgebraElement(ctx, out)


def apply_iota(a: AlgebraElement) -> AlgebraElement:
    """The anti-automorphism x <-> y, h fixed: x^i g y^k -> x^k g y^i."""
    return AlgebraElement(a.ctx, {(k, i): g for (i, k), g in a.terms.items()})


def apply_phi_lambda(lam, a: AlgebraElement) -> AlgebraElement:
    """The torus automorphism x -> lam x, y -> lam^-1 y, h -> h."""
    lam = a.ctx.scalar(lam)
    if lam.is_zero:
        raise UnsupportedCase("phi_lambda needs a nonzero lambda")
    out = {}
    for (i, k), g in a.terms.items():
        out[(i, k)] = g * (lam ** (i - k))
    return AlgebraElement(a.ctx, out)
