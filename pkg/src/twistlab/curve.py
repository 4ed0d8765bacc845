"""Weierstrass curves over small finite fields.

A curve is a long Weierstrass equation

    y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6

with coefficients in one FieldCtx.  Points are None (the point at
infinity) or (x, y) tuples of field elements.  Everything here is exact
and exhaustive; the fields in scope are small enough that per-x-column
point enumeration is the right tool.
"""

from . import gf
from .gf import FieldElem


class WeierstrassCurve:
    """A long Weierstrass equation over a fixed finite field."""

    __slots__ = ("ctx", "a1", "a2", "a3", "a4", "a6", "_points")

    def __init__(self, ctx, a1, a2, a3, a4, a6):
        self.ctx = ctx
        coeffs = []
        for a in (a1, a2, a3, a4, a6):
            e = ctx.element(a)
            coeffs.append(e)
        self.a1, self.a2, self.a3, self.a4, self.a6 = coeffs
        self._points = None

    @property
    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __eq__(self, other):
        if isinstance(other, WeierstrassCurve):
            return self.ctx == other.ctx and self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.n) + tuple(a.coeffs for a in self.coefficients))

    def __repr__(self):
        names = ("a1", "a2", "a3", "a4", "a6")
        parts = ", ".join(f"{nm}={gf.element_to_str(a)}" for nm, a in zip(names, self.coefficients))
        return f"WeierstrassCurve({self.ctx}, {parts})"

    # standard quantities attached to the equation
    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.coefficients
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants()
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2 ** 3) + 36 * b2 * b4 - 216 * b6
        return c4, c6

    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants()
        return -(b2 * b2 * b8) - 8 * (b4 ** 3) - 27 * (b6 * b6) + 9 * b2 * b4 * b6

    def is_smooth(self):
        return not self.discriminant().is_zero()

    def j_invariant(self):
        disc = self.discriminant()
        if disc.is_zero():
            raise ValueError("j-invariant undefined: singular equation")
        c4, _ = self.c_invariants()
        return (c4 ** 3) / disc

    # points
    def contains(self, point):
        if point is None:
            return True
        x, y = point
        a1, a2, a3, a4, a6 = self.coefficients
        lhs = y * y + a1 * x * y + a3 * y
        rhs = x ** 3 + a2 * x * x + a4 * x + a6
        return lhs == rhs

    def enumerate_points(self):
        """All affine points plus infinity, x-column by x-column (cached)."""
        if self._points is not None:
            return list(self._points)
        ctx = self.ctx
        a1, a2, a3, a4, a6 = self.coefficients
        points = [None]
        if ctx.p == 2:
            for x in gf.enumerate_field(ctx):
                rhs = x ** 3 + a2 * x * x + a4 * x + a6
                alpha = a1 * x + a3
                if alpha.is_zero():
                    # y^2 = rhs: unique root since squaring is bijective
                    points.append((x, gf.sqrt(rhs)))
                else:
                    # substitute y = alpha*w: w^2 + w = rhs / alpha^2
                    c = rhs / (alpha * alpha)
                    for w in gf.artin_schreier_roots(c):
                        points.append((x, alpha * w))
        else:
            inv2 = ctx.scalar(2).inv()
            for x in gf.enumerate_field(ctx):
                # complete the square: (y + (a1*x + a3)/2)^2 = rhs + ((a1*x + a3)/2)^2
                shift = (a1 * x + a3) * inv2
                rhs = x ** 3 + a2 * x * x + a4 * x + a6 + shift * shift
                if rhs.is_zero():
                    points.append((x, -shift))
                elif gf.is_square(rhs):
                    r = gf.sqrt(rhs)
                    points.append((x, r - shift))
                    points.append((x, -r - shift))
        self._points = points
        return list(points)

    def point_count(self):
        return len(self.enumerate_points())

    def trace_of_frobenius(self):
        return self.ctx.q + 1 - self.point_count()

    def is_supersingular(self):
        if not self.is_smooth():
            raise ValueError("supersingularity undefined: singular equation")
        return self.trace_of_frobenius() % self.ctx.p == 0

    def base_change(self, super_ctx):
        """The same equation viewed over an extension field."""
        return WeierstrassCurve(
            super_ctx, *(gf.subfield_embed(a, super_ctx) for a in self.coefficients)
        )


def from_short(ctx, a, b):
    """Curve from a two-parameter short form.

    Odd characteristic: y^2 = x^3 + a*x + b.  Characteristic 2 has no such
    smooth model, so the convention is y^2 + y = x^3 + a*x + b there.
    """
    a = ctx.element(a)
    b = ctx.element(b)
    if ctx.p == 2:
        return WeierstrassCurve(ctx, 0, 0, 1, a, b)
    return WeierstrassCurve(ctx, 0, 0, 0, a, b)
