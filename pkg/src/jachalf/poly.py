"""Dense univariate polynomials over a field context.

Coefficients are FieldElements, low-to-high, with no trailing zeros; the
zero polynomial has an empty coefficient tuple and degree -1.  Degrees stay
tiny here (at most 2g+1), so everything is plain schoolbook arithmetic.
"""

from __future__ import annotations

from .errors import CtxMismatch, DivisionByZero
from .field import BASE, QUAD, FieldElement


class Poly:
    __slots__ = ("ctx", "level", "coeffs")

    def __init__(self, ctx, coeffs, level=None):
        cs = []
        for c in coeffs:
            if isinstance(c, int):
                c = ctx.from_int(c)
            elif not ctx.same_field(c.ctx):
                raise CtxMismatch("coefficient from a different context")
            cs.append(c)
        if level is None:
            level = QUAD if any(c.level == QUAD for c in cs) else BASE
        if level == QUAD:
            cs = [c.promote() for c in cs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.level = level
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, ctx, level=BASE):
        return cls(ctx, (), level)

    @classmethod
    def constant(cls, c):
        return cls(c.ctx, (c,), c.level)

    @classmethod
    def x(cls, ctx, level=BASE):
        return cls(ctx, (0, 1), level)

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one(self.level)

    def promote(self):
        if self.level == QUAD:
            return self
        return Poly(self.ctx, self.coeffs, QUAD)

    def _pair(self, other):
        if isinstance(other, FieldElement):
            other = Poly.constant(other)
        elif isinstance(other, int):
            other = Poly(self.ctx, (other,), self.level)
        elif not isinstance(other, Poly):
            return None, None
        if not self.ctx.same_field(other.ctx):
            raise CtxMismatch("polynomials over different contexts")
        if self.level == other.level:
            return self, other
        return self.promote(), other.promote()

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        n = max(len(a.coeffs), len(b.coeffs))
        zero = a.ctx.zero(a.level)
        ac = a.coeffs + (zero,) * (n - len(a.coeffs))
        bc = b.coeffs + (zero,) * (n - len(b.coeffs))
        return Poly(a.ctx, [x + y for x, y in zip(ac, bc)], a.level)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        n = max(len(a.coeffs), len(b.coeffs))
        zero = a.ctx.zero(a.level)
        ac = a.coeffs + (zero,) * (n - len(a.coeffs))
        bc = b.coeffs + (zero,) * (n - len(b.coeffs))
        return Poly(a.ctx, [x - y for x, y in zip(ac, bc)], a.level)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Poly(self.ctx, [-c for c in self.coeffs], self.level)

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        if a.is_zero() or b.is_zero():
            return Poly.zero(a.ctx, a.level)
        zero = a.ctx.zero(a.level)
        out = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(b.coeffs):
                out[i + j] = out[i + j] + x * y
        return Poly(a.ctx, out, a.level)

    __rmul__ = __mul__

    def __divmod__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        if b.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if a.degree() < b.degree():
            return Poly.zero(a.ctx, a.level), a
        lcinv = b.leading().inverse()
        zero = a.ctx.zero(a.level)
        r = list(a.coeffs)
        q = [zero] * (len(a.coeffs) - len(b.coeffs) + 1)
        db = len(b.coeffs) - 1
        for i in range(len(q) - 1, -1, -1):
            c = r[i + db] * lcinv
            if not c.is_zero():
                q[i] = c
                for j, bc in enumerate(b.coeffs):
                    r[i + j] = r[i + j] - c * bc
        return Poly(a.ctx, q, a.level), Poly(a.ctx, r[:db], a.level)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly(self.ctx, (other,), self.level)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.ctx.same_field(other.ctx):
            return False
        a, b = (self, other) if self.level == other.level else (
            self.promote(),
            other.promote(),
        )
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash(tuple(c for c in self.coeffs))

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        inv = self.leading().inverse()
        return Poly(self.ctx, [c * inv for c in self.coeffs], self.level)

    def __call__(self, x0):
        """Horner evaluation at a field element (or polynomial, for composition)."""
        if isinstance(x0, Poly):
            return self.compose(x0)
        acc = self.ctx.zero(self.level if x0.level == BASE else QUAD)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def compose(self, inner):
        acc = Poly.zero(self.ctx, self.level)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def encode(self):
        return [c.encode() for c in self.coeffs]

    def __repr__(self):
        return f"Poly({self.encode()!r})"


def poly_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def xgcd(a, b):
    """Extended gcd with monic result: returns (g, s, t) with s*a + t*b = g."""
    ctx, level = a.ctx, a.level if a.level == b.level else QUAD
    r0, r1 = a, b
    s0, s1 = Poly(ctx, (1,), level), Poly.zero(ctx, level)
    t0, t1 = Poly.zero(ctx, level), Poly(ctx, (1,), level)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = r0.leading().inverse()
    scale = Poly.constant(inv)
    return r0.monic(), s0 * scale, t0 * scale


def gcd(a, b):
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def from_roots(ctx, roots, level=None):
    """Monic product of linear factors x - r_i."""
    rs = [ctx.from_int(r) if isinstance(r, int) else r for r in roots]
    if level is None:
        level = QUAD if any(r.level == QUAD for r in rs) else BASE
    acc = Poly(ctx, (1,), level)
    for r in rs:
        acc = acc * Poly(ctx, (-r, 1), level)
    return acc


def elementary_symmetric(ctx, vals):
    """(s_1, ..., s_n) for the given values, by the product recurrence."""
    vs = [ctx.from_int(v) if isinstance(v, int) else v for v in vals]
    level = QUAD if any(v.level == QUAD for v in vs) else BASE
    zero = ctx.zero(level)
    es = [ctx.one(level)]
    for v in vs:
        v = v.promote() if level == QUAD else v
        es.append(zero)
        for j in range(len(es) - 1, 0, -1):
            es[j] = es[j] + v * es[j - 1]
    return tuple(es[1:])
