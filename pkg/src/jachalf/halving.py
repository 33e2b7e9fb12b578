"""Division by 2 on the Jacobian: all 2^{2g} halves of a curve point.

Given P = (a, b), every choice of square roots r_i of a - alpha_i with
prod r_i = -b determines one divisor class with 2*class = P.  Its Mumford
pair comes out of closed formulas in the elementary symmetric functions
s_i of the r_i:

    U(x) = (-1)^g [ (a-x)^g + sum_{j=1..g} s_{2j} (a-x)^{g-j} ]
    V(x) = [ sum_{j=1..g} s_{2j-1} (a-x)^{g-j+1} ] - b - s_1 * (-1)^g U(x)

and the map is inverted by r_i = s_1 + (-1)^g V(alpha_i) / U(alpha_i).
All root-tuple arithmetic runs at the tower (quadratic) level for a uniform
code path; rational results are detected afterwards coefficient-wise.
"""

from __future__ import annotations

from .errors import (
    InfinityInput,
    InternalInvariantViolation,
    NotAHalf,
    WeierstrassCollision,
)
from .field import QUAD
from .poly import Poly, elementary_symmetric, gcd
from .jacobian import MumfordDivisor, add, to_class


class SqrtTuple:
    """A tuple (r_1, ..., r_{2g+1}) with r_i^2 = a - alpha_i and prod r_i = -b."""

    __slots__ = ("curve", "point", "r", "index")

    def __init__(self, curve, point, r, index, check=True):
        self.curve = curve
        self.point = point
        self.r = tuple(r)
        self.index = index
        if check:
            self._check()

    def _check(self):
        a = self.point.a.promote()
        b = self.point.b.promote()
        prod = self.curve.ctx.one(QUAD)
        for ri, alpha in zip(self.r, self.curve.roots):
            if ri * ri != a - alpha.promote():
                raise InternalInvariantViolation("r_i^2 != a - alpha_i")
            prod = prod * ri
        if prod != -b:
            raise InternalInvariantViolation("prod r_i != -b")

    def encode(self):
        return [ri.encode() for ri in self.r]

    def __repr__(self):
        return f"SqrtTuple(index={self.index}, r={self.encode()})"


class HalfClass:
    """A half of P: the Mumford divisor plus its generating data.

    Carries the sqrt tuple, the symmetric functions s_1..s_{2g+1}, and the
    intermediate v_D = (-1)^g s_1 U + V used by the f - v_D^2 identity.
    """

    __slots__ = ("divisor", "tuple", "s", "v_d")

    def __init__(self, divisor, tup, s, v_d):
        self.divisor = divisor
        self.tuple = tup
        self.s = s
        self.v_d = v_d

    @property
    def U(self):
        return self.divisor.U

    @property
    def V(self):
        return self.divisor.V

    @property
    def index(self):
        return self.tuple.index

    def __repr__(self):
        return f"HalfClass(index={self.index}, {self.divisor!r})"


def sqrt_tuples(point):
    """All 2^{2g} sign choices, in deterministic counter order.

    Counter bit i-1 flips the canonical root of a - alpha_i; the sign of the
    last coordinate is forced by prod r_i = -b.  For a Weierstrass input the
    zero coordinate is pinned and the 2g nonzero signs are free instead.
    """
    if point.infinite:
        raise InfinityInput("cannot halve the point at infinity")
    curve = point.curve
    ctx = curve.ctx
    g = curve.g
    a = point.a.promote()
    b = point.b.promote()
    rhos = [(a - alpha.promote()).sqrt().promote() for alpha in curve.roots]

    if point.b.is_zero():
        zero_at = next(i for i, rho in enumerate(rhos) if rho.is_zero())
        free = [i for i in range(2 * g + 1) if i != zero_at]
        forced = None
    else:
        free = list(range(2 * g))
        forced = 2 * g

    out = []
    for counter in range(1 << (2 * g)):
        r = list(rhos)
        for bit, i in enumerate(free):
            if counter >> bit & 1:
                r[i] = -r[i]
        if forced is not None:
            prod = ctx.one(QUAD)
            for i in free:
                prod = prod * r[i]
            r[forced] = (-b) / prod
        out.append(SqrtTuple(curve, point, r, counter, check=False))
    return out


def mumford_from_tuple(tup, verify=True):
    """Mumford pair of the half determined by a sqrt tuple."""
    curve = tup.curve
    ctx = curve.ctx
    g = curve.g
    a = tup.point.a.promote()
    b = tup.point.b.promote()
    s = elementary_symmetric(ctx, tup.r)

    amx = Poly(ctx, (a, ctx.from_int(-1, QUAD)), QUAD)  # the polynomial a - x
    amx_pows = [Poly(ctx, (1,), QUAD)]
    for _ in range(g):
        amx_pows.append(amx_pows[-1] * amx)

    w = amx_pows[g]
    for j in range(1, g + 1):
        w = w + s[2 * j - 1] * amx_pows[g - j]  # s_{2j} is s[2j-1] (0-based)
    sign = ctx.from_int((-1) ** g, QUAD)
    u_poly = sign * w

    v_poly = Poly.zero(ctx, QUAD)
    for j in range(1, g + 1):
        v_poly = v_poly + s[2 * j - 2] * amx_pows[g - j + 1]  # s_{2j-1}
    v_poly = v_poly - Poly.constant(b) - s[0] * w
    v_d = sign * s[0] * u_poly + v_poly

    divisor = MumfordDivisor(curve, u_poly, v_poly, validate=False)
    half = HalfClass(divisor, tup, s, v_d)
    if verify:
        _verify_structure(half)
    return half


def _verify_structure(half):
    curve = half.divisor.curve
    g = curve.g
    u_poly, v_poly = half.U, half.V
    f = curve.f_at(QUAD)
    if u_poly.degree() != g or not u_poly.is_monic():
        raise InternalInvariantViolation("U is not monic of degree g")
    if v_poly.degree() >= g:
        raise InternalInvariantViolation("deg V >= g")
    if (v_poly % u_poly) != v_poly:
        raise InternalInvariantViolation("V mod U is not a no-op")
    if gcd(u_poly, f).degree() != 0:
        raise InternalInvariantViolation("U shares a root with f")
    if not ((v_poly * v_poly - f) % u_poly).is_zero():
        raise InternalInvariantViolation("U does not divide V^2 - f")


def halve(point, verify=True):
    """All 2^{2g} divisor classes doubling to P, in sign-counter order.

    With verify on (the default) every output is checked: pairwise distinct,
    doubles back to cl((P) - (infinity)) under the Cantor oracle, U coprime
    to f, and P itself outside the support.  A root of U at x = a is only
    possible with V(a) = -b there, i.e. the support may contain the
    involuted point but never P.
    """
    if point.infinite:
        raise InfinityInput("cannot halve the point at infinity")
    tuples = sqrt_tuples(point)
    halves = [mumford_from_tuple(t, verify=verify) for t in tuples]
    if verify:
        keys = {h.divisor.key() for h in halves}
        if len(keys) != len(halves):
            raise InternalInvariantViolation("halves are not pairwise distinct")
        target = to_class(point)
        for h in halves:
            if add(h.divisor, h.divisor) != target:
                raise InternalInvariantViolation("double(half) != class of P")
            if point.b.is_zero() and not h.U(point.a.promote()):
                raise InternalInvariantViolation("P lies in the support of a half")
    return halves


def recover_tuple(d, point=None, s1=None):
    """Invert mumford_from_tuple via r_i = s_1 + (-1)^g V(alpha_i)/U(alpha_i).

    Accepts a HalfClass (s_1 and the point come from its generating data) or
    a bare MumfordDivisor together with the point and s_1.
    """
    if isinstance(d, HalfClass):
        if s1 is None:
            s1 = d.s[0]
        if point is None:
            point = d.tuple.point
        divisor = d.divisor
    else:
        divisor = d
        if point is None or s1 is None:
            raise ValueError("bare divisor needs both the point and s_1")
    if point.infinite:
        raise InfinityInput("halves of the point at infinity are out of scope")

    curve = divisor.curve
    if add(divisor, divisor) != to_class(point):
        raise NotAHalf("divisor does not double to the given point")

    g = curve.g
    sign = curve.ctx.from_int((-1) ** g, QUAD)
    u_poly = divisor.U.promote()
    v_poly = divisor.V.promote()
    r = []
    for alpha in curve.roots:
        ua = u_poly(alpha.promote())
        if ua.is_zero():
            raise WeierstrassCollision("U vanishes at a curve root")
        r.append(s1 + sign * v_poly(alpha.promote()) / ua)
    index = getattr(d, "index", -1) if isinstance(d, HalfClass) else -1
    return SqrtTuple(curve, point, r, index)
