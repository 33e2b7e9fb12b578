"""Criteria for halves being defined over the prime field K0 = F_p.

Three levels: per-class (the symmetric functions s_1..s_{2g} lie in F_p),
all-classes (every a - alpha_i is a square already in F_p), and existence
(a - x is a square in the quotient algebra L = F_p[x]/(f)).  The last test
factors f through Frobenius orbits of its supplied roots, so no general
polynomial factorization is ever needed.
"""

from __future__ import annotations

from . import _intpoly
from .errors import (
    InternalInvariantViolation,
    NonRationalCurve,
    PointNotRational,
)
from .field import QUAD
from .poly import Poly, from_roots


def class_is_rational(half):
    """Whether the half lies in J(F_p): s_i in F_p for i = 1..2g.

    Cross-checked against the equivalent condition that every coefficient
    of (U, V) lies in F_p; disagreement would be an implementation bug.
    """
    g = half.divisor.curve.g
    by_s = all(si.in_prime_field() for si in half.s[: 2 * g])
    by_coeffs = all(
        c.in_prime_field() for c in half.U.coeffs + half.V.coeffs
    )
    if by_s != by_coeffs:
        raise InternalInvariantViolation("s_i and (U, V) rationality disagree")
    return by_s


def rational_witness(half):
    """First index i (1-based) with s_i outside F_p, or None."""
    g = half.divisor.curve.g
    for i, si in enumerate(half.s[: 2 * g], start=1):
        if not si.in_prime_field():
            return i
    return None


def frobenius_divisor(divisor):
    """Coefficient-wise Frobenius image of a Mumford pair."""
    from .jacobian import MumfordDivisor

    u = Poly(divisor.U.ctx, [c.frobenius() for c in divisor.U.coeffs], divisor.U.level)
    v = Poly(divisor.V.ctx, [c.frobenius() for c in divisor.V.coeffs], divisor.V.level)
    return MumfordDivisor(divisor.curve, u, v, validate=False)


def _require_rational_point(point):
    if point.infinite:
        raise PointNotRational("the point at infinity has no affine coordinates")
    if not (point.a.in_prime_field() and point.b.in_prime_field()):
        raise PointNotRational("point coordinates lie outside F_p")


def all_halves_rational(point):
    """Theorem-level test: every half is F_p-rational iff each alpha_i is in
    F_p and a - alpha_i is a square in F_p."""
    return all_halves_rational_report(point)["result"]


def all_halves_rational_report(point):
    _require_rational_point(point)
    curve = point.curve
    p = curve.ctx.p
    a_int = point.a.as_prime_int()
    for i, alpha in enumerate(curve.roots):
        if not alpha.in_prime_field():
            return {
                "result": False,
                "witness": {"root_index": i, "reason": "root-not-in-prime-field"},
            }
        c = (a_int - alpha.as_prime_int()) % p
        if c != 0 and pow(c, (p - 1) // 2, p) != 1:
            return {
                "result": False,
                "witness": {"root_index": i, "reason": "nonsquare-in-prime-field"},
            }
    return {"result": True, "witness": None}


def _frobenius_orbits(curve):
    """Partition the curve roots into Frobenius orbits (indices)."""
    roots = list(curve.roots)
    seen = [False] * len(roots)
    orbits = []
    for i, alpha in enumerate(roots):
        if seen[i]:
            continue
        orbit = [i]
        seen[i] = True
        beta = alpha.frobenius()
        while beta != alpha:
            for j, other in enumerate(roots):
                if not seen[j] and other == beta:
                    orbit.append(j)
                    seen[j] = True
                    break
            else:
                raise NonRationalCurve("root set is not Frobenius-stable")
            beta = beta.frobenius()
        orbits.append(orbit)
    return orbits


def rational_factors(curve):
    """Irreducible factors of f over F_p as integer coefficient tuples."""
    factors = []
    for orbit in _frobenius_orbits(curve):
        m = from_roots(curve.ctx, [curve.roots[i] for i in orbit])
        coeffs = []
        for c in m.coeffs:
            if not c.in_prime_field():
                raise NonRationalCurve("orbit polynomial has non-F_p coefficients")
            coeffs.append(c.as_prime_int())
        factors.append(tuple(coeffs))
    return factors


def divisible_by_two(point):
    """Theorem-level existence test: P is divisible by 2 in J(F_p) iff
    a - x is a square in every component field of L = F_p[x]/(f)."""
    return divisible_by_two_report(point)["result"]


def divisible_by_two_report(point):
    _require_rational_point(point)
    curve = point.curve
    p = curve.ctx.p
    if not all(c.in_prime_field() for c in curve.f.coeffs):
        raise NonRationalCurve("f does not have F_p coefficients")
    a_int = point.a.as_prime_int()

    result = True
    failing = None
    factors = rational_factors(curve)
    for m in factors:
        d = len(m) - 1
        z = _intpoly.mod(_intpoly.trim((a_int % p, p - 1)), m, p)
        if not z:
            continue  # zero component: 0 = 0^2 counts as a square
        w = _intpoly.powmod(z, (p**d - 1) // 2, m, p)
        if w != (1,):
            result = False
            failing = list(m)
            break
    return {
        "result": result,
        "weierstrass": point.is_weierstrass(),
        "witness": None if result else {"failing_factor": failing},
        "factors": [list(m) for m in factors],
    }
