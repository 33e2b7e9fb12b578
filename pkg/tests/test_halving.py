"""Division by 2: sqrt tuples, the closed formulas, and root recovery."""

import random

import pytest

from jachalf.errors import InfinityInput, NotAHalf
from jachalf.field import QUAD, ctx_new
from jachalf.halving import halve, mumford_from_tuple, recover_tuple, sqrt_tuples
from jachalf.jacobian import Point, add, curve_new, double, negate, to_class
from jachalf.poly import Poly, from_roots

from helpers import make_ctx, random_curve, random_point


class TestSqrtTuples:
    def test_weierstrass_fixture(self, p10):
        tuples = sqrt_tuples(p10)
        assert len(tuples) == 4
        # roots of (1 - alpha_i): 1, 0, 2 -> canonical sqrts 1, 0, 3
        reprs = {tuple(r.try_demote().encode()[0] for r in t.r) for t in tuples}
        assert reprs == {(1, 0, 3), (6, 0, 3), (1, 0, 4), (6, 0, 4)}
        for t in tuples:
            t._check()

    def test_product_constraint(self, p42):
        tuples = sqrt_tuples(p42)
        assert len(tuples) == 4
        b = p42.b.promote()
        for t in tuples:
            prod = t.r[0]
            for ri in t.r[1:]:
                prod = prod * ri
            assert prod == -b
            t._check()

    def test_counter_order_deterministic(self, p42):
        first = [t.encode() for t in sqrt_tuples(p42)]
        second = [t.encode() for t in sqrt_tuples(p42)]
        assert first == second
        assert [t.index for t in sqrt_tuples(p42)] == [0, 1, 2, 3]

    def test_infinity_rejected(self, curve_g1_f7):
        with pytest.raises(InfinityInput):
            sqrt_tuples(Point.infinity(curve_g1_f7))


class TestMumfordFromTuple:
    def test_fixture_classes(self, p10):
        f7 = p10.curve.ctx
        by_tuple = {}
        for t in sqrt_tuples(p10):
            key = tuple(r.try_demote().encode()[0] for r in t.r)
            half = mumford_from_tuple(t)
            by_tuple[key] = (half.U.encode(), half.V.encode())
        assert by_tuple[(1, 0, 3)] == ([[3], [1]], [[2]])  # (x-4, 2)
        assert by_tuple[(1, 0, 4)] == ([[2], [1]], [[1]])  # (x-5, 1)
        assert by_tuple[(6, 0, 4)] == ([[3], [1]], [[5]])  # (4, 5) = iota(4, 2)

    def test_eq3_identity_fixture(self, p10):
        for t in sqrt_tuples(p10):
            half = mumford_from_tuple(t)
            f = p10.curve.f_at(QUAD)
            a = p10.a.promote()
            xma = Poly(p10.curve.ctx, (-a, 1), QUAD)
            assert f - half.v_d * half.v_d == xma * half.U * half.U


class TestHalve:
    def test_order_four_example(self, p10):
        halves = halve(p10)
        got = {(h.U.encode()[0][0], h.V.encode()[0][0]) for h in halves}
        assert got == {(3, 2), (3, 5), (2, 1), (2, 6)}  # x-4 / x-5 pairs
        target = to_class(p10)
        for h in halves:
            assert double(h.divisor) == target
            assert double(double(h.divisor)).is_zero()  # order 4

    def test_cardinality_g2(self, curve_g2_f49):
        p = random_point(curve_g2_f49, random.Random(0))
        halves = halve(p, verify=True)
        assert len(halves) == 16
        assert len({h.divisor.key() for h in halves}) == 16

    def test_halve_infinity(self, curve_g1_f7):
        with pytest.raises(InfinityInput):
            halve(Point.infinity(curve_g1_f7))

    def test_involution_equivariance(self, curve_g2_f49):
        rng = random.Random(5)
        p = random_point(curve_g2_f49, rng)
        ours = {h.divisor.key() for h in halve(p, verify=False)}
        flipped = {
            negate(h.divisor).key() for h in halve(p.involution(), verify=False)
        }
        assert ours == flipped

    def test_parity_split(self, curve_g1_f7):
        """h_r(t) = prod (t - r_i) splits into the odd part t * prod(t^2 - a + c_j)
        and the even part -v_D(a - t^2)."""
        p = Point(curve_g1_f7, 4, 2)
        ctx = curve_g1_f7.ctx
        for t in sqrt_tuples(p):
            half = mumford_from_tuple(t)
            h_r = from_roots(ctx, t.r, QUAD)
            n = len(h_r.coeffs)
            zero = ctx.zero(QUAD)
            odd = Poly(ctx, [c if i % 2 else zero for i, c in enumerate(h_r.coeffs)], QUAD)
            even = h_r - odd
            a = p.a.promote()
            amt2 = Poly(ctx, (a, zero, ctx.from_int(-1, QUAD)), QUAD)  # a - t^2
            # U(x) = (-1)^g prod (x - (a - c_j^2)) means prod(t^2 - a + c_j) is
            # (-1)^g U(a - t^2) up to the same sign convention
            sign = ctx.from_int((-1) ** curve_g1_f7.g, QUAD)
            assert odd == Poly.x(ctx, QUAD) * (sign * half.U.compose(amt2))
            assert even == -half.v_d.compose(amt2)

    def test_support_can_contain_involuted_point(self):
        """For a point of odd order the involuted point shows up in a half's
        support: U(a) = 0 with V(a) = -b.  P itself never does."""
        ctx = ctx_new(13, [1])
        curve = curve_new(ctx, [0, 2, 5])
        p = Point(curve, 1, 2)
        assert double(to_class(p)) == to_class(p.involution())  # order 3
        a = p.a.promote()
        hits = 0
        for h in halve(p, verify=True):
            ua = h.U(a)
            if ua.is_zero():
                hits += 1
                assert h.V(a) == -p.b.promote()
        assert hits == 1

    def test_random_small_curves(self):
        rng = random.Random(42)
        for p, g in [(5, 1), (13, 1), (7, 2)]:
            ctx = make_ctx(p, g)
            curve = random_curve(ctx, g, rng)
            pt = random_point(curve, rng)
            if pt is None:
                continue
            halves = halve(pt, verify=True)
            assert len(halves) == 4**g


class TestRecoverTuple:
    def test_fixture_recovery(self, p10):
        for t in sqrt_tuples(p10):
            half = mumford_from_tuple(t)
            back = recover_tuple(half)
            assert back.r == t.r

    def test_bare_divisor_recovery(self, p10):
        half = next(
            h
            for h in halve(p10)
            if h.U.encode() == [[3], [1]] and h.V.encode() == [[2]]
        )
        t = recover_tuple(half.divisor, point=p10, s1=half.s[0])
        assert tuple(r.try_demote().encode()[0] for r in t.r) == (1, 0, 3)

    def test_not_a_half(self, p10, p42):
        half = halve(p10)[0]
        with pytest.raises(NotAHalf):
            recover_tuple(half.divisor, point=p42, s1=half.s[0])

    def test_doubling_check_guards_recovery(self, curve_g1_f7, p42):
        ctx = curve_g1_f7.ctx
        d = to_class(Point(curve_g1_f7, 1, 0))  # 2-torsion, not a half of (4, 2)
        with pytest.raises(NotAHalf):
            recover_tuple(d, point=p42, s1=ctx.zero(QUAD))

    def test_roundtrip_g2(self, curve_g2_f49):
        rng = random.Random(9)
        pt = random_point(curve_g2_f49, rng)
        for t in sqrt_tuples(pt)[:6]:
            half = mumford_from_tuple(t)
            assert recover_tuple(half).r == t.r
