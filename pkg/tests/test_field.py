"""Field tower arithmetic: contexts, axioms, square roots, Frobenius."""

import pytest
from hypothesis import given, settings, strategies as st

from jachalf.errors import (
    CharacteristicTwo,
    CtxMismatch,
    DivisionByZero,
    NotPrime,
    ReducibleModulus,
    TowerExhausted,
)
from jachalf.field import BASE, QUAD, ctx_new


@pytest.fixture(scope="module")
def f27():
    # F_27 = F_3[t]/(t^3 - t - 1)
    return ctx_new(3, [2, 2, 0, 1])


class TestCtxNew:
    def test_prime_field(self, f7):
        assert f7.k == 1 and f7.q == 7 and f7.q2 == 49

    def test_quadratic_extension(self, f49):
        assert f49.k == 2 and f49.q == 49
        t = f49.generator()
        assert t * t == -1

    def test_modulus_one_means_prime_field(self):
        assert ctx_new(11, [1]).k == 1

    def test_rejects_two(self):
        with pytest.raises(CharacteristicTwo):
            ctx_new(2, [1])

    def test_rejects_composite(self):
        with pytest.raises(NotPrime):
            ctx_new(15, [1])

    def test_rejects_oversized_prime(self):
        with pytest.raises(NotPrime):
            ctx_new(2**89 - 1, [1])

    def test_rejects_reducible_modulus(self):
        # x^2 - 2 = (x - 3)(x + 3) over F_7
        with pytest.raises(ReducibleModulus):
            ctx_new(7, [5, 0, 1])

    def test_rejects_non_monic_modulus(self):
        with pytest.raises(ReducibleModulus):
            ctx_new(7, [1, 0, 3])

    def test_smallest_nonsquare_found(self, f7, f49):
        assert f7.nonsquare == (3,)  # squares mod 7 are {0,1,2,4}
        assert not f49.elem(f49.nonsquare).is_square()

    def test_ctx_mismatch_between_fields(self, f7, f49):
        with pytest.raises(CtxMismatch):
            f7.from_int(1) + f49.from_int(1)


class TestArithmetic:
    def test_examples_mod_7(self, f7):
        three, five = f7.from_int(3), f7.from_int(5)
        assert (three + five) == 1
        assert (three * five) == 1
        assert (three - five) == 5
        assert (three / five) == 2  # 5^-1 = 3, 3*3 = 9 = 2

    def test_division_by_zero(self, f7):
        with pytest.raises(DivisionByZero):
            f7.from_int(1) / f7.from_int(0)

    def test_pow_negative_exponent(self, f49):
        x = f49.generator() + 2
        assert x ** (-3) == (x**3).inverse()

    def test_cross_level_coercion(self, f49):
        x = f49.from_int(3)
        u = f49.tower_generator()
        assert (x + u) - u == x.promote()
        assert (x + u).level == QUAD


def _elements(ctx):
    return st.integers(min_value=0, max_value=ctx.q2 - 1).map(
        lambda i: ctx.elem(ctx._q_from_index(i), QUAD)
    )


@pytest.fixture(scope="module")
def f25():
    return ctx_new(5, [3, 0, 1])


class TestAxioms:
    @given(data=st.data())
    @settings(max_examples=80, deadline=None)
    def test_field_axioms_f625(self, f25, data):
        x = data.draw(_elements(f25))
        y = data.draw(_elements(f25))
        z = data.draw(_elements(f25))
        assert (x + y) + z == x + (y + z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert x + (-x) == 0
        if not x.is_zero():
            assert x * x.inverse() == f25.one(QUAD)

    def test_inverse_everywhere(self, f27):
        for x in f27.base_elements():
            if not x.is_zero():
                assert x * x.inverse() == 1


class TestSqrt:
    def test_canonical_roots_mod_7(self, f7):
        assert f7.from_int(4).sqrt() == 2  # min(2, 5)
        assert f7.from_int(2).sqrt() == 3  # min(3, 4)

    def test_nonsquare_promotes_to_tower(self, f7):
        s = f7.from_int(3).sqrt()
        assert s.level == QUAD
        assert s * s == 3

    def test_tower_exhausted(self, f49):
        # a non-square of F_{49^2} has no root inside the tower
        for i in range(1, f49.q2):
            x = f49.elem(f49._q_from_index(i), QUAD)
            if not x.is_square():
                with pytest.raises(TowerExhausted):
                    x.sqrt()
                break

    def test_sqrt_squares_back_everywhere(self, f25):
        for x in f25.base_elements():
            s = x.sqrt()
            assert s * s == x
            # the root stays at base level exactly for base-level squares
            assert (s.try_demote().level == BASE) == x.is_square()

    def test_euler_criterion_matches_brute_force(self, f27):
        squares = {(x * x).payload for x in f27.base_elements()}
        for x in f27.base_elements():
            assert x.is_square() == (x.payload in squares)

    def test_tonelli_shanks_branch(self):
        # q = 25 = 1 mod 4 exercises the full Tonelli-Shanks loop
        ctx = ctx_new(5, [3, 0, 1])
        for x in ctx.base_elements():
            if x.is_square() and not x.is_zero():
                s = x.sqrt()
                assert s * s == x


class TestFrobenius:
    def test_fixes_prime_field(self, f7):
        assert f7.from_int(5).frobenius() == 5

    def test_moves_generator(self, f49):
        t = f49.generator()
        assert t.frobenius() == -t  # t^7 = t * (t^2)^3 = -t
        assert (t * t).frobenius() == t * t

    def test_homomorphism(self, f27):
        xs = list(f27.base_elements())
        for x in xs[::5]:
            for y in xs[::7]:
                assert (x * y).frobenius() == x.frobenius() * y.frobenius()
                assert (x + y).frobenius() == x.frobenius() + y.frobenius()

    def test_iterate_k_fixes_base(self, f27):
        for x in f27.base_elements():
            y = x
            for _ in range(f27.k):
                y = y.frobenius()
            assert y == x

    def test_in_prime_field_matches_frobenius(self, f49):
        for x in f49.base_elements():
            assert x.in_prime_field() == (x.frobenius() == x)


class TestEncoding:
    def test_base_roundtrip(self, f49):
        x = f49.from_coeffs([3, 5])
        assert x.encode() == [3, 5]
        assert f49.decode([3, 5]) == x

    def test_quad_demotes_on_encode(self, f7):
        x = f7.from_int(4, QUAD)
        assert x.encode() == [4]

    def test_quad_roundtrip(self, f7):
        u = f7.tower_generator()
        x = 2 + 3 * u
        assert x.encode() == [[2], [3]]
        assert f7.decode([[2], [3]]) == x

    def test_bad_encoding_rejected(self, f7):
        with pytest.raises(ValueError):
            f7.decode("3")
        with pytest.raises(ValueError):
            f7.decode([[1], [2], [3]])

    def test_as_prime_int(self, f49):
        assert f49.from_int(6).as_prime_int() == 6
        with pytest.raises(ValueError):
            f49.generator().as_prime_int()
