"""Tests for exact-rational formal power series and continued fractions."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freebeta.errors import (
    DivisionByZeroSeries,
    InsufficientDepth,
    NonzeroConstantInner,
    NotInvertibleSeries,
)
from freebeta.series import (
    ContinuedFractionSpec,
    PowerSeries,
    cf_expand,
    ps_arith,
    ps_compose,
    ps_reversion,
    ps_sqrt,
)

F = Fraction


def poly(*coeffs):
    return PowerSeries.from_coefficients([F(c) for c in coeffs])


small_fracs = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def series_strategy(min_order=0, max_order=6):
    return st.lists(
        small_fracs, min_size=min_order + 1, max_size=max_order + 1
    ).map(PowerSeries.from_coefficients)


class TestBasicArithmetic:
    def test_add_matches_termwise(self):
        a = poly(1, 2, 3)
        b = poly(4, 5, 6)
        assert (a + b).coefficients == (F(5), F(7), F(9))

    def test_sub_and_neg(self):
        a = poly(1, 2, 3)
        assert (a - a).coefficients == (F(0),) * 3
        assert (-a).coefficients == (F(-1), F(-2), F(-3))

    def test_mul_is_cauchy_product(self):
        # (1 + z)^2 = 1 + 2z + z^2
        a = poly(1, 1, 0)
        assert (a * a).coefficients == (F(1), F(2), F(1))

    def test_truncation_to_min_order(self):
        a = poly(1, 1)
        b = poly(1, 1, 1, 1)
        assert (a * b).order == 1
        assert (a + b).order == 1

    def test_geometric_series_division(self):
        one = PowerSeries.constant(1, 6)
        g = one / poly(1, -1, 0, 0, 0, 0, 0)
        assert g.coefficients == (F(1),) * 7

    def test_division_by_zero_constant_raises(self):
        with pytest.raises(DivisionByZeroSeries):
            poly(1, 1) / poly(0, 1)

    def test_float_coefficients_rejected(self):
        with pytest.raises(TypeError):
            PowerSeries.from_coefficients([0.5, 1])

    def test_ps_arith_dispatch(self):
        a, b = poly(2, 1), poly(1, 1)
        assert ps_arith(a, b, "add") == a + b
        assert ps_arith(a, b, "sub") == a - b
        assert ps_arith(a, b, "mul") == a * b
        assert ps_arith(a, b, "div") == a / b
        with pytest.raises(ValueError):
            ps_arith(a, b, "pow")

    def test_shift_and_scale(self):
        a = poly(0, 1, 2, 3)
        assert a.shift_down().coefficients == (F(1), F(2), F(3))
        assert a.scale(2).coefficients == (F(0), F(2), F(4), F(6))
        assert poly(1, 2).shift_up().coefficients == (F(0), F(1))

    @given(series_strategy(), series_strategy())
    def test_mul_commutes(self, a, b):
        assert a * b == b * a

    @given(series_strategy(), series_strategy(), series_strategy())
    def test_distributivity(self, a, b, c):
        order = min(a.order, b.order, c.order)
        lhs = (a * (b + c)).truncate(order)
        rhs = (a * b + a * c).truncate(order)
        assert lhs == rhs

    @given(series_strategy())
    def test_division_inverts_multiplication(self, a):
        b = poly(*([1, 1, -2, 3, 0, 1][: a.order + 1]))
        order = min(a.order, b.order)
        assert (a * b) / b == a.truncate(order)


class TestComposition:
    def test_compose_simple(self):
        # f(z) = 1 + z + z^2 composed with g(z) = 2z
        f = poly(1, 1, 1)
        g = poly(0, 2, 0)
        assert ps_compose(f, g).coefficients == (F(1), F(2), F(4))

    def test_compose_nonzero_constant_rejected(self):
        with pytest.raises(NonzeroConstantInner):
            ps_compose(poly(1, 1), poly(1, 1))

    @given(series_strategy(min_order=1))
    def test_compose_with_identity(self, f):
        z = PowerSeries.identity(f.order)
        assert ps_compose(f, z) == f


class TestReversion:
    def test_reversion_of_geometric(self):
        # f = z/(1-z) has inverse g = z/(1+z)
        f = poly(0, 1, 1, 1, 1, 1, 1)
        g = ps_reversion(f)
        want = [F(0)] + [F((-1) ** (k - 1)) for k in range(1, 7)]
        assert g.coefficients == tuple(want)

    def test_reversion_requires_unit_linear_structure(self):
        with pytest.raises(NotInvertibleSeries):
            ps_reversion(poly(1, 1))  # nonzero constant term
        with pytest.raises(NotInvertibleSeries):
            ps_reversion(poly(0, 0, 1))  # vanishing linear term

    @given(series_strategy(min_order=2, max_order=6))
    def test_round_trip(self, tail):
        coeffs = (F(0), F(1)) + tail.coefficients[2:]
        f = PowerSeries.from_coefficients(coeffs)
        g = ps_reversion(f)
        assert ps_compose(f, g) == PowerSeries.identity(f.order)
        assert ps_compose(g, f) == PowerSeries.identity(f.order)

    @given(series_strategy(min_order=2, max_order=6), small_fracs)
    def test_lagrange_inversion_oracle(self, tail, f1):
        """n * g_n equals the (n-1)-st coefficient of (z/f)^n."""
        if f1 == 0:
            f1 = F(1)
        coeffs = (F(0), f1) + tail.coefficients[2:]
        f = PowerSeries.from_coefficients(coeffs)
        g = ps_reversion(f)
        order = f.order
        # z/f is a unit power series; raise it to the n-th power
        unit = PowerSeries.constant(1, order) / f.shift_down().pad(order)
        for n in range(1, order + 1):
            power = PowerSeries.constant(1, order)
            for _ in range(n):
                power = power * unit
            assert n * g[n] == power[n - 1]


class TestSqrt:
    def test_sqrt_of_perfect_square(self):
        sq = poly(1, 1).pad(4) * poly(1, 1).pad(4)
        r = ps_sqrt(sq)
        assert r.coefficients[:2] == (F(1), F(1))

    def test_binomial_series(self):
        # sqrt(1+z) = 1 + z/2 - z^2/8 + z^3/16 - ...
        r = ps_sqrt(poly(1, 1, 0, 0))
        assert r.coefficients == (F(1), F(1, 2), F(-1, 8), F(1, 16))

    def test_branch_sign(self):
        r = ps_sqrt(poly(4, 4, 1), branch=-1)
        assert r[0] == F(-2)
        assert (r * r) == poly(4, 4, 1)

    def test_non_square_constant_rejected(self):
        with pytest.raises(ValueError):
            ps_sqrt(poly(2, 1))

    @given(series_strategy(min_order=1, max_order=5))
    def test_square_round_trip(self, f):
        c0 = f[0] if f[0] > 0 else F(1)
        g = PowerSeries.from_coefficients((c0 * c0,) + f.coefficients[1:])
        r = ps_sqrt(g)
        assert r * r == g


def brute_motzkin_gf(up, flat, order):
    """Weighted Motzkin path generating function by direct path counting."""
    def paths(n):
        def rec(seq, h, left):
            if left == 0:
                if h == 0:
                    yield tuple(seq)
                return
            if h + 1 <= left - 1:
                yield from rec(seq + ["u"], h + 1, left - 1)
            yield from rec(seq + ["f"], h, left - 1)
            if h > 0:
                yield from rec(seq + ["d"], h - 1, left - 1)
        yield from rec([], 0, n)

    def w(seq):
        total, h = F(1), 0
        for step in seq:
            if step == "u":
                total *= up[min(h, len(up) - 1)]
                h += 1
            elif step == "f":
                total *= flat[min(h, len(flat) - 1)]
            else:
                h -= 1
        return total

    return [sum(w(s) for s in paths(n)) for n in range(order + 1)]


class TestContinuedFraction:
    def test_catalan_numbers(self):
        # all Jacobi parameters trivial: the moments of the semicircle
        spec = ContinuedFractionSpec(
            diagonal=(F(0),) * 6, subdiagonal_products=(F(1),) * 5, depth=6
        )
        g = cf_expand(spec, 8)
        catalan = [1, 0, 1, 0, 2, 0, 5, 0, 14]
        assert list(g.coefficients) == [F(c) for c in catalan]

    def test_motzkin_numbers(self):
        spec = ContinuedFractionSpec(
            diagonal=(F(1),) * 6, subdiagonal_products=(F(1),) * 5, depth=6
        )
        g = cf_expand(spec, 8)
        motzkin = [1, 1, 2, 4, 9, 21, 51, 127, 323]
        assert list(g.coefficients) == [F(m) for m in motzkin]

    def test_weighted_against_brute_paths(self):
        up = (F(2), F(3), F(3))
        flat = (F(1, 2), F(5), F(5))
        spec = ContinuedFractionSpec(
            diagonal=flat + (F(5),) * 3,
            subdiagonal_products=up + (F(3),) * 2,
            depth=6,
        )
        g = cf_expand(spec, 6)
        brute = brute_motzkin_gf(up, flat, 6)
        assert list(g.coefficients) == brute

    def test_insufficient_depth_raises(self):
        spec = ContinuedFractionSpec(
            diagonal=(F(0),) * 2, subdiagonal_products=(F(1),), depth=2
        )
        with pytest.raises(InsufficientDepth):
            cf_expand(spec, 8)

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            ContinuedFractionSpec(
                diagonal=(F(0),), subdiagonal_products=(), depth=3
            )
