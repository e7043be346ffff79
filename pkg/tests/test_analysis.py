"""Tests for Stieltjes inversion, score identities, atoms, and quadrature."""

import math
from fractions import Fraction

import pytest

from freebeta.analysis import (
    DEFAULT_LADDER,
    EpsilonLadder,
    atom_masses,
    hilbert_score,
    potential_derivative,
    quadrature_moment,
    stieltjes_density,
    t_density_limits,
)
from freebeta.distributions import (
    FreeBeta,
    FreeBetaPrime,
    FreeF,
    FreePoisson,
    FreeT,
    InverseFreePoisson,
    measure_of,
    moment_series,
    support_of,
)
from freebeta.errors import OutsideDomain, OutsideSupport

F = Fraction


class TestLadder:
    def test_default_ladder(self):
        assert DEFAULT_LADDER.values[0] == 1e-2
        assert DEFAULT_LADDER.values[-1] == 1e-6
        assert all(
            a > b for a, b in zip(DEFAULT_LADDER.values,
                                  DEFAULT_LADDER.values[1:])
        )

    def test_validation(self):
        with pytest.raises(ValueError):
            EpsilonLadder(values=(1e-6, 1e-2), extrapolation="richardson")
        with pytest.raises(ValueError):
            EpsilonLadder(values=(1e-2,), extrapolation="cubic")


class TestStieltjesDensity:
    def test_matches_closed_form(self):
        for fam in [FreeBetaPrime(2, 3), FreePoisson(2), FreeT(2),
                    FreeBeta(2, 2), FreeF(2, 3), InverseFreePoisson(3)]:
            spec = measure_of(fam)
            lo, hi = spec.support
            for k in range(1, 8):
                x = lo + (hi - lo) * k / 8
                got = stieltjes_density(fam, x)
                assert abs(got - spec.density(x)) < 1e-8, f"{fam} at {x}"

    def test_semicircle_value(self):
        # fbp(2,3) at x = 1: (b-1) sqrt(-(x-hi)(x-lo)) / (2 pi x (1+x))
        fam = FreeBetaPrime(2, 3)
        lo, hi = support_of(fam)
        want = 2 * math.sqrt((hi - 1) * (1 - lo)) / (2 * math.pi * 1 * 2)
        assert abs(stieltjes_density(fam, 1.0) - want) < 1e-10

    def test_outside_support_raises(self):
        fam = FreeBetaPrime(2, 3)
        lo, _ = support_of(fam)
        with pytest.raises(OutsideSupport):
            stieltjes_density(fam, lo - 0.5)


class TestScores:
    @pytest.mark.parametrize(
        "fam",
        [FreeBetaPrime(2, 3), FreeBetaPrime(F(1, 2), 2), FreeT(2),
         FreeT(10), FreeBeta(2, 2), FreeBeta(F(1, 2), F(3, 4))],
        ids=str,
    )
    def test_score_identity(self, fam):
        """Twice the Hilbert transform equals the potential derivative."""
        lo, hi = support_of(fam)
        for k in range(1, 21):
            x = lo + (hi - lo) * k / 21
            err = abs(hilbert_score(fam, x) - potential_derivative(fam, x))
            assert err <= 1e-6, f"x={x}: {err}"

    def test_potential_derivative_reference(self):
        # free T: V'(x) = (m+1) x / (m + x^2)
        assert potential_derivative(FreeT(2), 1.0) == pytest.approx(1.0)
        # free beta prime: V'(x) = ((b+1)x + 1 - a) / (x(1+x))
        assert potential_derivative(
            FreeBetaPrime(2, 3), 1.0
        ) == pytest.approx(1.5)

    def test_domain_guard(self):
        with pytest.raises(OutsideDomain):
            potential_derivative(FreeBetaPrime(2, 3), -1.0)
        with pytest.raises(OutsideDomain):
            potential_derivative(FreeBeta(2, 2), 1.5)


class TestAtomMasses:
    def test_poisson_atom(self):
        got = dict(atom_masses(FreePoisson(F(1, 2))))
        assert got == pytest.approx({0.0: 0.5}, abs=1e-6)

    def test_no_atom_above_threshold(self):
        assert atom_masses(FreePoisson(2)) == []
        assert atom_masses(FreeT(2)) == []

    def test_free_beta_two_atoms(self):
        got = dict(atom_masses(FreeBeta(F(1, 2), F(3, 4))))
        assert got == pytest.approx({0.0: 0.5, 1.0: 0.25}, abs=1e-6)

    def test_fbp_atom(self):
        got = dict(atom_masses(FreeBetaPrime(F(1, 2), 2)))
        assert got == pytest.approx({0.0: 0.5}, abs=1e-6)


class TestQuadrature:
    @pytest.mark.parametrize(
        "fam",
        [FreePoisson(F(1, 2)), FreePoisson(2), InverseFreePoisson(3),
         FreeBetaPrime(2, 3), FreeF(2, 3), FreeT(2), FreeBeta(2, 2)],
        ids=str,
    )
    def test_unit_mass(self, fam):
        spec = measure_of(fam)
        assert abs(quadrature_moment(spec, 0) - 1) < 1e-8

    def test_moments_match_exact(self):
        fam = FreeBetaPrime(2, 3)
        spec = measure_of(fam)
        exact = moment_series(fam, 6)
        for n in range(1, 7):
            got = quadrature_moment(spec, n)
            want = float(exact[n])
            assert abs(got - want) <= 1e-6 * max(abs(want), 1.0)

    def test_atoms_contribute(self):
        # free beta with atoms at 0 and 1: the atom at 1 adds to every moment
        fam = FreeBeta(F(1, 2), F(3, 4))
        spec = measure_of(fam)
        exact = moment_series(fam, 3)
        for n in range(4):
            got = quadrature_moment(spec, n)
            assert abs(got - float(exact[n])) < 1e-8


class TestTLimits:
    def test_limits_within_tolerance(self):
        report = t_density_limits()
        assert report["sup_semicircle"] <= 2e-4
        assert report["sup_cauchy"] <= 1e-4

    def test_pointwise_semicircle(self):
        # large m: density at 0 approaches 1/(2 pi) * sqrt(4) = 1/pi
        fam = FreeT(10 ** 4)
        spec = measure_of(fam)
        assert spec.density(0.0) == pytest.approx(1 / math.pi, abs=1e-4)

    def test_pointwise_cauchy(self):
        # m -> 1: density at 0 approaches the standard Cauchy 1/pi
        fam = FreeT(F(1000001, 1000000))
        spec = measure_of(fam)
        assert spec.density(0.0) == pytest.approx(1 / math.pi, abs=1e-4)
