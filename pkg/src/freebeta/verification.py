"""The end-to-end verification suite: every headline claim as one check.

Each criterion function returns (ok, detail).  The CLI ``verify`` command
and the acceptance test suite both run :data:`CRITERIA` so a release is
green exactly when the command is.
"""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

from . import analysis, distributions, fock, ncl, randmat, transforms
from .distributions import (
    FreeBeta,
    FreeBetaPrime,
    FreeF,
    FreePoisson,
    FreeT,
    InverseFreePoisson,
)

__all__ = ["CRITERIA", "run_all"]

_FBP_PARAMS = (
    (Fraction(2), Fraction(3)),
    (Fraction(1, 2), Fraction(2)),
    (Fraction(3), Fraction(3, 2)),
)


def criterion_triple_route_moments() -> tuple[bool, str]:
    """NCL sum, closed-form series, and Fock vacuum agree exactly, n <= 8."""
    for a, b in _FBP_PARAMS:
        fam = FreeBetaPrime(a, b)
        series = distributions.moment_series(fam, 8)
        op = fock.fbp_operator(a, b, 8)
        vac = fock.vacuum_moments(op, 8)
        for n in range(1, 9):
            m_ncl = ncl.fbp_moment(a, b, n)
            if not m_ncl == series[n] == vac[n]:
                return False, (
                    f"(a,b)=({a},{b}) n={n}: ncl={m_ncl} "
                    f"series={series[n]} fock={vac[n]}"
                )
        m1 = a / (b - 1)
        m2 = m1 * m1 + a * (a + b - 1) / (b - 1) ** 3
        if series[1] != m1 or series[2] != m2:
            return False, f"(a,b)=({a},{b}): spot moments m1/m2 wrong"
    return True, "3 parameter sets, n=1..8, identical rationals"


def criterion_mult_convolution() -> tuple[bool, str]:
    """Multiplicative free convolution of the Poisson factors rebuilds fbp."""
    for a, b in _FBP_PARAMS:
        ma = distributions.moment_series(FreePoisson(a), 8)
        mb = distributions.moment_series(InverseFreePoisson(b), 8)
        conv = transforms.free_mult_convolve(ma, mb)
        for n in range(1, 9):
            if conv[n] != ncl.fbp_moment(a, b, n):
                return False, f"(a,b)=({a},{b}) n={n}: {conv[n]}"
    return True, "S-product route equals NCL route, n=1..8"


def criterion_gamma_routes() -> tuple[bool, str]:
    """brute == cf == closed for the Gamma polynomial; residual vanishes."""
    rng = random.Random(20240817)
    triples = [
        tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(3))
        for _ in range(10)
    ]
    for alpha, beta, gamma in triples:
        closed_series = ncl.gamma_series(8, alpha, beta, gamma, route="closed")
        res = ncl.gamma_quadratic_residual(closed_series, alpha, beta, gamma)
        if any(c != 0 for c in res.coefficients):
            return False, f"nonzero residual at {(alpha, beta, gamma)}"
        for n in range(1, 9):
            brute = ncl.gamma_poly(n, alpha, beta, gamma, route="brute")
            cf = ncl.gamma_poly(n, alpha, beta, gamma, route="cf")
            if not brute == cf == closed_series[n]:
                return False, f"route mismatch at n={n}, {(alpha, beta, gamma)}"
    return True, "10 random rational triples, n=1..8, zero residual"


def criterion_counts() -> tuple[bool, str]:
    """Linked-partition counts are the large Schroeder numbers."""
    expected = [1, 2, 6, 22, 90, 394, 1806, 8558]
    for n, want in enumerate(expected, start=1):
        got = len(ncl.enumerate_ncl(n))
        if got != want:
            return False, f"|NCL({n})| = {got}, expected {want}"
    arrangements = list(ncl.path_arrangements(("u", "u", "t", "d", "d")))
    if len(arrangements) != 6:
        return False, f"path (u,u,t,d,d) gave {len(arrangements)} arrangements"
    return True, "counts 1..8 match; reference path expands to 6"


def criterion_statistics() -> tuple[bool, str]:
    """dc+sc+sg = #blocks and sum|B| = n+dc for every partition, n <= 8."""
    for n in range(1, 9):
        for p in ncl.enumerate_ncl(n):
            st = ncl.statistics(p)
            if st.dc + st.sc + st.sg != len(p):
                return False, f"block-count identity fails at {p}"
            if sum(len(b) for b in p.blocks) != n + st.dc:
                return False, f"size identity fails at {p}"
    ref = ncl.LinkedPartition(
        10, ((1, 2, 7), (2, 4), (3,), (5, 6), (7, 8, 9), (9, 10))
    )
    st = ncl.statistics(ref)
    if (st.dc, st.sc, st.sg) != (3, 2, 1):
        return False, f"reference partition stats {(st.dc, st.sc, st.sg)}"
    return True, "identities exhaustive n<=8; reference triple (3,2,1)"


def criterion_scores() -> tuple[bool, str]:
    """|2H - V'| <= 1e-6 at 20 interior points for all listed families."""
    families = [
        FreeBetaPrime(2, 3),
        FreeBetaPrime(Fraction(1, 2), 2),
        FreeT(2),
        FreeT(10),
        FreeBeta(2, 2),
        FreeBeta(Fraction(1, 2), Fraction(3, 4)),
    ]
    worst = 0.0
    for fam in families:
        lo, hi = distributions.support_of(fam)
        for k in range(1, 21):
            x = lo + (hi - lo) * k / 21
            err = abs(
                analysis.hilbert_score(fam, x)
                - analysis.potential_derivative(fam, x)
            )
            worst = max(worst, err)
            if err > 1e-6:
                return False, f"{fam} at x={x}: |2H - V'| = {err}"
    return True, f"max deviation {worst:.2e} over 6 families x 20 points"


def criterion_measure_sanity() -> tuple[bool, str]:
    """Mass 1 within 1e-8; moments within rel 1e-6; atoms within 1e-6."""
    cases = [
        FreePoisson(Fraction(1, 2)),
        FreePoisson(2),
        InverseFreePoisson(3),
        FreeBetaPrime(2, 3),
        FreeBetaPrime(Fraction(1, 2), 2),
        FreeF(2, 3),
        FreeT(2),
        FreeBeta(2, 2),
        FreeBeta(Fraction(1, 2), Fraction(3, 4)),
    ]
    for fam in cases:
        spec = distributions.measure_of(fam)
        mass = analysis.quadrature_moment(spec, 0)
        if abs(mass - 1) > 1e-8:
            return False, f"{fam}: total mass {mass}"
        try:
            exact = distributions.moment_series(fam, 6)
        except Exception:
            exact = None
        if exact is not None:
            for n in range(1, 7):
                got = analysis.quadrature_moment(spec, n)
                want = float(exact[n])
                # hybrid tolerance: relative 1e-6 with an absolute floor
                # so exactly-zero odd moments do not divide by zero
                if abs(got - want) > 1e-6 * max(abs(want), 1.0):
                    return False, f"{fam} moment {n}: {got} vs {want}"
        want_atoms = {loc: m for loc, m in spec.atoms}
        got_atoms = {loc: m for loc, m in analysis.atom_masses(fam)}
        locs = set(want_atoms) | set(got_atoms)
        for loc in locs:
            if abs(want_atoms.get(loc, 0.0) - got_atoms.get(loc, 0.0)) > 1e-6:
                return False, f"{fam} atom at {loc} mismatched"
    return True, f"{len(cases)} parameter cases pass mass/moments/atoms"


def criterion_t_limits() -> tuple[bool, str]:
    """Free T density approaches semicircle (m large) and Cauchy (m ~ 1)."""
    report = analysis.t_density_limits()
    ok = (
        report["sup_semicircle"] <= 2e-4 and report["sup_cauchy"] <= 1e-4
    )
    detail = (
        f"sup|fT - semicircle| = {report['sup_semicircle']:.2e}, "
        f"sup|fT - Cauchy| = {report['sup_cauchy']:.2e}"
    )
    return ok, detail


def criterion_symmetric_square() -> tuple[bool, str]:
    """G_T(z) = z * G_{square}(z^2) at random upper-half-plane points."""
    rng = random.Random(11)
    for m in (2, 10):
        t = FreeT(m)
        square = FreeF(1, m)  # the square of the T variable
        for _ in range(20):
            z = complex(rng.uniform(-3, 3), rng.uniform(0.1, 3))
            lhs = distributions.cauchy_eval(t, z)
            rhs = z * distributions.cauchy_eval(square, z * z)
            if abs(lhs - rhs) > 1e-12:
                return False, f"m={m}, z={z}: |diff| = {abs(lhs - rhs)}"
    return True, "m in {2,10}, 20 random z each, |diff| <= 1e-12"


def criterion_meixner() -> tuple[bool, str]:
    """theta^2 - 4 tau = (b-1)/(a(a+b-1)) exactly; class is free neg. binomial."""
    grid_a = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2),
              Fraction(7, 3)]
    grid_b = [Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(3),
              Fraction(13, 4)]
    for a in grid_a:
        for b in grid_b:
            std = distributions.standardize_to_meixner(a, b)
            want = (b - 1) / (a * (a + b - 1))
            if std.discriminant != want:
                return False, f"(a,b)=({a},{b}): disc {std.discriminant}"
            label = distributions.classify_meixner(std.theta, float(std.tau))
            if label != "free negative binomial":
                return False, f"(a,b)=({a},{b}) classified {label}"
    return True, "5x5 grid: exact discriminants, all free negative binomial"


def criterion_monte_carlo() -> tuple[bool, str]:
    """Fisher spectrum at p=500, seed 42 matches FreeF(2,3) to KS < 0.08."""
    cfg = randmat.FisherSampleConfig(p=500, a=2, b=3, seed=42)
    eigs = randmat.sample_fisher_spectrum(cfg)
    ks = randmat.ks_distance(eigs, FreeF(2, 3))
    return ks < 0.08, f"KS = {ks:.4f} (threshold 0.08)"


def criterion_semigroup() -> tuple[bool, str]:
    """Free Poisson semigroup and the two convolution identities, order 8."""
    a, b = Fraction(3, 2), Fraction(5, 4)
    ma = distributions.moment_series(FreePoisson(a), 8)
    mb = distributions.moment_series(FreePoisson(b), 8)
    mab = distributions.moment_series(FreePoisson(a + b), 8)
    if transforms.free_add_convolve(ma, mb).moments != mab.moments:
        return False, "free Poisson semigroup broken"
    delta0 = transforms.MomentSequence((Fraction(1),) + (Fraction(0),) * 8)
    delta1 = transforms.MomentSequence((Fraction(1),) * 9)
    if transforms.free_add_convolve(ma, delta0).moments != ma.moments:
        return False, "delta_0 is not the additive identity"
    if transforms.free_mult_convolve(ma, delta1).moments != ma.moments:
        return False, "delta_1 is not the multiplicative identity"
    return True, "semigroup and both identities exact to order 8"


CRITERIA = (
    ("triple-route-moments", criterion_triple_route_moments),
    ("mult-convolution", criterion_mult_convolution),
    ("gamma-routes", criterion_gamma_routes),
    ("ncl-counts", criterion_counts),
    ("ncl-statistics", criterion_statistics),
    ("score-identities", criterion_scores),
    ("measure-sanity", criterion_measure_sanity),
    ("t-density-limits", criterion_t_limits),
    ("symmetric-square", criterion_symmetric_square),
    ("meixner-classification", criterion_meixner),
    ("monte-carlo-fisher", criterion_monte_carlo),
    ("convolution-identities", criterion_semigroup),
)


def run_all(fail_fast: bool = False):
    """Run every criterion; yields (name, ok, detail) in order."""
    for name, fn in CRITERIA:
        ok, detail = fn()
        yield name, ok, detail
        if fail_fast and not ok:
            return
