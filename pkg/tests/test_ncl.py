"""Tests for non-crossing linked partitions and the Gamma polynomials.

The enumeration is checked against an independently written brute-force
generator, so the two implementations share no code paths.
"""

import itertools
import random
from fractions import Fraction

import pytest

from freebeta.errors import MalformedInput, SizeLimitExceeded
from freebeta.ncl import (
    LinkedPartition,
    NclStatistics,
    WeightedMotzkinScheme,
    arrangement_to_partition,
    doubly_covered_types,
    enumerate_ncl,
    fbp_moment,
    fbp_t_params,
    gamma_poly,
    gamma_quadratic_residual,
    gamma_series,
    moment_via_ncl,
    motzkin_paths,
    path_arrangements,
    statistics,
    validate_ncl,
)
from freebeta.transforms import TCoefficients

F = Fraction

SCHROEDER = [1, 2, 6, 22, 90, 394, 1806, 8558]


# --- independent brute-force oracle ---------------------------------------

def _oracle_crossing(e, f):
    for a, c in itertools.combinations(e, 2):
        for b, d in itertools.combinations(f, 2):
            if a < b < c < d or b < a < d < c:
                return True
    return False


def _oracle_compatible(e, f):
    shared = set(e) & set(f)
    if len(shared) > 1:
        return False
    if shared:
        x = shared.pop()
        is_min_e, is_min_f = x == min(e), x == min(f)
        if is_min_e == is_min_f:
            return False
        host = e if is_min_e else f
        if len(host) < 2:
            return False
    return not _oracle_crossing(e, f)


def oracle_enumerate(n):
    """All non-crossing linked partitions of {1..n} by direct construction.

    Blocks are grown in order of their minima: each element is the minimum
    of at most one block, element 1 and element n must be singly covered,
    and every pair of chosen blocks must be compatible.
    """
    results = []

    def covered(blocks):
        counts = {}
        for b in blocks:
            for x in b:
                counts[x] = counts.get(x, 0) + 1
        return counts

    def rec(e, blocks):
        if e > n:
            counts = covered(blocks)
            if all(1 <= counts.get(x, 0) <= 2 for x in range(1, n + 1)):
                results.append(tuple(sorted(blocks)))
            return
        counts = covered(blocks)
        have = counts.get(e, 0)
        # options: skip (only if already covered), or start a block at e
        if have >= 1:
            rec(e + 1, blocks)
        if have >= 2:
            return
        for size in range(1, n - e + 2):
            for rest in itertools.combinations(range(e + 1, n + 1), size - 1):
                block = (e,) + rest
                if have == 1 and len(block) < 2:
                    continue  # a second cover must come from a linking block
                if any(counts.get(x, 0) >= 2 for x in rest):
                    continue
                if block.count(n) and counts.get(n, 0) >= 1:
                    continue
                if all(_oracle_compatible(block, b) for b in blocks):
                    new = blocks + [block]
                    new_counts = covered(new)
                    if new_counts.get(1, 0) <= 1 and new_counts.get(n, 0) <= 1:
                        rec(e + 1, new)

    rec(1, [])
    return set(results)


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_brute_force_oracle(self, n):
        got = {p.blocks for p in enumerate_ncl(n)}
        assert got == oracle_enumerate(n)

    @pytest.mark.parametrize("n,count", list(enumerate(SCHROEDER, start=1)))
    def test_counts_are_large_schroeder(self, n, count):
        assert len(enumerate_ncl(n)) == count

    def test_no_duplicates(self):
        for n in range(1, 8):
            parts = enumerate_ncl(n)
            assert len({p.blocks for p in parts}) == len(parts)

    def test_size_limit(self):
        with pytest.raises(SizeLimitExceeded):
            enumerate_ncl(13)

    def test_all_enumerated_partitions_validate(self):
        for n in range(1, 8):
            assert all(validate_ncl(p) for p in enumerate_ncl(n))


class TestValidation:
    def test_crossing_pair_rejected(self):
        p = LinkedPartition(4, ((1, 3), (2, 4)))
        assert not validate_ncl(p)

    def test_linked_pair_accepted(self):
        p = LinkedPartition(3, ((1, 2), (2, 3)))
        assert validate_ncl(p)

    def test_shared_min_of_both_rejected(self):
        p = LinkedPartition(3, ((1, 2), (1, 3)))
        assert not validate_ncl(p)

    def test_uncovered_element_rejected(self):
        p = LinkedPartition(3, ((1, 2),))
        assert not validate_ncl(p)

    def test_malformed_inputs(self):
        with pytest.raises(MalformedInput):
            LinkedPartition(3, ((1, 5),))
        with pytest.raises(MalformedInput):
            LinkedPartition(3, ((1, 1, 2), (3,)))
        with pytest.raises(MalformedInput):
            LinkedPartition(0, ())


class TestPaths:
    def test_motzkin_path_counts(self):
        # paths of length n with the height-bound pruning applied
        motzkin = [1, 2, 4, 9, 21, 51, 127]
        for n, want in enumerate(motzkin, start=1):
            assert len(list(motzkin_paths(n))) == want

    def test_reference_path_expands_to_six(self):
        path = ("u", "u", "t", "d", "d")
        arrangements = list(path_arrangements(path))
        assert len(arrangements) == 6
        parts = {arrangement_to_partition(cards, 5).blocks
                 for cards in arrangements}
        assert len(parts) == 6

    def test_card_height_rules(self):
        # at height 0 an up-step must open a new block
        for cards in path_arrangements(("u", "d")):
            assert cards[0] == "O"
        # a t-step at height 0 is forced to be a singleton
        for cards in path_arrangements(("t",)):
            assert cards == ("S",)

    def test_expansion_covers_enumeration(self):
        n = 5
        via_paths = set()
        for path in motzkin_paths(n):
            for cards in path_arrangements(path):
                via_paths.add(arrangement_to_partition(cards, n).blocks)
        assert via_paths == {p.blocks for p in enumerate_ncl(n)}


class TestStatistics:
    def test_reference_partition(self):
        p = LinkedPartition(
            10, ((1, 2, 7), (2, 4), (3,), (5, 6), (7, 8, 9), (9, 10))
        )
        st = statistics(p)
        assert st == NclStatistics(dc=3, sc=2, sg=1)

    def test_doubly_covered_types(self):
        p = LinkedPartition(
            10, ((1, 2, 7), (2, 4), (3,), (5, 6), (7, 8, 9), (9, 10))
        )
        type_one, type_two = doubly_covered_types(p)
        assert type_one == (7, 9)
        assert type_two == (2,)

    def test_identities_exhaustive(self):
        for n in range(1, 8):
            for p in enumerate_ncl(n):
                st = statistics(p)
                assert st.dc + st.sc + st.sg == len(p)
                assert sum(len(b) for b in p.blocks) == n + st.dc


class TestGammaPolynomial:
    def test_unit_weights_count_partitions(self):
        for n in range(1, 7):
            assert gamma_poly(n, 1, 1, 1) == SCHROEDER[n - 1]

    def test_statistic_generating_polynomial(self):
        """Gamma_n(a,b,c) equals the brute sum over NCL(n) of a^dc b^sc c^sg."""
        alpha, beta, gamma = F(2), F(3, 2), F(5)
        for n in range(1, 7):
            brute = sum(
                alpha ** statistics(p).dc
                * beta ** statistics(p).sc
                * gamma ** statistics(p).sg
                for p in enumerate_ncl(n)
            )
            assert gamma_poly(n, alpha, beta, gamma, route="cf") == brute

    def test_three_routes_agree_on_random_parameters(self):
        rng = random.Random(99)
        for _ in range(6):
            abc = [F(rng.randint(1, 8), rng.randint(1, 8)) for _ in range(3)]
            for n in range(1, 7):
                brute = gamma_poly(n, *abc, route="brute")
                cf = gamma_poly(n, *abc, route="cf")
                closed = gamma_poly(n, *abc, route="closed")
                assert brute == cf == closed

    def test_closed_form_satisfies_quadratic(self):
        for abc in [(F(1), F(1), F(1)), (F(2), F(1, 2), F(3)),
                    (F(0), F(1), F(1)), (F(1, 3), F(4), F(2, 5))]:
            g = gamma_series(8, *abc, route="closed")
            res = gamma_quadratic_residual(g, *abc)
            assert all(c == 0 for c in res.coefficients)

    def test_alpha_zero_gives_noncrossing_counts(self):
        # without doubly covered elements only ordinary NC partitions remain
        catalan = [1, 2, 5, 14, 42]
        for n, c in enumerate(catalan, start=1):
            assert gamma_poly(n, 0, 1, 1, route="closed") == c

    def test_beta_zero_closed_form(self):
        # no singly covered big blocks: only all-singleton partitions remain
        for n in range(1, 6):
            assert gamma_poly(n, 1, 0, F(3), route="closed") == F(3) ** n

    def test_scheme_weights(self):
        alpha, beta, gamma = F(2), F(3), F(5)
        s = WeightedMotzkinScheme.ncl_weights(alpha, beta, gamma)
        assert s.weight_up(0) == beta
        assert s.weight_up(1) == alpha + beta
        assert s.weight_flat(0) == gamma
        assert s.weight_flat(1) == 1 + alpha + gamma
        assert s.weight_down(0) == 1
        # third moment of the scheme: fff + fud + udf + ufd
        w3 = sum(s.path_weight(p) for p in motzkin_paths(3))
        assert w3 == gamma ** 3 + 2 * beta * gamma + beta * (1 + alpha + gamma)
        assert w3 == gamma_poly(3, alpha, beta, gamma)


class TestMomentViaNcl:
    def test_fbp_t_params(self):
        a, b = F(2), F(3)
        s, t, u = fbp_t_params(a, b)
        assert (s, t, u) == (F(1), F(2), F(1, 2))

    def test_fbp_moments_reference(self):
        want = [F(1), F(2), F(11, 2), F(71, 4), F(503, 8)]
        assert [fbp_moment(2, 3, n) for n in range(1, 6)] == want

    def test_first_moment_is_mean(self):
        for a, b in [(F(2), F(3)), (F(1, 2), F(2)), (F(3), F(3, 2))]:
            assert fbp_moment(a, b, 1) == a / (b - 1)

    def test_moment_via_ncl_partition_weights(self):
        # with alphas (1, x, x, ...) the sum counts blocks of size >= 2
        alphas = TCoefficients((F(1), F(3), F(3), F(3), F(3)))
        got = moment_via_ncl(alphas, 3)
        brute = sum(
            F(3) ** sum(1 for blk in p.blocks if len(blk) >= 2)
            for p in enumerate_ncl(3)
        )
        assert got == brute
