"""Non-crossing linked partitions and their moment combinatorics.

A linked partition of {1..n} is a collection of blocks covering every
element once or twice, pairwise non-crossing, and "nearly disjoint": two
blocks may share at most one element, and a shared element must be the
minimum of exactly one of the two blocks (that block then has size >= 2).

Enumeration follows the card model: every partition corresponds to a
Motzkin path of length n decorated with one admissible card per step, and
expanding all paths yields each partition exactly once.  The statistic
triple (dc, sc, sg) — doubly covered elements, singly covered minima of
non-singleton blocks, singletons — drives the generating polynomial
``gamma_poly``, computable by three independent routes that the tests pin
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    InvalidParameters,
    InvalidPartition,
    MalformedInput,
    SizeLimitExceeded,
)
from .series import ContinuedFractionSpec, PowerSeries, cf_expand, ps_sqrt
from .transforms import TCoefficients

__all__ = [
    "LinkedPartition",
    "NclStatistics",
    "WeightedMotzkinScheme",
    "validate_ncl",
    "enumerate_ncl",
    "motzkin_paths",
    "path_arrangements",
    "arrangement_to_partition",
    "statistics",
    "doubly_covered_types",
    "gamma_poly",
    "gamma_series",
    "gamma_quadratic_residual",
    "moment_via_ncl",
    "fbp_moment",
    "fbp_t_params",
    "NCL_SIZE_LIMIT",
]

NCL_SIZE_LIMIT = 12


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class LinkedPartition:
    """Blocks of a (candidate) linked partition in canonical order.

    Blocks are sorted by minimum element and each block's elements are
    sorted increasingly; construction canonicalizes, so equal partitions
    compare equal regardless of input order.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise MalformedInput("ground set must be nonempty")
        canon = []
        for block in self.blocks:
            if len(block) == 0:
                raise MalformedInput("empty block")
            b = tuple(sorted(block))
            if len(set(b)) != len(b):
                raise MalformedInput("repeated element inside a block")
            if b[0] < 1 or b[-1] > self.n:
                raise MalformedInput("element outside the ground set")
            canon.append(b)
        canon.sort()
        object.__setattr__(self, "blocks", tuple(canon))

    def __len__(self) -> int:
        return len(self.blocks)


def _crosses(e: tuple[int, ...], f: tuple[int, ...]) -> bool:
    """True when some e1 < f1 < e2 < f2 interleaves the two blocks.

    Shared elements belong to both blocks and may serve either role (the
    four positions in the pattern are distinct, so no double use occurs).
    """

    def directed(p, q) -> bool:
        for q1 in q:
            if not any(x < q1 for x in p):
                continue
            for q2 in q:
                if q2 > q1 and any(q1 < x < q2 for x in p):
                    return True
        return False

    return directed(e, f) or directed(f, e)


def _pair_ok(e: tuple[int, ...], f: tuple[int, ...]) -> bool:
    """Non-crossing and nearly disjoint for an (unordered) block pair."""
    shared = set(e) & set(f)
    if len(shared) > 1:
        return False
    if len(shared) == 1:
        k = shared.pop()
        is_min_e, is_min_f = k == e[0], k == f[0]
        if is_min_e == is_min_f:
            return False
        if (is_min_e and len(e) < 2) or (is_min_f and len(f) < 2):
            return False
    return not _crosses(e, f)


def validate_ncl(p: LinkedPartition) -> bool:
    """Check all linked-partition invariants; False on any violation."""
    cover: dict[int, int] = {}
    for block in p.blocks:
        for x in block:
            cover[x] = cover.get(x, 0) + 1
    if set(cover) != set(range(1, p.n + 1)):
        return False
    if any(c > 2 for c in cover.values()):
        return False
    if cover[1] != 1 or cover[p.n] != 1:
        return False
    if len(set(p.blocks)) != len(p.blocks):
        return False
    blocks = p.blocks
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if not _pair_ok(blocks[i], blocks[j]):
                return False
    return True


# --------------------------------------------------------------------------
# Motzkin paths and the card model
# --------------------------------------------------------------------------

def motzkin_paths(n: int) -> Iterator[tuple[str, ...]]:
    """All lattice paths of length n over {u, t, d} staying >= 0, ending at 0."""

    def rec(prefix: list[str], h: int, left: int) -> Iterator[tuple[str, ...]]:
        if left == 0:
            yield tuple(prefix)
            return
        for step, dh in (("u", 1), ("t", 0), ("d", -1)):
            nh = h + dh
            if nh < 0 or nh > left - 1:
                continue
            prefix.append(step)
            yield from rec(prefix, nh, left - 1)
            prefix.pop()

    yield from rec([], 0, n)


def path_arrangements(path: Sequence[str]) -> Iterator[tuple[str, ...]]:
    """All admissible card sequences over a Motzkin path.

    Cards: ``O`` opens a block (up step), ``U`` opens a block linked to the
    enclosing open one (up step at positive height only), ``C`` closes a
    block (down step), ``I`` continues the enclosing block (flat step at
    positive height), ``S`` is a singleton (flat step), ``T`` ends the
    enclosing block while opening a linked successor (flat step at
    positive height).
    """
    options = []
    h = 0
    for step in path:
        if step == "u":
            options.append(("O",) if h == 0 else ("O", "U"))
            h += 1
        elif step == "t":
            options.append(("S",) if h == 0 else ("I", "S", "T"))
        elif step == "d":
            options.append(("C",))
            h -= 1
        else:
            raise ValueError(f"unknown step {step!r}")

    def rec(i: int, chosen: list[str]) -> Iterator[tuple[str, ...]]:
        if i == len(options):
            yield tuple(chosen)
            return
        for card in options[i]:
            chosen.append(card)
            yield from rec(i + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def arrangement_to_partition(cards: Sequence[str], n: int) -> LinkedPartition:
    """Convert a card sequence along positions 1..n into a partition.

    A stack tracks the currently open blocks, innermost on top; linked
    cards (``U``, ``T``) write the position into the enclosing block and
    open a new block starting at the same position.
    """
    stack: list[list[int]] = []
    done: list[tuple[int, ...]] = []
    for j, card in enumerate(cards, start=1):
        if card == "O":
            stack.append([j])
        elif card == "U":
            stack[-1].append(j)
            stack.append([j])
        elif card == "I":
            stack[-1].append(j)
        elif card == "S":
            done.append((j,))
        elif card == "T":
            stack[-1].append(j)
            done.append(tuple(stack.pop()))
            stack.append([j])
        elif card == "C":
            stack[-1].append(j)
            done.append(tuple(stack.pop()))
        else:
            raise ValueError(f"unknown card {card!r}")
    if stack:
        raise ValueError("unbalanced card sequence")
    return LinkedPartition(n, tuple(done))


def enumerate_ncl(n: int) -> list[LinkedPartition]:
    """All linked partitions of {1..n}, canonically ordered, duplicate-free."""
    if not 1 <= n <= NCL_SIZE_LIMIT:
        raise SizeLimitExceeded(
            f"exhaustive enumeration capped at n = {NCL_SIZE_LIMIT}"
        )
    out = []
    for path in motzkin_paths(n):
        for cards in path_arrangements(path):
            out.append(arrangement_to_partition(cards, n))
    out.sort(key=lambda p: p.blocks)
    return out


# --------------------------------------------------------------------------
# Statistics
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class NclStatistics:
    dc: int
    sc: int
    sg: int


def _cover_counts(p: LinkedPartition) -> dict[int, int]:
    cover: dict[int, int] = {}
    for block in p.blocks:
        for x in block:
            cover[x] = cover.get(x, 0) + 1
    return cover


def statistics(p: LinkedPartition) -> NclStatistics:
    """The (dc, sc, sg) statistic triple of a valid linked partition.

    Each block's minimum falls in exactly one class, so
    dc + sc + sg = number of blocks, and counting elements with
    multiplicity gives sum of block sizes = n + dc.
    """
    if not validate_ncl(p):
        raise InvalidPartition("not a non-crossing linked partition")
    cover = _cover_counts(p)
    dc = sum(1 for c in cover.values() if c == 2)
    sg = sum(1 for b in p.blocks if len(b) == 1)
    sc = sum(1 for b in p.blocks if len(b) >= 2 and cover[b[0]] == 1)
    return NclStatistics(dc=dc, sc=sc, sg=sg)


def doubly_covered_types(
    p: LinkedPartition,
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split the doubly covered elements by how they sit in the host block.

    A doubly covered element opens one block and belongs to another (the
    host).  It is *type one* when it is the maximum of the host and *type
    two* otherwise; type one corresponds to flat-step linked cards, type
    two to up-step linked cards in the card model.
    """
    if not validate_ncl(p):
        raise InvalidPartition("not a non-crossing linked partition")
    cover = _cover_counts(p)
    t1, t2 = [], []
    for x, c in cover.items():
        if c != 2:
            continue
        host = next(b for b in p.blocks if x in b and x != b[0])
        (t1 if x == host[-1] else t2).append(x)
    return tuple(sorted(t1)), tuple(sorted(t2))


# --------------------------------------------------------------------------
# Weight scheme and the Gamma generating polynomial
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightedMotzkinScheme:
    """Step weights for weighted Motzkin path sums.

    Each sequence lists initial values and its last entry repeats for all
    higher levels.  ``up[i]``/``flat[i]`` weight a step leaving height i;
    ``down[i]`` weights a step arriving back at height i.
    """

    up: tuple[Fraction, ...]
    down: tuple[Fraction, ...]
    flat: tuple[Fraction, ...]

    def __post_init__(self):
        for name in ("up", "down", "flat"):
            seq = tuple(_frac(x) for x in getattr(self, name))
            if not seq:
                raise ValueError(f"{name} weights must be nonempty")
            object.__setattr__(self, name, seq)

    @classmethod
    def ncl_weights(cls, alpha, beta, gamma) -> "WeightedMotzkinScheme":
        """The scheme whose path sums generate linked-partition statistics.

        Up steps carry beta from the ground and alpha + beta above (the
        extra alpha is the linked-opening card); flat steps carry gamma on
        the ground and 1 + alpha + gamma above (continue, singleton, or
        linked split); down steps carry 1.
        """
        alpha, beta, gamma = _frac(alpha), _frac(beta), _frac(gamma)
        return cls(
            up=(beta, alpha + beta),
            down=(Fraction(1),),
            flat=(gamma, 1 + alpha + gamma),
        )

    @staticmethod
    def _at(seq: tuple[Fraction, ...], i: int) -> Fraction:
        return seq[min(i, len(seq) - 1)]

    def weight_up(self, i: int) -> Fraction:
        return self._at(self.up, i)

    def weight_down(self, i: int) -> Fraction:
        return self._at(self.down, i)

    def weight_flat(self, i: int) -> Fraction:
        return self._at(self.flat, i)

    def path_weight(self, path: Sequence[str]) -> Fraction:
        w = Fraction(1)
        h = 0
        for step in path:
            if step == "u":
                w *= self.weight_up(h)
                h += 1
            elif step == "t":
                w *= self.weight_flat(h)
            elif step == "d":
                h -= 1
                if h < 0:
                    raise ValueError("path dips below the ground")
                w *= self.weight_down(h)
            else:
                raise ValueError(f"unknown step {step!r}")
        if h != 0:
            raise ValueError("path does not return to the ground")
        return w

    def continued_fraction(self, depth: int) -> ContinuedFractionSpec:
        diag = tuple(self.weight_flat(i) for i in range(depth))
        prods = tuple(
            self.weight_up(i) * self.weight_down(i) for i in range(depth - 1)
        )
        return ContinuedFractionSpec(
            diagonal=diag, subdiagonal_products=prods, depth=depth
        )


def gamma_series(order: int, alpha, beta, gamma,
                 route: str = "cf") -> PowerSeries:
    """The generating series sum_n Gamma_n z^n by the cf or closed route."""
    alpha, beta, gamma = _frac(alpha), _frac(beta), _frac(gamma)
    if route == "cf":
        depth = (order + 1) // 2 + 1
        scheme = WeightedMotzkinScheme.ncl_weights(alpha, beta, gamma)
        return cf_expand(scheme.continued_fraction(depth), order)
    if route == "closed":
        return _gamma_closed(order, alpha, beta, gamma)
    raise ValueError(f"unknown series route {route!r}")


def _poly(n: int, *coeffs) -> PowerSeries:
    return PowerSeries.from_coefficients(
        list(coeffs) + [0] * (n + 1 - len(coeffs))
    )


def _gamma_quadratic(n: int, alpha: Fraction, beta: Fraction,
                     gamma: Fraction) -> tuple[PowerSeries, PowerSeries, PowerSeries]:
    """Series coefficients (A, B, C) of the quadratic A G^2 - B G + C = 0."""
    a_ser = _poly(n, 1, beta - gamma) * _poly(n, alpha, beta - alpha * gamma)
    b_ser = _poly(
        n,
        2 * alpha + beta,
        beta * (1 + alpha + gamma) - 2 * (alpha + beta) * gamma,
    )
    c_ser = _poly(n, alpha + beta)
    return a_ser, b_ser, c_ser


def _gamma_closed(order: int, alpha: Fraction, beta: Fraction,
                  gamma: Fraction) -> PowerSeries:
    """Expand the algebraic solution of the defining quadratic.

    The discriminant's constant term is beta^2, and the square-root branch
    with value beta at z = 0 selects the solution with G(0) = 1.
    """
    n = order
    if n == 0:
        return PowerSeries.constant(1, 0)
    if beta == 0:
        # no weighted path ever leaves the ground: Gamma_n = gamma^n
        return PowerSeries.from_coefficients(
            [gamma ** k for k in range(n + 1)]
        )
    if alpha == 0:
        # A(0) vanishes; divide the quadratic by beta*z first:
        #   z (1 + (beta-gamma) z) G^2 - (1 + (1-gamma) z) G + 1 = 0
        a_red = _poly(n + 1, 0, 1) * _poly(n + 1, 1, beta - gamma)
        b_red = _poly(n + 1, 1, 1 - gamma)
        c_red = _poly(n + 1, 1)
        disc = b_red * b_red - (a_red * c_red).scale(4)
        num = b_red - ps_sqrt(disc, branch=1)
        g = num.shift_down() / a_red.shift_down().scale(2)
        return g.truncate(n)
    a_ser, b_ser, c_ser = _gamma_quadratic(n, alpha, beta, gamma)
    disc = b_ser * b_ser - (a_ser * c_ser).scale(4)
    num = b_ser - ps_sqrt(disc, branch=1 if beta > 0 else -1)
    return num / a_ser.scale(2)


def gamma_quadratic_residual(g: PowerSeries, alpha, beta, gamma) -> PowerSeries:
    """Plug a series into the defining quadratic; zero iff g solves it."""
    alpha, beta, gamma = _frac(alpha), _frac(beta), _frac(gamma)
    n = g.order
    gp = g.pad(n + 1)
    a_ser, b_ser, c_ser = _gamma_quadratic(n + 1, alpha, beta, gamma)
    res = a_ser * gp * gp - b_ser * gp + c_ser
    return res.truncate(n)


def gamma_poly(n: int, alpha, beta, gamma, route: str = "cf") -> Fraction:
    """Gamma_n(alpha, beta, gamma) = sum over NCL(n) of alpha^dc beta^sc gamma^sg.

    Routes: ``brute`` sums the statistics over the exhaustive enumeration
    (n <= 12), ``cf`` expands the weighted continued fraction, ``closed``
    expands the explicit algebraic solution of the defining quadratic.
    """
    if n == 0:
        return Fraction(1)
    alpha, beta, gamma = _frac(alpha), _frac(beta), _frac(gamma)
    if route == "brute":
        if n > NCL_SIZE_LIMIT:
            raise SizeLimitExceeded(
                f"brute route capped at n = {NCL_SIZE_LIMIT}"
            )
        total = Fraction(0)
        for p in enumerate_ncl(n):
            st = statistics(p)
            total += alpha ** st.dc * beta ** st.sc * gamma ** st.sg
        return total
    if route in ("cf", "closed"):
        return gamma_series(n, alpha, beta, gamma, route=route)[n]
    raise ValueError(f"unknown route {route!r}")


# --------------------------------------------------------------------------
# Moment formulas
# --------------------------------------------------------------------------

def moment_via_ncl(alphas: TCoefficients, n: int) -> Fraction:
    """m_n = sum over NCL(n) of alpha_0^{n - #blocks} prod_B alpha_{|B|-1}."""
    if n == 0:
        return Fraction(1)
    if n > NCL_SIZE_LIMIT:
        raise SizeLimitExceeded(f"capped at n = {NCL_SIZE_LIMIT}")
    if alphas.order < n - 1:
        raise ValueError("need alpha_k through k = n - 1")
    a0 = alphas[0]
    total = Fraction(0)
    for p in enumerate_ncl(n):
        prod = a0 ** (n - len(p))
        for block in p.blocks:
            prod *= alphas[len(block) - 1]
        total += prod
    return total


def fbp_t_params(a, b) -> tuple[Fraction, Fraction, Fraction]:
    """The (s, t, u) parameters of the free beta prime T-transform.

    alpha_0 = s = a/(b-1); alpha_k = t*u^k for k >= 1 with
    t = (a+b-1)/(b-1) and u = 1/(b-1).
    """
    a, b = _frac(a), _frac(b)
    if a <= 0 or b <= 1:
        raise InvalidParameters("need a > 0 and b > 1")
    return a / (b - 1), (a + b - 1) / (b - 1), 1 / (b - 1)


def fbp_moment(a, b, n: int) -> Fraction:
    """n-th moment of the free beta prime law by the linked-partition sum.

    Equals (su)^n * Gamma_n(t/s, t/(su), 1/u) with (s, t, u) from
    :func:`fbp_t_params`; evaluated by the brute enumeration route.
    """
    if n > NCL_SIZE_LIMIT:
        raise SizeLimitExceeded(f"capped at n = {NCL_SIZE_LIMIT}")
    s, t, u = fbp_t_params(a, b)
    scale = s * u
    return scale ** n * gamma_poly(n, t / s, t / scale, 1 / u, route="brute")
