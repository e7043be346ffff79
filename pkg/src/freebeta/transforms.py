"""Moment sequences and the G/M/Phi/R/S/T transform algebra.

Everything here lives at the level of truncated exact-rational series;
closed-form function objects belong to :mod:`freebeta.distributions` and are
bridged by series expansion.  Additive free convolution adds R-transform
coefficients; multiplicative free convolution multiplies S-transforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import (
    InsufficientOrder,
    OrderMismatch,
    ZeroConstantS,
    ZeroMeanError,
)
from .series import PowerSeries, ps_compose, ps_reversion

__all__ = [
    "MomentSequence",
    "FreeCumulants",
    "TCoefficients",
    "moments_to_phi",
    "moments_to_r",
    "r_to_moments",
    "moments_to_s",
    "s_to_moments",
    "s_to_t",
    "free_add_convolve",
    "free_mult_convolve",
    "noncrossing_partitions",
]


def _fracs(xs: Iterable) -> tuple[Fraction, ...]:
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in xs)


@dataclass(frozen=True)
class MomentSequence:
    """Moments m_0..m_order of a compactly supported measure, m_0 = 1."""

    moments: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "moments", _fracs(self.moments))
        if not self.moments or self.moments[0] != 1:
            raise ValueError("a moment sequence starts with m_0 = 1")

    @classmethod
    def from_values(cls, values: Sequence, order: int | None = None) -> "MomentSequence":
        m = cls(_fracs(values))
        return m if order is None else m.truncate(order)

    @property
    def order(self) -> int:
        return len(self.moments) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.moments[n]

    def truncate(self, order: int) -> "MomentSequence":
        if order > self.order:
            raise InsufficientOrder(f"only {self.order} moments available")
        return MomentSequence(self.moments[: order + 1])


@dataclass(frozen=True)
class FreeCumulants:
    """Free cumulants; slot n holds r_{n+1} (R-transform coefficient of z^n)."""

    cumulants: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "cumulants", _fracs(self.cumulants))

    @property
    def order(self) -> int:
        return len(self.cumulants) - 1

    def r(self, n: int) -> Fraction:
        """The cumulant r_n (1-indexed as in R(z) = sum r_n z^{n-1})."""
        return self.cumulants[n - 1]

    def __getitem__(self, slot: int) -> Fraction:
        return self.cumulants[slot]


@dataclass(frozen=True)
class TCoefficients:
    """Coefficients of the T-transform T(z) = sum alpha_k z^k; alpha_0 != 0."""

    alphas: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", _fracs(self.alphas))
        if not self.alphas or self.alphas[0] == 0:
            raise ValueError("T-transform needs alpha_0 != 0")

    @property
    def order(self) -> int:
        return len(self.alphas) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.alphas[k]


def _m_series(m: MomentSequence) -> PowerSeries:
    return PowerSeries(m.moments)


def moments_to_phi(m: MomentSequence) -> PowerSeries:
    """Phi(z) = sum_{n>=1} m_n z^n — the moment series without constant."""
    return PowerSeries((Fraction(0),) + m.moments[1:])


def moments_to_r(m: MomentSequence) -> FreeCumulants:
    """Free cumulants r_1..r_n from moments m_1..m_n.

    Uses M(z) = C(z M(z)) with C(z) = 1 + sum r_k z^k, solved by composing
    M with the compositional inverse of w(z) = z M(z).
    """
    n = m.order
    if n < 1:
        raise InsufficientOrder("need at least one moment")
    mser = _m_series(m)
    w = mser.shift_up()  # z*M(z), exact to order n
    c = ps_compose(mser, ps_reversion(w))
    return FreeCumulants(c.coefficients[1:])


def noncrossing_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield all non-crossing set partitions of {1..n} as block tuples.

    The block containing the smallest element splits the rest into
    independent gaps, which is the standard interval recursion.
    """

    def rec(elems: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if not elems:
            yield ()
            return
        first, rest = elems[0], elems[1:]
        for picks in _subsets(rest):
            block = (first,) + picks
            # gaps between consecutive block elements, plus the tail
            fence = block[1:] + (None,)
            gaps = []
            gap: list[int] = []
            fi = 0
            for e in rest:
                if fence[fi] is not None and e == fence[fi]:
                    gaps.append(tuple(gap))
                    gap = []
                    fi += 1
                else:
                    gap.append(e)
            gaps.append(tuple(gap))
            for combo in _product_partitions(gaps):
                yield (block,) + combo

    def _subsets(elems: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if not elems:
            yield ()
            return
        for tail in _subsets(elems[1:]):
            yield tail
            yield (elems[0],) + tail

    def _product_partitions(gaps):
        if not gaps:
            yield ()
            return
        for head in rec(gaps[0]):
            for tail in _product_partitions(gaps[1:]):
                yield head + tail

    yield from rec(tuple(range(1, n + 1)))


def r_to_moments(r: FreeCumulants, route: str = "series") -> MomentSequence:
    """Moments from free cumulants by one of two independent routes.

    ``series`` iterates M = C(z M(z)); ``nc_sum`` evaluates the free
    moment-cumulant formula m_n = sum over non-crossing partitions of the
    product of r_{|B|} over blocks.
    """
    n = r.order + 1
    if route == "series":
        c = PowerSeries((Fraction(1),) + r.cumulants)
        mser = PowerSeries.constant(1, n)
        for _ in range(n):
            mser = ps_compose(c, mser.shift_up())
        return MomentSequence(mser.coefficients)
    if route == "nc_sum":
        moments = [Fraction(1)]
        for k in range(1, n + 1):
            total = Fraction(0)
            for part in noncrossing_partitions(k):
                prod = Fraction(1)
                for block in part:
                    prod *= r.r(len(block))
                total += prod
            moments.append(total)
        return MomentSequence(tuple(moments))
    raise ValueError(f"unknown route {route!r}")


def moments_to_s(m: MomentSequence) -> PowerSeries:
    """S-transform series from moments: S(z) = ((z+1)/z) Phi^{<-1>}(z)."""
    if m.order < 1:
        raise InsufficientOrder("need at least one moment")
    if m[1] == 0:
        raise ZeroMeanError("S-transform needs m_1 != 0")
    phi_inv = ps_reversion(moments_to_phi(m))
    base = phi_inv.shift_down()  # Phi^{<-1>}(z)/z, order n-1
    n = base.order
    zplus1 = PowerSeries.from_coefficients(
        [1, 1] + [0] * (n - 1)
    ) if n >= 1 else PowerSeries.constant(1, 0)
    return base * zplus1 if n >= 1 else base


def s_to_moments(s: PowerSeries, order: int) -> MomentSequence:
    """Invert moments_to_s: recover m_1..m_order from S to order-1."""
    if s.order < order - 1:
        raise InsufficientOrder(
            f"S-series order {s.order} < {order - 1} needed"
        )
    if s[0] == 0:
        raise ZeroConstantS("S(0) = 0 has no moment inverse here")
    one_plus_z = PowerSeries.from_coefficients([1, 1] + [0] * (order - 1))
    phi_inv = (s.pad(order) if s.order < order else s.truncate(order)) \
        .shift_up() / one_plus_z
    phi = ps_reversion(phi_inv)
    return MomentSequence((Fraction(1),) + phi.coefficients[1:])


def s_to_t(s: PowerSeries) -> TCoefficients:
    """Reciprocal series: T(z) S(z) = 1 to order."""
    if s[0] == 0:
        raise ZeroConstantS("cannot invert an S-series vanishing at 0")
    recip = PowerSeries.constant(1, s.order) / s
    return TCoefficients(recip.coefficients)


def free_add_convolve(ma: MomentSequence, mb: MomentSequence) -> MomentSequence:
    """Moments of the additive free convolution: R-transforms add."""
    if ma.order != mb.order:
        raise OrderMismatch("operands must share a truncation order")
    ra, rb = moments_to_r(ma), moments_to_r(mb)
    summed = FreeCumulants(
        tuple(x + y for x, y in zip(ra.cumulants, rb.cumulants))
    )
    return r_to_moments(summed, route="series")


def free_mult_convolve(ma: MomentSequence, mb: MomentSequence) -> MomentSequence:
    """Moments of the multiplicative free convolution: S-transforms multiply."""
    if ma.order != mb.order:
        raise OrderMismatch("operands must share a truncation order")
    if ma[1] == 0 or mb[1] == 0:
        raise ZeroMeanError("multiplicative convolution needs m_1 != 0")
    s = moments_to_s(ma) * moments_to_s(mb)
    return s_to_moments(s, ma.order)
