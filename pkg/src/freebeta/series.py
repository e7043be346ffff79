"""Truncated formal power series over exact rationals.

All coefficients are :class:`fractions.Fraction`; nothing here ever touches
floating point.  A :class:`PowerSeries` carries an explicit truncation order
and binary operations truncate to the minimum of the operand orders instead
of erroring, so series of different precision compose freely without silent
precision claims.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DivisionByZeroSeries,
    InsufficientDepth,
    NonzeroConstantInner,
    NotInvertibleSeries,
)

Rational = Fraction
RationalLike = Union[int, str, Fraction]

__all__ = [
    "PowerSeries",
    "ContinuedFractionSpec",
    "ps_arith",
    "ps_compose",
    "ps_reversion",
    "ps_sqrt",
    "cf_expand",
]


def _frac(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("coefficients must be exact rationals, not floats")
    return Fraction(x)


@dataclass(frozen=True)
class PowerSeries:
    """A formal power series truncated at a fixed order (inclusive).

    Parameters
    ----------
    coefficients : tuple of Fraction
        Slot ``k`` holds the coefficient of ``z**k``; the length fixes the
        truncation order to ``len(coefficients) - 1``.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(_frac(c) for c in self.coefficients)
        )
        if len(self.coefficients) == 0:
            raise ValueError("a power series needs at least a constant term")

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[RationalLike]) -> "PowerSeries":
        return cls(tuple(_frac(c) for c in coeffs))

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> "PowerSeries":
        return cls((_frac(c),) + (Fraction(0),) * order)

    @classmethod
    def identity(cls, order: int) -> "PowerSeries":
        """The series ``z`` at the given order."""
        if order < 1:
            raise ValueError("identity series needs order >= 1")
        return cls((Fraction(0), Fraction(1)) + (Fraction(0),) * (order - 1))

    # -- basic queries ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("truncate cannot extend a series")
        return PowerSeries(self.coefficients[: order + 1])

    def pad(self, order: int) -> "PowerSeries":
        """Extend with explicit zero coefficients (a deliberate precision claim)."""
        if order < self.order:
            raise ValueError("pad cannot shrink a series")
        return PowerSeries(
            self.coefficients + (Fraction(0),) * (order - self.order)
        )

    def shift_down(self) -> "PowerSeries":
        """Divide by z; the constant term must vanish."""
        if self.coefficients[0] != 0:
            raise ValueError("shift_down requires zero constant term")
        if self.order == 0:
            raise ValueError("shift_down needs order >= 1")
        return PowerSeries(self.coefficients[1:])

    def shift_up(self) -> "PowerSeries":
        """Multiply by z, keeping the same order (top coefficient drops)."""
        return PowerSeries((Fraction(0),) + self.coefficients[:-1])

    def scale(self, c: RationalLike) -> "PowerSeries":
        c = _frac(c)
        return PowerSeries(tuple(c * a for a in self.coefficients))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(
            tuple(self[k] + other[k] for k in range(n + 1))
        )

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(
            tuple(self[k] - other[k] for k in range(n + 1))
        )

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-a for a in self.coefficients))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            out.append(
                sum(
                    (self[i] * other[k - i] for i in range(k + 1)),
                    Fraction(0),
                )
            )
        return PowerSeries(tuple(out))

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        if other.coefficients[0] == 0:
            raise DivisionByZeroSeries(
                "division by a series with zero constant term"
            )
        n = min(self.order, other.order)
        b0 = other.coefficients[0]
        out: list[Fraction] = []
        for k in range(n + 1):
            acc = self[k]
            for i in range(1, k + 1):
                acc -= other[i] * out[k - i]
            out.append(acc / b0)
        return PowerSeries(tuple(out))


def ps_arith(a: PowerSeries, b: PowerSeries, op: str) -> PowerSeries:
    """Dispatch ``add``/``sub``/``mul``/``div`` by name."""
    try:
        return {
            "add": a.__add__,
            "sub": a.__sub__,
            "mul": a.__mul__,
            "div": a.__truediv__,
        }[op](b)
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None


def ps_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """Compose ``outer(inner(z))`` exactly to the minimum order."""
    if inner.coefficients[0] != 0:
        raise NonzeroConstantInner(
            "composition needs an inner series vanishing at 0"
        )
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = PowerSeries.constant(outer[min(n, outer.order)], n)
    # Horner evaluation from the highest retained coefficient down.
    for k in range(n - 1, -1, -1):
        acc = acc * inner + PowerSeries.constant(outer[k], n)
    return acc


def ps_reversion(f: PowerSeries) -> PowerSeries:
    """Compositional inverse: returns g with f(g(z)) = z to order.

    Fixed-point iteration on g = (z - h(g))/f'(0), where h collects the
    terms of f of degree >= 2; each sweep is exact and gains one order.
    """
    if f.order < 1 or f[0] != 0 or f[1] == 0:
        raise NotInvertibleSeries("reversion needs f(0) = 0 and f'(0) != 0")
    n = f.order
    f1 = f[1]
    h = PowerSeries((Fraction(0), Fraction(0)) + f.coefficients[2:])
    z = PowerSeries.identity(n)
    g = z.scale(Fraction(1, 1) / f1)
    for _ in range(n - 1):
        g = (z - ps_compose(h, g)).scale(Fraction(1, 1) / f1)
    return g


def _sqrt_fraction(q: Fraction) -> Fraction:
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError(f"{q} is not the square of a rational")
    return Fraction(rn, rd)


def ps_sqrt(f: PowerSeries, branch: int = 1) -> PowerSeries:
    """Exact series square root; f(0) must be a nonzero rational square.

    ``branch`` selects the sign of the constant term (+1 or -1).
    """
    if f[0] == 0:
        raise ValueError("series sqrt needs a nonzero constant term")
    g0 = _sqrt_fraction(f[0])
    if branch < 0:
        g0 = -g0
    out = [g0]
    for k in range(1, f.order + 1):
        acc = f[k]
        for i in range(1, k):
            acc -= out[i] * out[k - i]
        out.append(acc / (2 * g0))
    return PowerSeries(tuple(out))


@dataclass(frozen=True)
class ContinuedFractionSpec:
    """A Jacobi-type continued fraction 1/(1 - k0 z - p0 z^2/(1 - k1 z - ...)).

    ``diagonal`` holds the level weights (k0, k1, ...); the entry
    ``subdiagonal_products[i]`` is the product of the up weight at level i
    and the down weight back from level i+1.
    """

    diagonal: tuple[Fraction, ...]
    subdiagonal_products: tuple[Fraction, ...]
    depth: int

    def __post_init__(self):
        object.__setattr__(
            self, "diagonal", tuple(_frac(c) for c in self.diagonal)
        )
        object.__setattr__(
            self,
            "subdiagonal_products",
            tuple(_frac(c) for c in self.subdiagonal_products),
        )
        if self.depth < 1:
            raise ValueError("depth must be positive")
        if len(self.diagonal) < self.depth:
            raise ValueError("diagonal shorter than depth")
        if len(self.subdiagonal_products) < self.depth - 1:
            raise ValueError("subdiagonal_products shorter than depth - 1")


def cf_expand(spec: ContinuedFractionSpec, order: int) -> PowerSeries:
    """Expand the continued fraction into a power series of the given order.

    The coefficient of ``z**n`` is the weighted Motzkin path sum with level
    weights ``diagonal`` (flat steps) and ``subdiagonal_products`` (matched
    up/down pairs).  A path of length n climbs at most to height
    ``ceil(n/2)``, so ``depth >= ceil(n/2) + 1`` levels make the expansion
    exact; shallower specs are rejected.
    """
    needed = (order + 1) // 2 + 1
    if spec.depth < needed:
        raise InsufficientDepth(
            f"depth {spec.depth} < {needed} required for order {order}"
        )
    one = PowerSeries.constant(1, order)
    z = PowerSeries.identity(order) if order >= 1 else None

    def level_term(i: int, tail: PowerSeries | None) -> PowerSeries:
        if order == 0:
            return one
        t = one - z.scale(spec.diagonal[i])
        if tail is not None:
            t = t - (z * z * tail).scale(spec.subdiagonal_products[i])
        return t

    tail: PowerSeries | None = None
    for i in range(spec.depth - 1, -1, -1):
        tail = one / level_term(i, tail)
    return tail
