"""Chebyshev interpolation on affinely scaled intervals.

A `ChebSeries` is a finite linear combination of first-kind Chebyshev
polynomials composed with the inverse of the affine map
gamma(x) = r*x + c; its coefficients are balls, so evaluation encloses
the exact value of the series anywhere in the plane.  Interpolation at
first-kind Chebyshev nodes implements the projector used throughout the
certification pipeline: coefficients are the discrete functionals

    c_k = (2 - delta_{0,k}) / m * sum_j f(x_hat_j) T_k(x_j)

with x_j = cos((2j+1) pi / (2m)) and x_hat_j = gamma(x_j).

Everything here is exact up to enclosure radii: node values come from
ball-evaluated cosines, coefficients from the direct O(m^2) sums, and
evaluation from the backward (Clenshaw) recurrence in ball arithmetic,
which is valid for real and complex enclosures alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ball import Ball, ComplexBall
from .errors import ParameterError


@dataclass(frozen=True)
class ScaledInterval:
    """The interval [c - r, c + r], i.e. the image of [-1, 1] under
    gamma(x) = r*x + c."""

    c: Ball
    r: Ball

    def __post_init__(self):
        if not isinstance(self.c, Ball):
            object.__setattr__(self, "c", Ball(self.c))
        if not isinstance(self.r, Ball):
            object.__setattr__(self, "r", Ball(self.r))
        if not self.r.is_positive:
            raise ParameterError("interval radius must be strictly positive")

    @classmethod
    def unit(cls) -> "ScaledInterval":
        return cls(Ball(0), Ball(1))

    @classmethod
    def from_bounds(cls, lo, hi) -> "ScaledInterval":
        lo_b = Ball(lo)
        hi_b = Ball(hi)
        return cls((lo_b + hi_b).half(), (hi_b - lo_b).half())

    def apply(self, x):
        """gamma(x) = r*x + c, for a real or complex enclosure."""
        if isinstance(x, ComplexBall):
            return ComplexBall(self.r * x.re + self.c, self.r * x.im)
        return self.r * x + self.c

    def invert(self, x):
        """gamma^{-1}(x) = (x - c)/r."""
        if isinstance(x, ComplexBall):
            return ComplexBall((x.re - self.c) / self.r, x.im / self.r)
        return (x - self.c) / self.r


def unit_nodes(m: int) -> list[Ball]:
    """First-kind Chebyshev nodes cos((2j+1) pi / (2m)), j = 0..m-1."""
    if m < 1:
        raise ParameterError(f"node count must be >= 1, got {m}")
    pi = Ball.pi()
    return [(pi * (2 * j + 1) / (2 * m)).cos() for j in range(m)]


def cheb_nodes(m: int, gamma: ScaledInterval) -> list[Ball]:
    """The m interpolation nodes gamma(x_j), each enclosing the exact node."""
    return [gamma.apply(x) for x in unit_nodes(m)]


def _basis_columns(xs: list[Ball], m: int) -> list[list[Ball]]:
    """T_l(x_j) for l < m at each of the given points, by the three-term
    recurrence in ball arithmetic."""
    cols = []
    for x in xs:
        two_x = x + x
        col = [Ball(1), x]
        for _ in range(2, m):
            col.append(two_x * col[-1] - col[-2])
        cols.append(col[:m])
    return cols


def interpolate(values: list[Ball], gamma: ScaledInterval) -> "ChebSeries":
    """Series of the degree-(m-1) interpolant through the sampled values
    at the m Chebyshev nodes of `gamma`.

    Exact (up to ball radii) whenever the sampled function is a
    polynomial of degree < m.
    """
    m = len(values)
    if m < 1:
        raise ParameterError("need at least one sample value")
    cols = _basis_columns(unit_nodes(m), m)
    coeffs = []
    for k in range(m):
        acc = values[0] * cols[0][k]
        for j in range(1, m):
            acc = acc + values[j] * cols[j][k]
        scale = Fraction(1, m) if k == 0 else Fraction(2, m)
        coeffs.append(acc * Ball(scale))
    return ChebSeries(gamma, tuple(coeffs))


@dataclass(frozen=True)
class ChebSeries:
    """x -> sum_l coeffs[l] * T_l(gamma^{-1}(x)) with ball coefficients."""

    gamma: ScaledInterval
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ParameterError("a series needs at least one coefficient")

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def eval(self, x):
        """Enclosure of the series value at a real or complex enclosure x.

        x may lie anywhere (inside or outside the interval, or in the
        complex plane); the Clenshaw recurrence runs in ball arithmetic
        either way.
        """
        u = self.gamma.invert(x)
        if len(self.coeffs) == 1:
            return self.coeffs[0] + u * 0
        two_u = u + u
        b1 = Ball(0)
        b2 = Ball(0)
        for c in reversed(self.coeffs[1:]):
            b1, b2 = c + two_u * b1 - b2, b1
        return self.coeffs[0] + u * b1 - b2

    def derivative(self) -> "ChebSeries":
        """Series of the derivative on the same interval (including the
        1/r chain-rule factor of gamma^{-1})."""
        a = self.coeffs
        n = len(a)
        if n == 1:
            return ChebSeries(self.gamma, (Ball(0),))
        b = [Ball(0)] * n  # b[n-1], b[n] treated as zero
        for k in range(n - 1, 0, -1):
            high = b[k + 1] if k + 1 <= n - 1 else Ball(0)
            b[k - 1] = high + a[k] * (2 * k)
        b[0] = b[0].half()
        inv_r = 1 / self.gamma.r
        return ChebSeries(self.gamma, tuple(c * inv_r for c in b[: n - 1]))
