"""Inverse branches and weighted transfer operators for iterated-radical
expansions.

A degree-d expansion map x -> (x+1)^d - 1 (mod 1) has the 2^d - 1
contractive inverse branches

    S_i(x) = (x + i)^(1/d) - 1,        i = 1, ..., 2^d - 1,
    S_i'(x) = (1/d) (x + i)^(1/d - 1),

with d = 2 giving the classical square-root branches sqrt(x+i) - 1 for
digits i in {1, 2, 3}.  Branches and their derivatives extend
holomorphically to any scaled Bernstein ellipse with outer parameter
R < exp(arccosh 3) ~ 5.83, which is what makes the spectral
interpolation error bounds applicable.

An `OperatorSpec` is a list of branches with a weight exponent q (the
weight on branch i is S_i'(x)^q; derivatives are positive on [0, 1], so
no absolute value is needed there, while complex points use the
principal-branch power) and an optional boosted digit term
factor * S_i'(x) * f(S_i x).  This single shape covers the pressure
operator family (q = 1 + t), the digit-frequency operators (boost
factor e^t - 1) and the deleted-digit dimension operators (q = t,
branches {1, 3}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ball import Ball, ComplexBall
from .errors import ParameterError


def _scale(z, s: Ball):
    """z * s for real s, avoiding full complex multiplication."""
    if isinstance(z, ComplexBall):
        return ComplexBall(z.re * s, z.im * s)
    return z * s


def _call(f, x):
    return f.eval(x) if hasattr(f, "eval") else f(x)


@dataclass(frozen=True)
class BranchSpec:
    """One inverse branch (x + digit)^(1/degree) - 1."""

    digit: int
    degree: int = 2

    def __post_init__(self):
        if self.digit < 1:
            raise ParameterError(f"digit must be >= 1, got {self.digit}")
        if self.degree < 1:
            raise ParameterError(f"degree must be >= 1, got {self.degree}")

    def _data(self, x):
        """(S(x), S'(x), (log S')'(x)) at a real or complex enclosure.

        The logarithmic derivative of S' is (1/degree - 1)/(x + digit),
        in closed form, so weight derivatives stay containment-exact.
        """
        base = x + self.digit
        d = self.degree
        if d == 1:
            return base - 1, Ball(1) if isinstance(x, Ball) else ComplexBall(1, 0), _scale(
                1 / base, Ball(0)
            )
        if d == 2:
            s = base.sqrt()
            return s - 1, 1 / (s + s), -(1 / (base + base))
        L = base.log()
        apply_v = _scale(L, Ball(Fraction(1, d))).exp() - 1
        deriv_v = _scale(_scale(L, Ball(Fraction(1 - d, d))).exp(), Ball(Fraction(1, d)))
        dlog_v = _scale(1 / base, Ball(Fraction(1 - d, d)))
        return apply_v, deriv_v, dlog_v

    def apply(self, x):
        """Enclosure of the branch image; maps [0, 1] into [0, 1]."""
        return self._data(x)[0]

    def deriv(self, x):
        """Enclosure of the branch derivative (positive on [0, 1])."""
        return self._data(x)[1]

    def dlog_deriv(self, x):
        """Enclosure of (log S')'(x)."""
        return self._data(x)[2]


@dataclass(frozen=True)
class OperatorSpec:
    """Weighted transfer operator sum_i S_i'(x)^weight_exp * f(S_i x),
    optionally plus factor * S_i'(x) * f(S_i x) for one boosted digit."""

    branches: tuple
    weight_exp: Ball
    boost: tuple | None = None  # (digit, factor)

    def __post_init__(self):
        if not self.branches:
            raise ParameterError("operator needs at least one branch")
        if self.boost is not None:
            digit = self.boost[0]
            if digit not in {b.digit for b in self.branches}:
                raise ParameterError(f"boost digit {digit} has no branch")


def bolyai_full(t) -> OperatorSpec:
    """Pressure operator of the square-root map: weights S_i'^(1+t) over
    digits {1, 2, 3}."""
    return OperatorSpec(
        tuple(BranchSpec(i, 2) for i in (1, 2, 3)),
        Ball(1) + Ball(t),
    )


def bolyai_digit(i: int, t) -> OperatorSpec:
    """Digit-frequency operator: the full pressure operator plus the
    (e^t - 1)-weighted extra copy of digit i."""
    if i not in (1, 2, 3):
        raise ParameterError(f"digit must be 1, 2 or 3, got {i}")
    tb = Ball(t)
    return OperatorSpec(
        tuple(BranchSpec(j, 2) for j in (1, 2, 3)),
        Ball(1) + tb,
        boost=(i, tb.exp() - 1),
    )


def bolyai_deleted(t) -> OperatorSpec:
    """Dimension operator of the deleted-digit Cantor set: weights
    S_i'^t over digits {1, 3} only."""
    return OperatorSpec(
        (BranchSpec(1, 2), BranchSpec(3, 2)),
        Ball(t),
    )


def generalized(degree: int, t) -> OperatorSpec:
    """Pressure operator of the degree-d map (x+1)^d - 1 (mod 1), whose
    2^d - 1 branches are (x+i)^(1/d) - 1; degree 2 recovers the
    classical square-root family."""
    if degree < 2:
        raise ParameterError(f"expansion degree must be >= 2, got {degree}")
    return OperatorSpec(
        tuple(BranchSpec(i, degree) for i in range(1, 2**degree)),
        Ball(1) + Ball(t),
    )


def make_operator(family: str, *, t, digit: int | None = None, degree: int | None = None) -> OperatorSpec:
    """Name-based factory mirroring the individual constructors."""
    if family == "bolyai_full":
        return bolyai_full(t)
    if family == "bolyai_digit":
        if digit is None:
            raise ParameterError("bolyai_digit needs a digit")
        return bolyai_digit(digit, t)
    if family == "bolyai_deleted":
        return bolyai_deleted(t)
    if family == "generalized":
        if degree is None:
            raise ParameterError("generalized needs a degree")
        return generalized(degree, t)
    raise ParameterError(f"unknown operator family {family!r}")


def branch_apply(b: BranchSpec, x):
    return b.apply(x)


def _weight(d, q: Ball):
    """d^q with the cheap exact paths for integer exponents."""
    n = q.is_exact_int()
    if n == 1:
        return d
    if n is not None:
        return d**n
    return d**q


def operator_apply(op: OperatorSpec, f, x):
    """Enclosure of (op f)(x) for a real or complex enclosure x."""
    total = None
    boost_term = None
    for br in op.branches:
        y, d, _ = br._data(x)
        term = _weight(d, op.weight_exp) * _call(f, y)
        total = term if total is None else total + term
        if op.boost is not None and br.digit == op.boost[0]:
            boost_term = _scale(d * _call(f, y), op.boost[1])
    if boost_term is not None:
        total = total + boost_term
    return total


def operator_pair_apply(op: OperatorSpec, f, fprime, x):
    """Enclosures of (op f)(x) and its derivative d/dx (op f)(x).

    Per branch the derivative contribution is
        q * w(x) * (log S')'(x) * f(S x)  +  w(x) * S'(x) * f'(S x)
    with w = S'^q; the boosted-digit term differentiates to
        factor * (S' * (log S')' * f(S x) + S'^2 * f'(S x)).
    """
    total = None
    dtotal = None
    q = op.weight_exp
    for br in op.branches:
        y, d, dl = br._data(x)
        fv = _call(f, y)
        fpv = _call(fprime, y)
        w = _weight(d, q)
        term = w * fv
        dterm = _scale(w * dl * fv, q) + w * d * fpv
        if op.boost is not None and br.digit == op.boost[0]:
            factor = op.boost[1]
            term = term + _scale(d * fv, factor)
            dterm = dterm + _scale(d * dl * fv + d * d * fpv, factor)
        total = term if total is None else total + term
        dtotal = dterm if dtotal is None else dtotal + dterm
    return total, dtotal


def operator_deriv_apply(op: OperatorSpec, f, fprime, x):
    """Enclosure of d/dx (op f)(x); see `operator_pair_apply`."""
    return operator_pair_apply(op, f, fprime, x)[1]
