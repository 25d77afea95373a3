"""Arbitrary-precision ball arithmetic with a containment guarantee.

`Ball` encloses a real number by a closed interval with directed-rounded
endpoints; `ComplexBall` encloses a complex number by a rectangle
(re x im).  Every operation is inclusion monotone: the result encloses
the exact image of the input enclosures, so a computation that completes
without raising carries a mathematical guarantee.  The midpoint/radius
view is derived from the endpoints and always satisfies
[mid - rad, mid + rad] >= [lo, hi].

Endpoint arithmetic is delegated to mpmath's interval primitives
(`mpmath.libmp.libmpi`), which round outward at the working precision.
The working precision is module-wide; set it with `set_precision` or the
`precision` context manager.  Operations never mutate their operands.

Domain violations raise `InvalidBallError` (or `BranchCutError` for
complex enclosures meeting the principal cut) instead of returning
infinities, so "bound failed" is always distinguishable from "bound
negative".
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath.libmp import (
    from_float,
    from_int,
    fzero,
    mpf_add,
    mpf_ge,
    mpf_gt,
    mpf_le,
    mpf_lt,
    mpf_shift,
    mpf_sub,
    round_ceiling,
    round_nearest,
    to_int,
)
from mpmath.libmp.libmpi import (
    mpi_abs,
    mpi_add,
    mpi_atan2,
    mpi_cos_sin,
    mpi_cosh_sinh,
    mpi_div,
    mpi_exp,
    mpi_from_str,
    mpi_log,
    mpi_mul,
    mpi_neg,
    mpi_pi,
    mpi_pow,
    mpi_pow_int,
    mpi_shift,
    mpi_sqrt,
    mpi_square,
    mpi_str,
    mpi_sub,
)

from .errors import BranchCutError, InvalidBallError, ParameterError

_PREC = 384


def get_precision() -> int:
    """Current working precision in bits."""
    return _PREC


def set_precision(bits: int) -> None:
    if bits < 2:
        raise ParameterError(f"precision must be >= 2 bits, got {bits}")
    global _PREC
    _PREC = int(bits)


@contextmanager
def precision(bits: int):
    """Temporarily switch the working precision."""
    global _PREC
    old = _PREC
    set_precision(bits)
    try:
        yield
    finally:
        _PREC = old


@dataclass(frozen=True)
class PrecisionConfig:
    """Working precision plus the method parameters of a certified run.

    eps   pressure-probe offset (kept as a decimal string; enclosed
          outward when used, so non-dyadic values like 1e-50 stay exact)
    m     operator approximation rank
    n     projection rank for the quotient-derivative function
    k     subinterval count for sup/inf enclosures (and circle coverage)
    rho   inner Bernstein-ellipse parameter, 1 < rho < R
    R     outer Bernstein-ellipse parameter
    delta stopping width of the dimension search
    """

    prec: int = 384
    eps: str = "1e-20"
    m: int = 100
    n: int = 120
    k: int = 128
    rho: float = 1.001
    R: float = 5.5
    delta: float = 1e-15

    def __post_init__(self):
        object.__setattr__(self, "eps", str(self.eps))
        if self.prec < 64:
            raise ParameterError(f"prec must be >= 64, got {self.prec}")
        if self.m < 2 or self.n < 2:
            raise ParameterError(f"ranks m, n must be >= 2, got m={self.m}, n={self.n}")
        if self.k < 1:
            raise ParameterError(f"subinterval count k must be >= 1, got {self.k}")
        if not (1.0 < self.rho < self.R):
            raise ParameterError(f"need 1 < rho < R, got rho={self.rho}, R={self.R}")
        try:
            eps_val = float(self.eps)
        except ValueError as exc:
            raise ParameterError(f"eps is not a number: {self.eps!r}") from exc
        if not eps_val > 0:
            raise ParameterError(f"eps must be positive, got {self.eps}")
        if not self.delta > 0:
            raise ParameterError(f"delta must be positive, got {self.delta}")


def _is_finite(raw) -> bool:
    # man == 0 means zero or a special value; zero has exp == 0 and bc == 0
    return bool(raw[1]) or (not raw[2] and not raw[3])


def _to_raw(x):
    """Exact raw-mpf representation of a scalar, or None."""
    if isinstance(x, int):
        return from_int(x)
    if isinstance(x, float):
        return from_float(x)
    m = getattr(x, "_mpf_", None)
    if m is not None:
        return m
    return None


class Ball:
    """Enclosure of a real number by a closed interval [lo, hi].

    Construct from int, float, `mpmath.mpf` (all exact), a decimal
    string (outward-rounded enclosure of the decimal value), a
    `Fraction` (enclosure of the exact rational), or another Ball.
    """

    __slots__ = ("_v",)

    def __init__(self, value=0):
        if isinstance(value, Ball):
            self._v = value._v
            return
        if isinstance(value, str):
            self._v = mpi_from_str(value, _PREC)
        elif isinstance(value, Fraction):
            num = from_int(value.numerator)
            den = from_int(value.denominator)
            self._v = mpi_div((num, num), (den, den), _PREC)
        else:
            raw = _to_raw(value)
            if raw is None:
                raise TypeError(f"cannot make a Ball from {type(value).__name__}")
            self._v = (raw, raw)
        if not (_is_finite(self._v[0]) and _is_finite(self._v[1])):
            raise InvalidBallError(f"non-finite ball from {value!r}")

    @classmethod
    def _wrap(cls, pair) -> "Ball":
        if not (_is_finite(pair[0]) and _is_finite(pair[1])):
            raise InvalidBallError("operation produced a non-finite enclosure")
        b = object.__new__(cls)
        b._v = pair
        return b

    @classmethod
    def from_endpoints(cls, lo, hi) -> "Ball":
        a = _to_raw(lo)
        b = _to_raw(hi)
        if a is None or b is None:
            raise TypeError("endpoints must be int, float or mpf")
        if mpf_gt(a, b):
            raise InvalidBallError("from_endpoints: lo > hi")
        return cls._wrap((a, b))

    @classmethod
    def from_mid_rad(cls, mid, rad) -> "Ball":
        m = Ball(mid)
        r = Ball(rad)
        if mpf_lt(r._v[0], fzero):
            raise InvalidBallError("radius must be non-negative")
        return cls._wrap(((m - r)._v[0], (m + r)._v[1]))

    @classmethod
    def hull(cls, *values) -> "Ball":
        balls = [v if isinstance(v, Ball) else Ball(v) for v in values]
        lo = balls[0]._v[0]
        hi = balls[0]._v[1]
        for b in balls[1:]:
            if mpf_lt(b._v[0], lo):
                lo = b._v[0]
            if mpf_gt(b._v[1], hi):
                hi = b._v[1]
        return cls._wrap((lo, hi))

    @classmethod
    def pi(cls) -> "Ball":
        return cls._wrap(mpi_pi(_PREC))

    # -- views ---------------------------------------------------------

    @property
    def lo(self) -> mpmath.mpf:
        return mpmath.mp.make_mpf(self._v[0])

    @property
    def hi(self) -> mpmath.mpf:
        return mpmath.mp.make_mpf(self._v[1])

    @property
    def mid(self) -> mpmath.mpf:
        # exact: the sum of two finite dyadics halved
        return mpmath.mp.make_mpf(
            mpf_shift(mpf_add(self._v[0], self._v[1], 0, round_nearest), -1)
        )

    @property
    def rad(self) -> mpmath.mpf:
        return mpmath.mp.make_mpf(
            mpf_shift(mpf_sub(self._v[1], self._v[0], 53, round_ceiling), -1)
        )

    @property
    def width(self) -> mpmath.mpf:
        return mpmath.mp.make_mpf(mpf_sub(self._v[1], self._v[0], 53, round_ceiling))

    def __float__(self) -> float:
        return float(self.mid)

    def __repr__(self) -> str:
        return f"Ball({mpi_str(self._v, _PREC)})"

    # -- predicates ----------------------------------------------------

    def contains(self, other) -> bool:
        """True when the enclosure of `other` lies inside this one."""
        o = other if isinstance(other, Ball) else Ball(other)
        return bool(mpf_le(self._v[0], o._v[0]) and mpf_ge(self._v[1], o._v[1]))

    def overlaps(self, other: "Ball") -> bool:
        return not (mpf_lt(self._v[1], other._v[0]) or mpf_gt(self._v[0], other._v[1]))

    @property
    def contains_zero(self) -> bool:
        return bool(mpf_le(self._v[0], fzero) and mpf_ge(self._v[1], fzero))

    @property
    def is_positive(self) -> bool:
        """Certainly positive: the lower endpoint exceeds zero."""
        return bool(mpf_gt(self._v[0], fzero))

    @property
    def is_negative(self) -> bool:
        return bool(mpf_lt(self._v[1], fzero))

    def is_exact_int(self):
        """The exact integer this point ball represents, else None."""
        a, b = self._v
        if a != b:
            return None
        if a == fzero:
            return 0
        if a[2] >= 0:  # non-negative exponent: value is man * 2**exp
            return to_int(a)
        return None

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Ball):
            return other
        if isinstance(other, (int, float, Fraction)) or hasattr(other, "_mpf_"):
            return Ball(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Ball._wrap(mpi_add(self._v, o._v, _PREC))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Ball._wrap(mpi_sub(self._v, o._v, _PREC))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Ball._wrap(mpi_sub(o._v, self._v, _PREC))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Ball._wrap(mpi_mul(self._v, o._v, _PREC))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.contains_zero:
            raise InvalidBallError("division by a ball containing zero")
        return Ball._wrap(mpi_div(self._v, o._v, _PREC))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return Ball._wrap(mpi_neg(self._v, _PREC))

    def __abs__(self):
        return Ball._wrap(mpi_abs(self._v, _PREC))

    def __pow__(self, e):
        if isinstance(e, int):
            if e < 0 and self.contains_zero:
                raise InvalidBallError("negative power of a ball containing zero")
            return Ball._wrap(mpi_pow_int(self._v, e, _PREC))
        o = self._coerce(e)
        if o is None:
            return NotImplemented
        n = o.is_exact_int()
        if n is not None:
            return self.__pow__(n)
        if not self.is_positive:
            raise InvalidBallError("real power of a ball not strictly positive")
        return Ball._wrap(mpi_pow(self._v, o._v, _PREC))

    def sqr(self) -> "Ball":
        return Ball._wrap(mpi_square(self._v, _PREC))

    def half(self) -> "Ball":
        return Ball._wrap(mpi_shift(self._v, -1))

    # -- kernel functions ----------------------------------------------

    def sqrt(self) -> "Ball":
        if mpf_lt(self._v[0], fzero):
            raise InvalidBallError("sqrt of a ball extending below zero")
        return Ball._wrap(mpi_sqrt(self._v, _PREC))

    def exp(self) -> "Ball":
        return Ball._wrap(mpi_exp(self._v, _PREC))

    def log(self) -> "Ball":
        if not self.is_positive:
            raise InvalidBallError("log of a ball touching zero or below")
        return Ball._wrap(mpi_log(self._v, _PREC))

    def cos_sin(self):
        c, s = mpi_cos_sin(self._v, _PREC)
        return Ball._wrap(c), Ball._wrap(s)

    def cos(self) -> "Ball":
        return self.cos_sin()[0]

    def sin(self) -> "Ball":
        return self.cos_sin()[1]

    def cosh_sinh(self):
        c, s = mpi_cosh_sinh(self._v, _PREC)
        return Ball._wrap(c), Ball._wrap(s)

    def cosh(self) -> "Ball":
        return self.cosh_sinh()[0]

    def sinh(self) -> "Ball":
        return self.cosh_sinh()[1]


def atan2(y: Ball, x: Ball) -> Ball:
    """Enclosure of the principal argument of the rectangle x + iy."""
    return Ball._wrap(mpi_atan2(y._v, x._v, _PREC))


class ComplexBall:
    """Rectangular enclosure re x im of a complex number.

    sqrt/log/pow use the principal branch; they raise `BranchCutError`
    when the rectangle meets the cut (-inf, 0].
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Ball) else Ball(re)
        self.im = im if isinstance(im, Ball) else Ball(im)

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexBall":
        return cls(Ball(z.real), Ball(z.imag))

    def __repr__(self) -> str:
        return f"ComplexBall({self.re!r}, {self.im!r})"

    def _coerce(self, other):
        if isinstance(other, ComplexBall):
            return other
        if isinstance(other, complex):
            return ComplexBall.from_complex(other)
        if isinstance(other, (Ball, int, float, Fraction)) or hasattr(other, "_mpf_"):
            return ComplexBall(other, 0)
        return None

    def conj(self) -> "ComplexBall":
        return ComplexBall(self.re, -self.im)

    def contains(self, other) -> bool:
        o = other if isinstance(other, ComplexBall) else self._coerce(other)
        return self.re.contains(o.re) and self.im.contains(o.im)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexBall(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexBall(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexBall(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re.sqr() + o.im.sqr()
        if d.contains_zero:
            raise InvalidBallError("division by a complex enclosure containing zero")
        return ComplexBall(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return ComplexBall(-self.re, -self.im)

    def abs2(self) -> Ball:
        return self.re.sqr() + self.im.sqr()

    def __abs__(self) -> Ball:
        return self.abs2().sqrt()

    # -- principal-branch functions -------------------------------------

    def _require_off_cut(self):
        if self.re.is_positive or self.im.is_positive or self.im.is_negative:
            return
        raise BranchCutError("complex enclosure intersects the branch cut (-inf, 0]")

    def exp(self) -> "ComplexBall":
        er = self.re.exp()
        c, s = self.im.cos_sin()
        return ComplexBall(er * c, er * s)

    def log(self) -> "ComplexBall":
        self._require_off_cut()
        return ComplexBall(self.abs2().log().half(), atan2(self.im, self.re))

    def sqrt(self) -> "ComplexBall":
        L = self.log()
        return ComplexBall(L.re.half(), L.im.half()).exp()

    def __pow__(self, e) -> "ComplexBall":
        if isinstance(e, int):
            # integer powers need no cut: square-and-multiply
            if e < 0:
                return 1 / self.__pow__(-e)
            result = ComplexBall(1, 0)
            base = self
            n = e
            while n:
                if n & 1:
                    result = result * base
                base = base * base
                n >>= 1
            return result
        eb = e if isinstance(e, Ball) else Ball(e)
        L = self.log()
        return ComplexBall(L.re * eb, L.im * eb).exp()


def _interval_bounds(interval):
    """Lower/upper Balls of an interval given as a ScaledInterval-like
    object (attributes c, r) or a (lo, hi) pair."""
    c = getattr(interval, "c", None)
    r = getattr(interval, "r", None)
    if c is not None and r is not None:
        c = c if isinstance(c, Ball) else Ball(c)
        r = r if isinstance(r, Ball) else Ball(r)
        return c - r, c + r
    lo, hi = interval
    return Ball(lo), Ball(hi)


def subdivide(interval, k: int):
    """k sub-balls whose union covers the interval, with exact outer edges."""
    if k < 1:
        raise ParameterError(f"subinterval count must be >= 1, got {k}")
    lo, hi = _interval_bounds(interval)
    w = hi - lo
    points = [lo]
    for i in range(1, k):
        points.append(lo + w * i / k)
    points.append(hi)
    return [Ball.hull(points[i], points[i + 1]) for i in range(k)]


def _raw_max(raws):
    best = raws[0]
    for r in raws[1:]:
        if mpf_gt(r, best):
            best = r
    return best


def _raw_min(raws):
    best = raws[0]
    for r in raws[1:]:
        if mpf_lt(r, best):
            best = r
    return best


def sup_ball(fn, interval, k: int) -> Ball:
    """Rigorous enclosure of sup fn over the interval.

    Evaluates fn on k equal subintervals; the upper endpoint of the
    returned ball is a certified upper bound for the supremum, and the
    lower endpoint a certified lower bound for it.  Tightens as k grows
    for continuous fn.  Domain errors raised by fn propagate.
    """
    los, his = [], []
    for piece in subdivide(interval, k):
        r = fn(piece)
        los.append(r._v[0])
        his.append(r._v[1])
    return Ball._wrap((_raw_max(los), _raw_max(his)))


def inf_ball(fn, interval, k: int) -> Ball:
    """Mirror of `sup_ball`: the lower endpoint of the returned ball is a
    certified lower bound for the infimum of fn over the interval."""
    los, his = [], []
    for piece in subdivide(interval, k):
        r = fn(piece)
        los.append(r._v[0])
        his.append(r._v[1])
    return Ball._wrap((_raw_min(los), _raw_min(his)))


def sqrt(x):
    return x.sqrt()


def exp(x):
    return x.exp()


def log(x):
    return x.log()
