"""Numerical modular j-invariant and the real-j locus.

j is evaluated from q-expansions after reducing the point to the standard
fundamental domain, where |q| <= exp(-pi*sqrt(3)) makes the series converge in
a handful of terms. The real-j locus splits into two branches, the imaginary
axis from i upward (j >= 1728, increasing) and the vertical line at real part
1/2 (j < 1728, decreasing); each branch function is strictly monotone, so
points are located by bisection.

The locus contains line points below the fundamental domain (imaginary part
between 1/2 and sqrt(3)/2); those are reached by monotone inversion of the
branch function, never by matrix gymnastics.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

from .cmpoints import TauExact
from .errors import InternalCheckError, NotRealJError

SERIES_CUTOFF = 1e-20  # stop when the next term is this small vs the partial sum
SERIES_MAX_TERMS = 64
REAL_J_TOL = 1e-6  # |Im j| < tol*(1+|j|) counts as real
BRANCH_RESIDUAL_TOL = 1e-6
BISECT_T_TOL = 1e-12
F_CURVE_IMAG_TOL = 1e-9

J_SPLIT = 1728.0  # branch junction value j(i)

# beyond this height the tail after 1/q + 744 is below double precision
_CUSP_HEIGHT = 80.0
# largest exponent with exp(x) finite in a double
_EXP_MAX = 709.0


def _sigma3_table(limit: int) -> list[int]:
    sig = [0] * (limit + 1)
    for d in range(1, limit + 1):
        cube = d * d * d
        for n in range(d, limit + 1, d):
            sig[n] += cube
    return sig


_SIGMA3 = _sigma3_table(SERIES_MAX_TERMS)


@dataclass(frozen=True)
class TPoint:
    """A point of the real-j locus: branch T1 is i*t with t >= 1, branch T2 is
    1/2 + i*t with t > 1/2."""

    branch: Literal["T1", "T2"]
    t: float

    def __post_init__(self):
        if self.branch == "T1":
            if self.t < 1.0 - 1e-12:
                raise ValueError("branch T1 needs t >= 1")
        elif self.branch == "T2":
            if self.t <= 0.5:
                raise ValueError("branch T2 needs t > 1/2")
        else:
            raise ValueError("branch must be 'T1' or 'T2'")

    def __complex__(self) -> complex:
        if self.branch == "T1":
            return complex(0.0, self.t)
        return complex(0.5, self.t)


def _reduce_numeric(z: complex) -> complex:
    for _ in range(256):
        shift = math.floor(z.real + 0.5)
        if shift:
            z = complex(z.real - shift, z.imag)
        if z.real * z.real + z.imag * z.imag < 1.0 - 1e-15:
            z = -1.0 / z
        else:
            return z
    raise InternalCheckError("fundamental-domain reduction did not converge")


def _eisenstein4(q: complex) -> complex:
    total = 1.0 + 0.0j
    qn = 1.0 + 0.0j
    for n in range(1, SERIES_MAX_TERMS + 1):
        qn *= q
        term = 240.0 * _SIGMA3[n] * qn
        total += term
        if abs(term) < SERIES_CUTOFF * abs(total):
            break
    return total


def _eta_factor(q: complex) -> complex:
    """prod(1 - q^n); cube of its 8th power times q gives the discriminant form."""
    prod = 1.0 + 0.0j
    qn = 1.0 + 0.0j
    for _ in range(SERIES_MAX_TERMS):
        qn *= q
        prod *= 1.0 - qn
        if abs(qn) < SERIES_CUTOFF * abs(prod):
            break
    return prod


def _j_cusp_asymptotic(z: complex) -> complex:
    """Leading behavior 1/q + 744 for reduced points above _CUSP_HEIGHT, where
    the remaining tail is far below double precision.

    When even the leading term exceeds the double range the components
    overflow to signed infinities; a component whose phase factor vanishes
    (points on the real-j locus) stays exactly zero instead of picking up
    rounding noise times infinity.
    """
    theta = -2.0 * math.pi * z.real
    grow = 2.0 * math.pi * z.imag
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    if grow <= _EXP_MAX:
        mag = math.exp(grow)
        return complex(mag * cos_t + 744.0, mag * sin_t)

    def overflow(component: float) -> float:
        if abs(component) < 1e-12:
            return 0.0
        return math.copysign(math.inf, component)

    return complex(overflow(cos_t), overflow(sin_t))


def j_numeric(tau: complex) -> complex:
    """j at a numeric upper-half-plane point, to ~1e-9 relative accuracy.

    Reduces to the fundamental domain first; evaluating the raw series at
    small imaginary part would lose everything. Values beyond the double
    range round to signed infinities (the cusp is a pole).
    """
    tau = complex(tau)
    if not (math.isfinite(tau.real) and math.isfinite(tau.imag)):
        raise ValueError("point must have finite coordinates")
    if tau.imag <= 0:
        raise ValueError("point must lie in the upper half-plane")
    z = _reduce_numeric(tau)
    if z.imag > _CUSP_HEIGHT:
        return _j_cusp_asymptotic(z)
    q = cmath.exp(2j * math.pi * z)
    e4 = _eisenstein4(q)
    delta = q * _eta_factor(q) ** 24
    return e4**3 / delta


def reduce_fundamental(t: TauExact) -> tuple[TauExact, tuple[tuple[int, int], tuple[int, int]]]:
    """Gauss-reduce the triple to |b| <= a <= c and return the unimodular
    matrix ((p, q), (r, s)) with reduced = (p*tau + q)/(r*tau + s).

    Translation normalizes b into [-a, a), i.e. real part into (-1/2, 1/2];
    the swap step inverts when a > c. j is unchanged throughout.
    """
    a, b, c = t.a, t.b, t.c
    # rows of the accumulated matrix, reduced = ((p, q), (r, s)) applied to tau
    p, q, r, s = 1, 0, 0, 1
    while True:
        shift = (b + a) // (2 * a)  # tau -> tau + shift brings b into [-a, a)
        if shift:
            b, c = b - 2 * a * shift, a * shift * shift - b * shift + c
            p, q = p + shift * r, q + shift * s
        if a > c:
            a, b, c = c, -b, a  # tau -> -1/tau
            p, q, r, s = -r, -s, p, q
        else:
            break
    reduced = TauExact(a, b, c)
    if not (abs(reduced.b) <= reduced.a <= reduced.c):
        raise InternalCheckError("reduction postcondition failed")
    return reduced, ((p, q), (r, s))


def is_real_j(t: TauExact) -> bool:
    """Whether j(tau) is real: the reduced triple is ambiguous (b = 0, |b| = a,
    or a = c). The form criterion is double-checked numerically rather than
    trusted alone."""
    reduced, _ = reduce_fundamental(t)
    by_form = (
        reduced.b == 0 or abs(reduced.b) == reduced.a or reduced.a == reduced.c
    )
    j = j_numeric(complex(t))
    by_value = abs(j.imag) < REAL_J_TOL * (1.0 + abs(j))
    if by_form != by_value:
        raise InternalCheckError(
            f"form criterion ({by_form}) and numeric criterion ({by_value}) "
            f"disagree for {t}: j = {j}"
        )
    return by_form


def axis_curve(t: float) -> float:
    """j(i*t) for t >= 1; strictly increasing with value 1728 at t = 1."""
    if t < 1.0 - 1e-12:
        raise ValueError("axis branch needs t >= 1")
    j = j_numeric(complex(0.0, t))
    return j.real


def f_curve(t: float) -> float:
    """j(1/2 + i*t) for t >= 1/2; strictly decreasing from f(1/2) = 1728.

    The imaginary part of the computed value must vanish to working accuracy,
    which is asserted.
    """
    if t < 0.5:
        raise ValueError("line branch needs t >= 1/2")
    j = j_numeric(complex(0.5, t))
    if abs(j.imag) >= F_CURVE_IMAG_TOL * (1.0 + abs(j)):
        raise InternalCheckError(f"line-branch value not real: j({t}) = {j}")
    return j.real


def _bisect_increasing(fun, lo: float, hi: float, target: float) -> float:
    for _ in range(256):
        if hi - lo <= BISECT_T_TOL:
            break
        mid = 0.5 * (lo + hi)
        if fun(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def t_representative(t: TauExact) -> TPoint:
    """Locate the unique real-locus point with the same j as tau.

    Values at or above 1728 go to branch T1 (so j = 1728 maps to (T1, 1)),
    values below to branch T2; each branch is found by bisection against the
    strictly monotone branch function.
    """
    if not is_real_j(t):
        raise NotRealJError(f"{t} does not have a real j-invariant")
    target = j_numeric(complex(t)).real
    if abs(target - J_SPLIT) <= 1e-9 * (1.0 + J_SPLIT):
        # junction tie-break: j = 1728 belongs to branch T1 at t = 1, and the
        # axis curve is flat there, so bisection noise is avoided outright
        return TPoint("T1", 1.0)
    if target >= J_SPLIT:
        lo, hi = 1.0, 2.0
        while axis_curve(hi) < target:
            lo, hi = hi, hi * 2.0
        result = TPoint("T1", _bisect_increasing(axis_curve, lo, hi, target))
    else:
        lo, hi = 0.5, 1.0
        while f_curve(hi) > target:
            lo, hi = hi, hi * 2.0
        # f decreases; bisect on -f to reuse the increasing search
        tt = _bisect_increasing(lambda x: -f_curve(x), lo, hi, -target)
        result = TPoint("T2", tt)
    residual = abs(j_numeric(complex(result)) - target)
    if residual >= BRANCH_RESIDUAL_TOL * (1.0 + abs(target)):
        raise InternalCheckError(
            f"branch inversion residual {residual} too large for {t}"
        )
    return result
