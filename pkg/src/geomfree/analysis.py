"""Inverse sine, the circle integrals, arc length, and the oscillator
cross-check.

arcsin is built two independent ways: Newton iteration on sin y = x
(well-conditioned for |x| <= sqrt(2)/2, reflected through Q - arcsin of
the complementary leg otherwise), and adaptive Simpson quadrature of
1/sqrt(1 - t^2) with the endpoint singularity removed by the exact
substitution u = sqrt(1 - t^2) past the sqrt(2)/2 split.  The ODE oracle
integrates f'' = -f with classical RK4 and tracks the conserved quantity
f^2 + f'^2.
"""

import math
from dataclasses import dataclass, field

from .constants import shared_table
from .errors import DomainError, InvalidTolerance, StepTooLarge
from .series_kernel import CertifiedValue, cos_eval, sin_eval

_U = 2.0 ** -53
_SQRT_HALF = 0.7071067811865476  # float nearest sqrt(1/2)
_MAX_DEPTH = 40


@dataclass
class QuadratureResult:
    value: float
    est_error: float
    evaluations: int


@dataclass
class OdeTrajectory:
    step: float
    points: list = field(default_factory=list)  # (t, f, f')
    energy_drift: float = 0.0


def _check_unit_interval(x):
    if not (-1.0 <= x <= 1.0):
        raise DomainError(f"argument must lie in [-1, 1], got {x!r}")


def _comp_sqrt(ax):
    # sqrt(1 - ax^2) as (1-ax)(1+ax); 1-ax is exact for ax in [1/2, 1]
    return math.sqrt((1.0 - ax) * (1.0 + ax))


def _newton_core(a, tol):
    """Solve sin y = a for a in [0, ~0.708]; returns a CertifiedValue.

    cos y >= 0.7 on the whole iteration range, so the residual
    |sin y - a| converts to a bound on |y - arcsin a| via the mean value
    theorem with constant 1/0.7.
    """
    if a == 0.0:
        return CertifiedValue(0.0, 0.0)
    inner = min(tol, 1e-16)
    y = a
    for _ in range(12):
        s = sin_eval(y, inner)
        c = cos_eval(y, inner)
        dy = (s.value - a) / c.value
        y -= dy
        if abs(dy) <= 4.0 * _U * abs(y):
            break
    s = sin_eval(y, inner)
    resid = abs(s.value - a) + s.abs_error_bound
    bound = resid / 0.7 + _U * abs(y)
    return CertifiedValue(y, bound)


def arcsin_newton(x, tol):
    """Certified arcsin via Newton iteration on the sine series.

    For |x| <= sqrt(2)/2 the iteration runs directly; otherwise the
    reflection arcsin x = sign(x) (Q - arcsin sqrt(1 - x^2)) keeps the
    Newton step conditioned.
    """
    if not (tol > 0.0) or not math.isfinite(tol):
        raise InvalidTolerance(f"tolerance must be positive and finite, got {tol!r}")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x!r}")
    _check_unit_interval(x)
    sign = math.copysign(1.0, x)
    ax = abs(x)
    tbl = shared_table()
    if ax <= _SQRT_HALF:
        core = _newton_core(ax, tol)
        return CertifiedValue(sign * core.value, core.abs_error_bound)
    u = _comp_sqrt(ax)
    u_err = 3.0 * _U * u  # two roundings plus the square root's half-ulp
    core = _newton_core(u, tol)
    y = tbl.q - core.value
    # d arcsin(u)/du = 1/sqrt(1-u^2) = 1/ax <= sqrt(2) on this branch
    bound = (core.abs_error_bound + tbl.q_float_err
             + u_err / ax + _U * abs(y))
    return CertifiedValue(sign * y, bound)


class _Counter:
    __slots__ = ("n",)

    def __init__(self):
        self.n = 0


def _adaptive_simpson(f, a, b, tol, counter):
    """Standard adaptive Simpson with Richardson correction.

    Returns (value, est_error); est_error accumulates |S2 - S1|/15 over
    accepted panels.  Recursion depth is capped; the integrands here are
    regular, so the cap is never the binding constraint at sane
    tolerances.
    """
    def feval(t):
        counter.n += 1
        return f(t)

    def recurse(a, fa, m, fm, b, fb, whole, tol, depth):
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm = feval(lm)
        frm = feval(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        delta = left + right - whole
        if depth >= _MAX_DEPTH or abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0, abs(delta) / 15.0
        lv, le = recurse(a, fa, lm, flm, m, fm, left, tol / 2.0, depth + 1)
        rv, re = recurse(m, fm, rm, frm, b, fb, right, tol / 2.0, depth + 1)
        return lv + rv, le + re

    if a == b:
        return 0.0, 0.0
    fa = feval(a)
    fb = feval(b)
    m = 0.5 * (a + b)
    fm = feval(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return recurse(a, fa, m, fm, b, fb, whole, tol, 0)


def _recip_circle(t):
    return 1.0 / math.sqrt((1.0 - t) * (1.0 + t))


def arcsin_quadrature(x, tol=1e-10):
    """arcsin x as the integral of 1/sqrt(1 - t^2) from 0 to x.

    Past the sqrt(2)/2 split the tail integral is transformed by
    u = sqrt(1 - t^2), which maps it onto the regular head interval and
    removes the endpoint singularity; x = +-1 is therefore an ordinary
    evaluation, reproducing +-pi/2.
    """
    if not (tol > 0.0):
        raise InvalidTolerance(f"tolerance must be positive, got {tol!r}")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x!r}")
    _check_unit_interval(x)
    sign = math.copysign(1.0, x)
    ax = abs(x)
    counter = _Counter()
    if ax <= _SQRT_HALF:
        value, est = _adaptive_simpson(_recip_circle, 0.0, ax, tol, counter)
    else:
        head, e1 = _adaptive_simpson(_recip_circle, 0.0, _SQRT_HALF, tol / 2.0, counter)
        u_b = _comp_sqrt(ax)
        tail, e2 = _adaptive_simpson(_recip_circle, u_b, _SQRT_HALF, tol / 2.0, counter)
        value, est = head + tail, e1 + e2
    return QuadratureResult(sign * value, est, max(counter.n, 1))


def quarter_circle_area(tol=1e-10):
    """Integral of sqrt(1 - x^2) over [0, 1], which equals Q/2 = pi/4.

    The same u = sqrt(1 - x^2) substitution turns the outer piece into
    the regular integral of u^2/sqrt(1 - u^2) over [0, sqrt(2)/2].
    """
    if not (tol > 0.0):
        raise InvalidTolerance(f"tolerance must be positive, got {tol!r}")
    counter = _Counter()

    def circle(t):
        return math.sqrt((1.0 - t) * (1.0 + t))

    def outer(u):
        return u * u / math.sqrt((1.0 - u) * (1.0 + u))

    head, e1 = _adaptive_simpson(circle, 0.0, _SQRT_HALF, tol / 2.0, counter)
    tail, e2 = _adaptive_simpson(outer, 0.0, _SQRT_HALF, tol / 2.0, counter)
    return QuadratureResult(head + tail, e1 + e2, counter.n)


def arcsin_derivative_check(grid, h):
    """Max |central difference of arcsin - 1/sqrt(1-x^2)| over the grid.

    Expected O(h^2) away from +-1; the grid must stay inside
    (-1 + h, 1 - h) so both stencil points are in-domain.
    """
    if h <= 0.0:
        raise ValueError("h must be positive")
    worst = 0.0
    for x in grid:
        if not (-1.0 + h < x < 1.0 - h):
            raise DomainError(f"grid point {x!r} too close to the endpoints")
        hi = arcsin_newton(x + h, 1e-15).value
        lo = arcsin_newton(x - h, 1e-15).value
        diff = (hi - lo) / (2.0 * h)
        ref = 1.0 / math.sqrt((1.0 - x) * (1.0 + x))
        worst = max(worst, abs(diff - ref))
    return worst


def arc_length(a, b, tol=1e-10):
    """Arc length of y = sqrt(1 - x^2) from x=a to x=b, via the identity
    sqrt(1 + (dy/dx)^2) = 1/sqrt(1 - x^2): equals arcsin b - arcsin a."""
    a, b = float(a), float(b)
    if not (-1.0 <= a <= b <= 1.0):
        raise DomainError(f"need -1 <= a <= b <= 1, got a={a!r}, b={b!r}")
    ga = arcsin_quadrature(a, tol / 2.0)
    gb = arcsin_quadrature(b, tol / 2.0)
    value = gb.value - ga.value
    est = ga.est_error + gb.est_error + _U * abs(value)
    return QuadratureResult(value, est, ga.evaluations + gb.evaluations)


def unit_circle_point(a):
    """The point (cos s, sin s) at arc length s = Q - arcsin(a) from (1, 0)
    along the upper unit circle; checks that it reproduces
    (a, sqrt(1 - a^2)) within certified bounds."""
    a = float(a)
    _check_unit_interval(a)
    tbl = shared_table()
    inv = arcsin_newton(a, 1e-14)
    s = tbl.q - inv.value
    s_err = inv.abs_error_bound + tbl.q_float_err + _U * abs(s)
    cs = cos_eval(s, 1e-15)
    sn = sin_eval(s, 1e-15)
    comp = _comp_sqrt(abs(a))
    if abs(cs.value - a) > cs.abs_error_bound + s_err + 4.0 * _U:
        raise AssertionError("cos(arc length) failed to reproduce the abscissa")
    if abs(sn.value - comp) > sn.abs_error_bound + s_err + 4.0 * _U * (1.0 + comp):
        raise AssertionError("sin(arc length) failed to reproduce the ordinate")
    return cs.value, sn.value, s


def ode_oracle(t_end, step):
    """Classical RK4 on f'' = -f from (f, f') = (0, 1).

    Records the trajectory and the drift of the conserved quantity
    f^2 + f'^2 (identically 1 along the true solution).  Fixed step keeps
    the O(step^4) global error bound statable.
    """
    t_end = float(t_end)
    step = float(step)
    if not (0.0 < step <= 1e-2):
        raise StepTooLarge(f"step must be in (0, 1e-2], got {step!r}")
    if not (0.0 <= t_end <= 100.0):
        raise DomainError(f"t_end must be in [0, 100], got {t_end!r}")

    def rhs(f, g):
        return g, -f

    f, g = 0.0, 1.0
    points = [(0.0, f, g)]
    drift = 0.0
    n_full = int(math.floor(t_end / step + 1e-12))
    remainder = t_end - n_full * step

    def rk4_step(f, g, h):
        k1f, k1g = rhs(f, g)
        k2f, k2g = rhs(f + 0.5 * h * k1f, g + 0.5 * h * k1g)
        k3f, k3g = rhs(f + 0.5 * h * k2f, g + 0.5 * h * k2g)
        k4f, k4g = rhs(f + h * k3f, g + h * k3g)
        return (f + h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f),
                g + h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g))

    for i in range(1, n_full + 1):
        f, g = rk4_step(f, g, step)
        points.append((i * step, f, g))
        drift = max(drift, abs(f * f + g * g - 1.0))
    if remainder > 0.0:
        f, g = rk4_step(f, g, remainder)
        points.append((t_end, f, g))
        drift = max(drift, abs(f * f + g * g - 1.0))
    return OdeTrajectory(step=step, points=points, energy_drift=drift)
