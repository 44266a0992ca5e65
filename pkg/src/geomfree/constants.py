"""Constructive derivation of Q (first positive zero of cosine) and pi = 2Q.

Q is found by bisection on [0, 2].  Every sign decision is certified in
exact rational arithmetic: a sign is accepted only when the partial sum's
distance from zero exceeds the alternating-series remainder bound, with
the series order doubled until decisive.  A Newton polish then refines Q
far past binary64, and the polished value is re-certified by two more
exact sign checks on a tiny bracket.  The polished rational also yields a
double-double representation of the full period 4Q for range reduction.
"""

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidTolerance, ToleranceTooTight
from .series_kernel import cos_eval_exact, sin_eval_exact

_MAX_TERMS = 100          # series-degree budget: 2*100 = degree 200
_POLISH_BITS = 200        # dyadic rounding between Newton polish steps
_REFINE_RADIUS = Fraction(1, 10 ** 30)


@dataclass(frozen=True)
class ConstantsTable:
    """Q, pi, the sin/cos values at multiples of Q, and certification data.

    q_multiples holds exact small integers, not floats: (k, sin kQ, cos kQ)
    for k = 0..4.  four_q_dd is the double-double period used by range
    reduction, with |hi + lo - 4Q| <= four_q_err certified.
    """

    q: float
    pi: float
    q_multiples: tuple
    certified_bound: float        # radius of the certified bracket around q
    q_exact: Fraction             # polished rational, within refined_radius of Q
    refined_radius: float
    q_float_err: float            # |q - Q| bound for the binary64 field
    four_q_dd: tuple
    four_q_err: float
    bisection_iterations: int


def _sign_or_zero(x, terms_start=8):
    """Certified sign of cos at an exact rational point, or 0 if the degree
    budget runs out before |partial sum| > remainder bound."""
    x = Fraction(x)
    if x == 0:
        return 1
    terms = terms_start
    while terms <= _MAX_TERMS:
        s, b = cos_eval_exact(x, terms)
        if abs(s) > b:
            return 1 if s > 0 else -1
        terms *= 2
    return 0


def _certified_sign(x, terms_start=8):
    """Sign of cos at an exact rational point, certified by remainder bounds.

    Accepts a sign only when |partial sum| > bound; otherwise doubles the
    term count.  Raises ToleranceTooTight on exceeding the degree budget.
    """
    sign = _sign_or_zero(x, terms_start)
    if sign == 0:
        raise ToleranceTooTight(
            f"cos sign at {float(x)} not decidable within degree {2 * _MAX_TERMS}")
    return sign


def _certified_sin_positive(x):
    s, b = sin_eval_exact(Fraction(x), 12)
    return s > b


def _certified_bisection(tol):
    """Bisection on [0, 2] with certified endpoint signs at every step.

    Returns (lo, hi, iterations, history); cos(lo) > 0 and cos(hi) < 0
    hold, certified, throughout.  history records the float brackets.
    """
    lo, hi = Fraction(0), Fraction(2)
    if _certified_sign(lo) <= 0 or _certified_sign(hi) >= 0:
        raise AssertionError("initial bracket signs failed certification")
    tol_fr = Fraction(tol)
    history = [(float(lo), float(hi))]
    iterations = 0
    while hi - lo > tol_fr:
        mid = (lo + hi) / 2
        if _certified_sign(mid) > 0:
            lo = mid
        else:
            hi = mid
        iterations += 1
        history.append((float(lo), float(hi)))
    return lo, hi, iterations, history


def _sin_cos_partial(y, terms=40):
    s, _ = sin_eval_exact(y, terms)
    c, _ = cos_eval_exact(y, terms)
    return s, c


def _round_dyadic(y, bits):
    scale = 1 << bits
    return Fraction(round(y * scale), scale)


def find_q(tol):
    """Locate Q = min{x in [0,2] : cos x = 0} with certified brackets.

    Bisection keeps cos > 0 on the left end and cos < 0 on the right end
    until the bracket width is at most tol.  Cosine is strictly
    decreasing on (0, 2) (its derivative -sin is negative there, checked
    by certified sin-positivity samples), so the bracketed zero is the
    least positive one.  A Newton polish in exact arithmetic then refines
    the midpoint and the result is re-certified on brackets of radius
    tol/2 and 1e-30.
    """
    if not (tol > 0.0) or not math.isfinite(tol):
        raise InvalidTolerance(f"tolerance must be positive and finite, got {tol!r}")
    if tol < 1e-15:
        raise InvalidTolerance("find_q supports tolerances down to 1e-15")

    lo, hi, iterations, _history = _certified_bisection(tol)

    # monotonicity witnesses: sin > 0 at sampled interior bracket points
    width = hi - lo
    for point in (lo + width / 4, lo + width / 2, hi - width / 4):
        if not _certified_sin_positive(point):
            raise AssertionError("sin positivity failed inside the bracket")

    # Newton polish: y <- y + cos(y)/sin(y); quadratic convergence, with
    # dyadic rounding to keep the rationals small
    y = (lo + hi) / 2
    for _ in range(3):
        s, c = _sin_cos_partial(y)
        y = _round_dyadic(y + c / s, _POLISH_BITS)

    if not (lo <= y <= hi):  # paranoia: polish must stay inside the bracket
        y = (lo + hi) / 2

    # re-certify: tiny bracket around the polished value, widening past any
    # indecisive point
    refined = _REFINE_RADIUS
    while _sign_or_zero(y - refined) <= 0 or _sign_or_zero(y + refined) >= 0:
        refined *= 1024
        if refined > (hi - lo):
            y = (lo + hi) / 2
            refined = (hi - lo) / 2
            break

    # certified bracket of radius tol/2 centered on the reported value
    half_tol = Fraction(tol) / 2
    if (y + half_tol <= 4 and _sign_or_zero(y - half_tol) > 0
            and _sign_or_zero(y + half_tol) < 0):
        certified_bound = tol / 2
    else:
        certified_bound = float(hi - lo)

    q_float = float(y)
    q_float_err = float(abs(Fraction(q_float) - y) + refined) * (1.0 + 1e-9)

    four_q = 4 * y
    dd_hi = float(four_q)
    dd_lo = float(four_q - Fraction(dd_hi))
    resid = abs(four_q - Fraction(dd_hi) - Fraction(dd_lo))
    four_q_err = float(resid + 4 * refined) * (1.0 + 1e-9)

    return ConstantsTable(
        q=q_float,
        pi=2.0 * q_float,
        q_multiples=q_multiples_table(),
        certified_bound=certified_bound,
        q_exact=y,
        refined_radius=float(refined),
        q_float_err=q_float_err,
        four_q_dd=(dd_hi, dd_lo),
        four_q_err=four_q_err,
        bisection_iterations=iterations,
    )


def q_multiples_table():
    """(k, sin kQ, cos kQ) for k = 0..4 as exact integers.

    Derived symbolically: sin Q = 1 and cos Q = 0 seed the table, then
    each row follows from the double-angle rule sin 2a = 2 sin a cos a
    and the reflection sin(Q - a) = cos a, never from float evaluation.
    """
    sq, cq = 1, 0
    s2q = 2 * sq * cq                  # sin 2Q = 2 sin Q cos Q
    c2q = -sq                          # cos 2Q = sin(Q - 2Q) = -sin Q
    s3q = sq * c2q + cq * s2q          # sin 3Q = sin(Q + 2Q)
    c3q = -s2q                         # cos 3Q = sin(Q - 3Q) = -sin 2Q
    s4q = 2 * s2q * c2q                # sin 4Q = 2 sin 2Q cos 2Q
    c4q = -s3q                         # cos 4Q = sin(Q - 4Q) = -sin 3Q
    return (
        (0, 0, 1),
        (1, sq, cq),
        (2, s2q, c2q),
        (3, s3q, c3q),
        (4, s4q, c4q),
    )


@functools.lru_cache(maxsize=8)
def _cached_find_q(tol):
    return find_q(tol)


def shared_table():
    """The table used across the package; computed once, immutable after."""
    return _cached_find_q(1e-13)


def pi_value():
    """pi = 2Q from the shared table (built lazily on first use)."""
    return shared_table().pi
