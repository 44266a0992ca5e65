"""Numeric property suite for the standard sine/cosine identities,
periodicity, and the special-angle table.

Every check compares two certified evaluations: the pass criterion is
|lhs - rhs| <= (sum of certified bounds) + a 4-ulp grid slack absorbing
the checker's own final arithmetic.  Argument formation (x - y, Q - x,
x + 4Q, ...) is folded into the lhs bound, so the records stay honest
even where the identity's argument is not exactly representable.
"""

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .constants import shared_table
from .errors import UnknownIdentity
from .series_kernel import CertifiedValue, cos_eval, sin_eval

_U = 2.0 ** -53
_EPS = 2.0 ** -52  # ulp(1)


@dataclass
class IdentityCheck:
    """Result of checking one identity at one (or a worst-case) sample."""

    name: str
    lhs: float
    rhs: float
    combined_bound: float
    passed: bool
    sample_points: list = field(default_factory=list)

    @property
    def discrepancy(self):
        return abs(self.lhs - self.rhs)


def _slack(lhs, rhs):
    # 4 ulp on top of the certified bounds, scaled to the values compared
    return 4.0 * _EPS * max(1.0, abs(lhs), abs(rhs))


def _inflate(cv, extra):
    return CertifiedValue(cv.value, cv.abs_error_bound + extra)


def _sin_at(arg, tol, arg_err=0.0):
    return _inflate(sin_eval(arg, tol), _U * abs(arg) + arg_err)


def _cos_at(arg, tol, arg_err=0.0):
    return _inflate(cos_eval(arg, tol), _U * abs(arg) + arg_err)


# --- identity registry -------------------------------------------------
# Each entry: arity, and a function (sample, tol, table) -> (lhs, rhs)
# as CertifiedValues with argument formation already accounted for.

def _sine_difference(sample, tol, tbl):
    x, y = sample
    lhs = _sin_at(x - y, tol)
    rhs = sin_eval(x, tol) * cos_eval(y, tol) - cos_eval(x, tol) * sin_eval(y, tol)
    return lhs, rhs


def _sine_double_angle(sample, tol, tbl):
    x = sample
    lhs = sin_eval(2.0 * x, tol)  # doubling is exact in binary fp
    rhs = 2.0 * (sin_eval(x, tol) * cos_eval(x, tol))
    return lhs, rhs


def _cofunction_sine(sample, tol, tbl):
    x = sample
    lhs = _sin_at(tbl.q - x, tol, arg_err=tbl.q_float_err)
    rhs = cos_eval(x, tol)
    return lhs, rhs


def _cofunction_cosine(sample, tol, tbl):
    x = sample
    lhs = _cos_at(tbl.q - x, tol, arg_err=tbl.q_float_err)
    rhs = sin_eval(x, tol)
    return lhs, rhs


def _cosine_sum(sample, tol, tbl):
    x, y = sample
    lhs = _cos_at(x + y, tol)
    rhs = cos_eval(x, tol) * cos_eval(y, tol) - sin_eval(x, tol) * sin_eval(y, tol)
    return lhs, rhs


def _cosine_difference(sample, tol, tbl):
    x, y = sample
    lhs = _cos_at(x - y, tol)
    rhs = cos_eval(x, tol) * cos_eval(y, tol) + sin_eval(x, tol) * sin_eval(y, tol)
    return lhs, rhs


def _cosine_double_angle(sample, tol, tbl):
    x = sample
    lhs = cos_eval(2.0 * x, tol)
    c = cos_eval(x, tol)
    rhs = 2.0 * (c * c) - 1.0
    return lhs, rhs


def _cosine_squared(sample, tol, tbl):
    x = sample
    c = cos_eval(x, tol)
    lhs = c * c
    rhs = 0.5 + 0.5 * cos_eval(2.0 * x, tol)
    return lhs, rhs


def _sine_triple_angle(sample, tol, tbl):
    x = sample
    lhs = _sin_at(3.0 * x, tol)
    s = sin_eval(x, tol)
    rhs = 3.0 * s - 4.0 * (s * s * s)
    return lhs, rhs


_IDENTITIES = {
    "sine_difference": (2, _sine_difference),
    "sine_double_angle": (1, _sine_double_angle),
    "cofunction_sine": (1, _cofunction_sine),
    "cofunction_cosine": (1, _cofunction_cosine),
    "cosine_sum": (2, _cosine_sum),
    "cosine_difference": (2, _cosine_difference),
    "cosine_double_angle": (1, _cosine_double_angle),
    "cosine_squared": (1, _cosine_squared),
    "sine_triple_angle": (1, _sine_triple_angle),
}


def registered_identities():
    return sorted(_IDENTITIES)


def identity_arity(name):
    if name not in _IDENTITIES:
        raise UnknownIdentity(name)
    return _IDENTITIES[name][0]


def check_identity(name, samples, tol=1e-15):
    """Evaluate both sides of a registered identity at every sample.

    `samples` holds floats (1-argument identities) or (x, y) pairs.
    Returns one IdentityCheck per sample.
    """
    if name not in _IDENTITIES:
        raise UnknownIdentity(name)
    arity, fn = _IDENTITIES[name]
    tbl = shared_table()
    out = []
    for sample in samples:
        if arity == 2:
            x, y = sample
            points = [float(x), float(y)]
            sample = (float(x), float(y))
        else:
            sample = float(sample)
            points = [sample]
        lhs, rhs = fn(sample, tol, tbl)
        combined = lhs.abs_error_bound + rhs.abs_error_bound
        passed = abs(lhs.value - rhs.value) <= combined + _slack(lhs.value, rhs.value)
        out.append(IdentityCheck(name, lhs.value, rhs.value, combined, passed, points))
    return out


def default_samples(name, n, seed=0):
    """Deterministic sample set: adversarial points near 0, +-Q, +-2Q, then
    uniform draws on [-2pi, 2pi] (pairs for two-argument identities)."""
    arity = identity_arity(name)
    tbl = shared_table()
    q = tbl.q
    rng = random.Random(f"{seed}:{name}")
    special = [0.0, 1e-9, -1e-9, q, -q, q - 1e-9, q + 1e-9, 2 * q, -2 * q, 2 * q - 1e-12]
    two_pi = 2.0 * tbl.pi
    if arity == 1:
        samples = list(special)
        while len(samples) < n:
            samples.append(rng.uniform(-two_pi, two_pi))
    else:
        samples = [(a, b) for a, b in zip(special, reversed(special))]
        while len(samples) < n:
            samples.append((rng.uniform(-two_pi, two_pi), rng.uniform(-two_pi, two_pi)))
    return samples[:n]


def check_periodicity(n_samples, tol=1e-15):
    """Shift-by-one-period test on a uniform grid over [-10, 10].

    Checks |sin(x + 4Q) - sin(x)| against the combined certified bounds,
    and cosine through its translated form cos x = -sin(x - Q).  Returns
    a single IdentityCheck carrying the worst grid point.
    """
    tbl = shared_table()
    four_q, four_q_lo = tbl.four_q_dd
    # |fl(4Q) - 4Q| <= |lo| + dd residual
    shift_err = abs(four_q_lo) + tbl.four_q_err
    worst = None
    all_pass = True
    for i in range(n_samples):
        x = -10.0 + 20.0 * i / max(n_samples - 1, 1)
        s1 = _sin_at(x + four_q, tol, arg_err=shift_err)
        s0 = sin_eval(x, tol)
        c0 = cos_eval(x, tol)
        m0 = -_sin_at(x - tbl.q, tol, arg_err=tbl.q_float_err)
        for lhs, rhs in ((s1, s0), (c0, m0)):
            combined = lhs.abs_error_bound + rhs.abs_error_bound
            disc = abs(lhs.value - rhs.value)
            ok = disc <= combined + _slack(lhs.value, rhs.value)
            all_pass = all_pass and ok
            if worst is None or disc > worst[0]:
                worst = (disc, lhs.value, rhs.value, combined, x)
    _, lv, rv, cb, wx = worst
    return IdentityCheck("periodicity_4q", lv, rv, cb, all_pass, [wx])


def check_period_minimality(grid_size):
    """Sampled falsification witness that no 0 < R < Q gives cos 2R = +-1.

    On a strictly interior grid, certifies cos 2R away from both 1 and -1
    while sin R > 0 and cos R > 0 (the quantities a smaller period would
    force into contradiction).  A sampled check, not a proof.
    """
    if grid_size < 100:
        raise ValueError("grid_size must be >= 100")
    tbl = shared_table()
    q = tbl.q
    worst = None
    all_pass = True
    for j in range(1, grid_size + 1):
        r = q * j / (grid_size + 1)
        c2 = cos_eval(2.0 * r, 1e-15)
        s = sin_eval(r, 1e-15)
        c = cos_eval(r, 1e-15)
        dist = min(abs(c2.value - 1.0), abs(c2.value + 1.0))
        ok = (dist > c2.abs_error_bound
              and s.value > s.abs_error_bound
              and c.value > c.abs_error_bound)
        all_pass = all_pass and ok
        margin = dist - c2.abs_error_bound
        if worst is None or margin < worst[0]:
            nearest = 1.0 if abs(c2.value - 1.0) <= abs(c2.value + 1.0) else -1.0
            worst = (margin, c2.value, nearest, c2.abs_error_bound, r)
    _, lv, rv, cb, wr = worst
    return IdentityCheck("period_minimality", lv, rv, cb, all_pass, [wr])


# --- special angles ----------------------------------------------------

def _isqrt_fraction(fr, bits=240):
    """Floor-based rational square root, accurate to ~2**-bits relative.

    Uses only integer arithmetic (math.isqrt); independent of any libm
    routine.
    """
    if fr < 0:
        raise ValueError("negative radicand")
    n = fr.numerator * fr.denominator << (2 * bits)
    return Fraction(math.isqrt(n), fr.denominator << bits)


def solve_sine_cubic():
    """Roots of 4 s^3 - 3 s + 1 = 0 with multiplicities, exactly.

    Rational-root search (candidates +-1, +-1/2, +-1/4 from the leading
    and constant coefficients) followed by exact synthetic division.
    Returns [(root, multiplicity), ...] sorted by root: the single root
    -1 and the double root 1/2.
    """
    # ascending coefficients of 4s^3 - 3s + 1
    poly = [Fraction(1), Fraction(-3), Fraction(0), Fraction(4)]
    candidates = [Fraction(s, d) for d in (1, 2, 4) for s in (1, -1)]

    def eval_poly(p, s):
        acc = Fraction(0)
        for c in reversed(p):
            acc = acc * s + c
        return acc

    def deflate(p, root):
        # divide by (s - root); remainder must be zero
        out = []
        acc = Fraction(0)
        for c in reversed(p):
            acc = acc * root + c
            out.append(acc)
        assert out[-1] == 0
        return list(reversed(out[:-1]))

    roots = []
    for cand in candidates:
        mult = 0
        while len(poly) > 1 and eval_poly(poly, cand) == 0:
            poly = deflate(poly, cand)
            mult += 1
        if mult:
            roots.append((cand, mult))
    roots.sort(key=lambda rm: rm[0])
    return roots


@dataclass
class SpecialAngleEntry:
    label: str
    angle: float
    sin_exact: str
    cos_exact: str
    sin_value: float
    cos_value: float


@dataclass
class SpecialAngleTable:
    entries: list


def special_angles():
    """The sin/cos table at 0, pi/6, pi/4, pi/3, pi/2, derived without any
    platform trigonometry.

    sin(pi/4) comes from the reflection sin(pi/4) = cos(pi/4) combined
    with sin^2 + cos^2 = 1 (so 2 sin^2 = 1); sin(pi/6) is the root in
    (0, 1) of the triple-angle cubic 4s^3 - 3s + 1 = 0; cosines follow
    from sin^2 + cos^2 = 1 with the first-quadrant positive sign, and the
    pi/3 row is the pi/6 row reflected.
    """
    tbl = shared_table()
    q = tbl.q
    pi = tbl.pi

    # 1 = 2 sin^2(pi/4)  =>  sin(pi/4) = sqrt(1/2)
    s_pi4 = _isqrt_fraction(Fraction(1, 2))

    roots = solve_sine_cubic()
    in_unit = [r for r, _m in roots if 0 < r < 1]
    assert len(in_unit) == 1
    s_pi6 = in_unit[0]  # positive root; -1 is discarded as outside (0, 1)
    c_pi6 = _isqrt_fraction(1 - s_pi6 * s_pi6)

    zero_row = tbl.q_multiples[0]   # (0, sin 0, cos 0)
    q_row = tbl.q_multiples[1]      # (1, sin Q, cos Q)

    entries = [
        SpecialAngleEntry("0", 0.0, str(zero_row[1]), str(zero_row[2]),
                          float(zero_row[1]), float(zero_row[2])),
        SpecialAngleEntry("pi/6", pi / 6.0, "1/2", "sqrt(3)/2",
                          float(s_pi6), float(c_pi6)),
        SpecialAngleEntry("pi/4", pi / 4.0, "sqrt(2)/2", "sqrt(2)/2",
                          float(s_pi4), float(s_pi4)),
        SpecialAngleEntry("pi/3", pi / 3.0, "sqrt(3)/2", "1/2",
                          float(c_pi6), float(s_pi6)),
        SpecialAngleEntry("pi/2", q, str(q_row[1]), str(q_row[2]),
                          float(q_row[1]), float(q_row[2])),
    ]
    return SpecialAngleTable(entries)
