"""Certified floating-point sine/cosine from their defining power series.

Evaluation pipeline: reduce |x| modulo the full period (double-double
constant from the constants module), pick the truncation order from the
requested tolerance, then run a Horner scheme in double-double
arithmetic.  The returned CertifiedValue carries a proven absolute error
bound: first-omitted-term remainder (valid once the alternating terms
decrease) + range-reduction error + a final-rounding allowance.

No platform trigonometric function appears anywhere in this call graph.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .doubledouble import dd_add, dd_from_fraction, dd_mul, two_prod
from .errors import DomainError, InvalidTolerance

_U = 2.0 ** -53          # unit roundoff of binary64
_MAX_ARG = 1.0e8         # beyond this, reduction accuracy is no longer certified
_SMALL_ARG = 3.0         # below this, no reduction is needed (< half period)
_MAX_TERMS = 32          # nonzero series terms; plenty for |reduced| <= pi
# absolute slop covering double-double accumulation and coefficient
# conversion residue; the true total is below 1e-29 for |reduced| <= pi
_DD_SLOP = 1.0e-27


@dataclass(frozen=True)
class CertifiedValue:
    """A binary64 value paired with a proven absolute error bound.

    The true mathematical quantity lies in
    [value - abs_error_bound, value + abs_error_bound] whenever the
    producing operation's preconditions held.
    """

    value: float
    abs_error_bound: float

    def __post_init__(self):
        if not (self.abs_error_bound >= 0.0 and math.isfinite(self.abs_error_bound)):
            raise ValueError("abs_error_bound must be finite and >= 0")

    # Interval-style propagation; each operation also accounts for its own
    # rounding so chained checks stay honest.
    def __add__(self, other):
        other = _as_cv(other)
        v = self.value + other.value
        b = self.abs_error_bound + other.abs_error_bound + _U * abs(v)
        return CertifiedValue(v, b)

    __radd__ = __add__

    def __neg__(self):
        return CertifiedValue(-self.value, self.abs_error_bound)

    def __sub__(self, other):
        return self + (-_as_cv(other))

    def __rsub__(self, other):
        return _as_cv(other) + (-self)

    def __mul__(self, other):
        other = _as_cv(other)
        v = self.value * other.value
        b = (abs(self.value) * other.abs_error_bound
             + abs(other.value) * self.abs_error_bound
             + self.abs_error_bound * other.abs_error_bound
             + _U * abs(v))
        return CertifiedValue(v, b)

    __rmul__ = __mul__

    @classmethod
    def exact(cls, v):
        return cls(float(v), 0.0)


def _as_cv(x):
    if isinstance(x, CertifiedValue):
        return x
    return CertifiedValue(float(x), 0.0)


@dataclass(frozen=True)
class SeriesCoefficients:
    """Power-series coefficients c_n generated by the defining recursion
    (n+2)(n+1) c_{n+2} + c_n = 0 from c_0 = 0, c_1 = 1."""

    coeffs: tuple

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]


def ode_coefficients(count):
    """First `count` coefficients from the recursion, all exact.

    c_0 = 0 and c_1 = 1 are the initial conditions; every later
    coefficient is c_{n+2} = -c_n / ((n+2)(n+1)).
    """
    if count < 2:
        raise ValueError("count must be >= 2")
    c = [Fraction(0), Fraction(1)]
    for n in range(count - 2):
        c.append(-c[n] / ((n + 2) * (n + 1)))
    return SeriesCoefficients(tuple(c))


def _sin_coeff(n):
    return Fraction((-1) ** n, math.factorial(2 * n + 1))


def _cos_coeff(n):
    return Fraction((-1) ** n, math.factorial(2 * n))


_SIN_DD = tuple(dd_from_fraction(_sin_coeff(n)) for n in range(_MAX_TERMS + 1))
_COS_DD = tuple(dd_from_fraction(_cos_coeff(n)) for n in range(_MAX_TERMS + 1))


def _check_tol(tol):
    if not (tol > 0.0) or not math.isfinite(tol):
        raise InvalidTolerance(f"tolerance must be positive and finite, got {tol!r}")


def _reduce(ax):
    """Map ax >= 0 into roughly [-half period, half period].

    Returns (r_dd, reduction_error): the reduced argument as a
    double-double and a certified bound on |(hi+lo) - (ax mod period)|.
    The subtraction ax - k*period is exact (Sterbenz) in its leading
    term; the only real error sources are the period constant itself and
    the final double-double additions.
    """
    if ax <= _SMALL_ARG:
        return (ax, 0.0), 0.0
    from . import constants  # deferred: constants builds on the exact evaluators

    tbl = constants.shared_table()
    hi, lo = tbl.four_q_dd
    k = float(math.floor(ax / hi + 0.5))
    if k == 0.0:
        return (ax, 0.0), 0.0
    p, pe = two_prod(k, hi)
    d = ax - p  # exact: p/2 <= ax <= 2p holds for every k >= 1
    q, qe = two_prod(k, lo)
    r = dd_add((d, 0.0), (-pe, 0.0))
    r = dd_add(r, (-q, -qe))
    red_err = k * tbl.four_q_err + 1.0e-29
    return r, red_err


def _plan_terms(r_abs, tol, odd):
    """Number of nonzero terms to keep and the first omitted term.

    Stops at the first k >= 1 with t_k <= tol/2 *and* the omitted terms
    decreasing from t_k on (the alternating-series remainder is only
    valid from that point).  t_k is the k-th nonzero term magnitude.
    """
    z = r_abs * r_abs
    half = 0.5 * tol
    t = r_abs if odd else 1.0  # t_0
    k = 0
    while True:
        den = (2 * k + 2) * (2 * k + 3) if odd else (2 * k + 1) * (2 * k + 2)
        if k >= 1 and t <= half and z <= den:
            return k, t
        if k >= _MAX_TERMS:
            return k, t  # honest (larger) bound; tol was below what is achievable
        t = t * z / den
        k += 1


def _horner_dd(r_dd, coeff_table, n_terms, odd):
    z = dd_mul(r_dd, r_dd)
    s = coeff_table[n_terms - 1]
    for j in range(n_terms - 2, -1, -1):
        s = dd_add(coeff_table[j], dd_mul(z, s))
    if odd:
        s = dd_mul(r_dd, s)
    return s[0]


def _eval_series(x, tol, odd):
    _check_tol(tol)
    x = float(x)
    if not math.isfinite(x) or abs(x) > _MAX_ARG:
        raise DomainError(f"|x| must be <= {_MAX_ARG:g} and finite, got {x!r}")
    sign = math.copysign(1.0, x) if odd else 1.0
    ax = abs(x)
    if ax == 0.0:
        return CertifiedValue(sign * 0.0, 0.0) if odd else CertifiedValue(1.0, 0.0)
    r_dd, red_err = _reduce(ax)
    n, t_omitted = _plan_terms(abs(r_dd[0]), tol, odd)
    val = _horner_dd(r_dd, _SIN_DD if odd else _COS_DD, n, odd)
    bound = t_omitted * (1.0 + 1.0e-12) + red_err + 2.0 * _U * abs(val) + _DD_SLOP
    return CertifiedValue(sign * val if odd else val, bound)


def sin_eval(x, tol):
    """Certified sine: Horner on the reduced argument, remainder-bounded.

    Raises DomainError for |x| > 1e8 (the reduction can no longer be
    certified to sub-tolerance accuracy) and InvalidTolerance for
    tol <= 0.  Requests below a few ulp of the result are satisfied
    best-effort: the honest, larger bound is reported.
    """
    return _eval_series(x, tol, odd=True)


def cos_eval(x, tol):
    """Certified cosine; same contract as sin_eval over the even series."""
    return _eval_series(x, tol, odd=False)


def _eval_series_exact(x, terms, odd):
    x = Fraction(x)
    if abs(x) > 4:
        raise DomainError("exact series evaluation requires |x| <= 4")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    x2 = x * x
    m = terms
    # extend until the omitted terms decrease, so the first-omitted-term
    # remainder bound actually applies
    while True:
        den = (2 * m + 2) * (2 * m + 3) if odd else (2 * m + 1) * (2 * m + 2)
        if x2 <= den:
            break
        m += 1
    s = Fraction(0)
    t = x if odd else Fraction(1)
    for n in range(m):
        s += t
        den = (2 * n + 2) * (2 * n + 3) if odd else (2 * n + 1) * (2 * n + 2)
        t = -t * x2 / den
    return s, abs(t)


def sin_eval_exact(x, terms):
    """Exact partial sum of `terms` nonzero sine terms plus the remainder
    bound |first omitted term|.

    If the omitted terms are not yet decreasing at the requested
    truncation, more terms are added internally so the bound is valid.
    Returns a pair of exact rationals (value, bound).
    """
    return _eval_series_exact(x, terms, odd=True)


def cos_eval_exact(x, terms):
    """Exact cosine partial sum; identical contract to sin_eval_exact."""
    return _eval_series_exact(x, terms, odd=False)
