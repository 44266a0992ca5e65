"""Error-free float transforms and minimal double-double arithmetic.

A double-double is an unevaluated pair (hi, lo) with hi = fl(hi + lo),
carrying roughly 106 bits of precision.  two_sum is Knuth's exact
addition; two_prod uses Dekker's splitting (no FMA required).  Only the
handful of operations needed for range reduction and series summation
are provided.
"""

from fractions import Fraction

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    """Exact addition: returns (s, e) with s = fl(a+b) and s + e = a + b."""
    s = a + b
    t = s - a
    e = (a - (s - t)) + (b - t)
    return s, e


def fast_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    e = b - (s - a)
    return s, e


def _split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a, b):
    """Exact multiplication: returns (p, e) with p = fl(a*b), p + e = a*b."""
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def dd_add(x, y):
    """Accurate double-double addition; relative error below 3*2**-106."""
    sh, sl = two_sum(x[0], y[0])
    th, tl = two_sum(x[1], y[1])
    sh, sl = fast_two_sum(sh, sl + th)
    return fast_two_sum(sh, sl + tl)


def dd_neg(x):
    return (-x[0], -x[1])


def dd_mul(x, y):
    """Double-double product; relative error below 7*2**-106."""
    ph, pl = two_prod(x[0], y[0])
    pl += x[0] * y[1] + x[1] * y[0]
    return fast_two_sum(ph, pl)


def dd_from_fraction(fr):
    """Round an exact rational to the nearest double-double pair."""
    hi = float(fr)
    lo = float(fr - Fraction(hi))
    return hi, lo
