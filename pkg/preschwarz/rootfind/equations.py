"""Critical-point equations F'(t) = 0 of the four norm estimates.

Every function is vectorised over t and decreasing on (0, 1), with a
positive limit at 0 and a negative one at 1.
"""
import math

import numpy as np


def _pow_minus_one(s, t):
    """(1 - t)**(-s) - 1 without cancellation for small t."""
    return np.expm1(-s * np.log1p(-t))


def crit_chyp(s, r):
    """h_s(r), the derivative of (1 - r**2)((1 - r)**(-s) - 1)/r.

    Written in terms of E = (1 - r)**(-s) - 1 so that the limit
    s(s + 1)/2 at the origin survives rounding.
    """
    r = np.asarray(r, dtype=float)
    e = _pow_minus_one(s, r)
    inner = (1 + r) * s * r * (1 + e) - (1 - r * r) * e
    out = -2 * e + inner / (r * r)
    return float(out) if out.ndim == 0 else out


def crit_shyp(s, t):
    """F_s(t); it exceeds h_s(t) by exactly s."""
    return s + crit_chyp(s, t)


def crit_sl(s, t):
    """G_s(t), a quartic over (1 - st)**2."""
    t = np.asarray(t, dtype=float)
    s2, s3, s4 = s * s, s ** 3, s ** 4
    numerator = (
        -3 * s4 * t ** 4 + 2 * s3 * t ** 3 + (s4 + 7 * s2) * t ** 2
        - (2 * s3 + 8 * s) * t + 3 * s2
    )
    out = numerator / (1 - s * t) ** 2
    return float(out) if out.ndim == 0 else out


def crit_cl(s, r):
    r = np.asarray(r, dtype=float)
    out = s * s * (1 - 3 * r * r) - 4 * r * s
    return float(out) if out.ndim == 0 else out


def root_cl_closed(s):
    """(-2 + sqrt(3s**2 + 4))/(3s), rationalised to avoid cancellation."""
    return s / (2 + math.sqrt(3 * s * s + 4))


def concavity_hyp(s, t):
    """Second derivative of both hyperbolic profiles; never positive."""
    t = np.asarray(t, dtype=float)
    q = (1 - t) ** s
    numerator = (
        s * s * t ** 3 + s * s * t ** 2 - s * t ** 3 + s * t ** 2
        + 2 * t * q - 2 * q - 2 * s * t - 2 * t + 2
    )
    out = numerator / ((1 - t) ** (s + 1) * t ** 3)
    return float(out) if out.ndim == 0 else out


def concavity_sl(s, t):
    t = np.asarray(t, dtype=float)
    numerator = 2 * (
        3 * s ** 5 * t ** 4 - 7 * s ** 4 * t ** 3 + 3 * s ** 3 * t ** 2
        + 3 * s * s * t + 2 * s ** 3 - 4 * s
    )
    out = numerator / (1 - s * t) ** 3
    return float(out) if out.ndim == 0 else out


def concavity_cl(s, r):
    r = np.asarray(r, dtype=float)
    out = -2 * (3 * r * s * s + 2 * s)
    return float(out) if out.ndim == 0 else out
