"""One-variable majorants whose maxima are the norm bounds.

Each is the estimate (1 - r**2)|P| along the diagonal |omega(z)| = |z| = t.
"""
import numpy as np


def _scalar(out):
    return float(out) if np.ndim(out) == 0 else out


def profile_chyp(s, r):
    r = np.asarray(r, dtype=float)
    return _scalar((1 - r) * (1 + r) * np.expm1(-s * np.log1p(-r)) / r)


def profile_shyp(s, t):
    t = np.asarray(t, dtype=float)
    return _scalar(s * (1 + t) + profile_chyp(s, t))


def profile_sl(s, t):
    t = np.asarray(t, dtype=float)
    return _scalar(
        2 * s * (1 - t) * (1 + t) / (1 - s * t)
        + (1 - t) * (1 + t) * (2 * s + s * s * t)
    )


def profile_cl(s, r):
    r = np.asarray(r, dtype=float)
    # ((1 + sr)**2 - 1)/r reduces to 2s + s**2 r
    return _scalar((1 - r) * (1 + r) * (2 * s + s * s * r))
