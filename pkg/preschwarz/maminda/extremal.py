import numpy as np

from analytic.series import PowerSeries
from core.exceptions import DomainError

from .classes import Family


def extremal_series(spec, n_terms=64):
    """Taylor series of the extremal function of the class, n_terms long.

    Starlike: f = z exp(integral of (phi(t) - 1)/t). Convex: the integral
    of the same exponential, so that z f' is the starlike extremal.
    """
    if n_terms < 2:
        raise DomainError('the series needs at least the terms z**0 and z**1')
    order = n_terms - 1
    s = spec.s
    h = np.zeros(order, dtype=np.complex128)
    if spec.family.is_hyperbolic:
        c = PowerSeries.binomial(s, order).coeffs
        h[1:] = c[1:] / np.arange(1, order)
    else:
        h[1:3] = [2 * s, s * s / 2][:order - 1]
    g = PowerSeries(h).exp()
    if spec.family.is_starlike:
        coeffs = np.concatenate(([0], g.coeffs))
    else:
        coeffs = g.integral().coeffs
    return PowerSeries(coeffs[:n_terms])
