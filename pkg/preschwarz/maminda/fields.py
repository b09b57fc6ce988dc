"""Pre-Schwarzian fields P = f''/f' evaluated pointwise on the disk."""
from dataclasses import dataclass
from typing import Callable

import numpy as np

from analytic.functions import as_complex_array, principal_pow, unwrap
from analytic.series import eval_series, series_derivative
from core.exceptions import DomainError, EvaluationError

from .classes import Family


# Below this radius the difference quotients switch to their Taylor
# polynomial; the direct form loses about |z|**-1 ulps near the origin.
TAYLOR_RADIUS = 1e-4

# |f'(z)| below this counts as a failure of local univalence.
CRITICAL_DERIVATIVE = 1e-13


@dataclass(frozen=True, eq=False)
class PreSchwarzianField:
    label: str
    evaluator: Callable[[np.ndarray], np.ndarray]
    # P(conj z) = conj P(z): the field comes from a real-coefficient f
    real_symmetric: bool = True

    def __call__(self, z):
        z = as_complex_array(z, 'z')
        return unwrap(np.asarray(self.evaluator(z), dtype=np.complex128))


def hyperbolic_quotient(z, s):
    """((1 - z)**(-s) - 1) / z, regular at the origin."""
    z = np.asarray(z, dtype=np.complex128)
    near_zero = np.abs(z) < TAYLOR_RADIUS
    safe = np.where(near_zero, 0.5, z)
    direct = (np.asarray(principal_pow(1 - safe, -s)) - 1) / safe
    taylor = s + s * (s + 1) / 2 * z + s * (s + 1) * (s + 2) / 6 * z ** 2
    return np.where(near_zero, taylor, direct)


def extremal_preschwarzian(spec):
    """P of the extremal function f_{s,k} (omega(z) = z in the subordination)."""
    s = spec.s
    family = spec.family

    if family == Family.STAR_HYP:
        def evaluator(z):
            return s / (1 - z) + hyperbolic_quotient(z, s)
    elif family == Family.STAR_LIMACON:
        def evaluator(z):
            # ((1 + sz)**2 - 1)/z reduces to 2s + s**2 z
            return 2 * s / (1 + s * z) + 2 * s + s * s * z
    elif family == Family.CONV_HYP:
        def evaluator(z):
            return hyperbolic_quotient(z, s)
    else:
        def evaluator(z):
            return 2 * s + s * s * z

    return PreSchwarzianField(f'extremal {spec}', evaluator)


def koebe_preschwarzian():
    """k(z) = z/(1-z)**2, the extremal function of the univalent class."""
    return PreSchwarzianField(
        'koebe', lambda z: 1 / (1 + z) + 3 / (1 - z)
    )


def zero_preschwarzian():
    return PreSchwarzianField('identity', lambda z: np.zeros_like(z))


def preschwarzian_of_series(f, label='series'):
    if not f.is_normalized:
        raise DomainError('the series must satisfy f(0) = 0, f\'(0) = 1')
    first = series_derivative(f)
    second = series_derivative(first)
    real_symmetric = bool(np.all(f.coeffs.imag == 0))

    def evaluator(z):
        fp = np.asarray(eval_series(first, z))
        small = np.abs(fp) < CRITICAL_DERIVATIVE
        if np.any(small):
            point = np.asarray(z)[small].flat[0] if np.ndim(z) else z
            raise EvaluationError("f' vanishes (not locally univalent)", point)
        return np.asarray(eval_series(second, z)) / fp

    return PreSchwarzianField(label, evaluator, real_symmetric)
