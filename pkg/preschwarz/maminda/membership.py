"""Sampling test of the subordination zf'/f (or 1 + zf''/f') into phi(D).

Passing is a necessary condition only: the check sees a finite grid of a
truncated series.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from analytic.series import eval_series
from core.exceptions import DomainError, EvaluationError

from .classes import in_image
from .fields import CRITICAL_DERIVATIVE


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MembershipReport:
    spec: object
    radius_used: float
    samples: int
    inside: int
    first_outside: complex = None

    @property
    def fraction(self):
        return self.inside / self.samples

    @property
    def consistent(self):
        return self.inside == self.samples


def subordinate_values(series, spec, z):
    """zf'/f for starlike families, 1 + zf''/f' for convex ones."""
    first = series.derivative()
    if spec.family.is_starlike:
        numerator = np.asarray(eval_series(first, z))
        denominator = np.asarray(eval_series(series.quotient_by_z(), z))
        what = 'f(z)/z'
    else:
        numerator = z * np.asarray(eval_series(first.derivative(), z))
        denominator = np.asarray(eval_series(first, z))
        what = "f'"
    bad = np.abs(denominator) < CRITICAL_DERIVATIVE
    if np.any(bad):
        raise EvaluationError(f'{what} vanishes', z[bad].flat[0])
    values = numerator / denominator
    return values if spec.family.is_starlike else 1 + values


def sample_membership(series, spec, n_radial=64, n_angular=256, r_max=0.95):
    if not series.is_normalized:
        raise DomainError("the series must satisfy f(0) = 0, f'(0) = 1")
    if n_radial < 2 or n_angular < 1:
        raise DomainError('membership sampling needs a non-trivial grid')
    radius = min(float(r_max), series.radius_hint * (1 - 1e-9))
    radii = np.linspace(0, radius, n_radial)
    angles = -math.pi + 2 * math.pi * np.arange(1, n_angular + 1) / n_angular
    z = radii[:, None] * np.exp(1j * angles[None, :])

    inside = np.asarray(in_image(spec, subordinate_values(series, spec, z)))
    outside = z[~inside]
    first_outside = complex(outside.flat[0]) if outside.size else None
    report = MembershipReport(
        spec, radius, int(z.size), int(inside.sum()), first_outside,
    )
    logger.debug(
        'membership %s: %d/%d inside up to r=%g',
        spec, report.inside, report.samples, radius,
    )
    return report
