"""Plot-ready samples of the image-domain boundaries and critical graphs."""
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from core.exceptions import DomainError, SpecRangeError
from maminda.classes import ClassSpec, Family, LIMACON_S_MAX
from rootfind.solver import CRITICAL_EQUATIONS


logger = logging.getLogger(__name__)

# Hyperbola samples farther out than this are dropped.
MAX_MODULUS = 1e3
CURVE_EDGE = 1e-6


@dataclass(frozen=True, eq=False)
class CurveSamples:
    label: str
    points: np.ndarray
    columns: tuple = field(default=('x', 'y'))

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        if points.ndim != 2 or points.shape[1] != 2 or not len(points):
            raise DomainError('a curve needs a non-empty list of (x, y) points')
        if not np.all(np.isfinite(points)):
            raise DomainError(f'curve {self.label!r} has non-finite points')
        object.__setattr__(self, 'points', points)

    def __len__(self):
        return len(self.points)

    @property
    def xs(self):
        return self.points[:, 0]

    @property
    def ys(self):
        return self.points[:, 1]


def _check_count(n):
    if n < 2:
        raise DomainError(f'need at least 2 samples, got {n}')


def hyperbola_boundary(s, n):
    """w = r e^{i theta} with r = (2 cos(theta/s))**(-s), |theta| < pi s/2."""
    ClassSpec(Family.STAR_HYP, s)
    _check_count(n)
    half = math.pi * s / 2 - math.pi * s / (20 * n)
    # exact antisymmetry of the parameter gives an exactly symmetric curve
    theta = half * (2 * np.arange(n) - (n - 1)) / (n - 1)
    r = (2 * np.cos(theta / s)) ** (-s)
    keep = r <= MAX_MODULUS
    if not np.all(keep):
        logger.debug('hyperbola s=%g: dropped %d far samples', s, n - keep.sum())
    r, theta = r[keep], theta[keep]
    return CurveSamples(
        f'hyperbola s={s:g}',
        np.column_stack([r * np.cos(theta), r * np.sin(theta)]),
    )


def limacon_boundary(s, n):
    """phi(e^{it}) = (1 + s e^{it})**2 for t = 2 pi k/n."""
    if not 0 < s <= LIMACON_S_MAX:
        raise SpecRangeError(f'the limacon needs 0 < s <= 1/sqrt(2), got s={s!r}')
    _check_count(n)
    t = 2 * math.pi * np.arange(n) / n
    w = (1 + s * np.exp(1j * t)) ** 2
    return CurveSamples(
        f'limacon s={s:g}', np.column_stack([w.real, w.imag]),
    )


def limacon_residual(s, u, v):
    """((u-1)**2 + v**2 - s**4)**2 - 4 s**2 ((u - 1 + s**2)**2 + v**2)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    out = (
        ((u - 1) ** 2 + v ** 2 - s ** 4) ** 2
        - 4 * s * s * ((u - 1 + s * s) ** 2 + v ** 2)
    )
    return float(out) if out.ndim == 0 else out


def critical_curve(spec, n):
    if spec.family.is_hyperbolic and spec.s == 1:
        raise SpecRangeError(
            f'class {spec.code} at s=1 has no critical equation to plot'
        )
    _check_count(n)
    t = np.linspace(CURVE_EDGE, 1 - CURVE_EDGE, n)
    values = np.asarray(CRITICAL_EQUATIONS[spec.family](spec.s, t))
    return CurveSamples(
        f'critical {spec}', np.column_stack([t, values]), ('t', 'value'),
    )
