"""Numerical suprema of weighted pre-Schwarzian functionals on the disk.

A polar grid locates the best node; golden-section passes in r and in
theta then polish it. The reported value is attained at the reported
point, so it never exceeds the true supremum.
"""
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from core.exceptions import DomainError, EvaluationError

from .grid import GridSpec


logger = logging.getLogger(__name__)

INV_GOLDEN = (math.sqrt(5) - 1) / 2
REFINE_TOL = 1e-10
REFINE_ROUNDS = 3
# Fixed chunk width: the grid is cut the same way for any thread count.
ANGULAR_CHUNK = 64


@dataclass(frozen=True)
class SupResult:
    value: float
    arg_r: float
    arg_theta: float
    refined: bool

    @property
    def argmax(self):
        return self.arg_r * complex(math.cos(self.arg_theta), math.sin(self.arg_theta))


def golden_section_max(fn, a, b, tol=REFINE_TOL):
    """Maximise a unimodal fn on [a, b]; returns (x, fn(x))."""
    if b < a:
        a, b = b, a
    best = max((fn(a), a), (fn(b), b))
    c = b - INV_GOLDEN * (b - a)
    d = a + INV_GOLDEN * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_GOLDEN * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_GOLDEN * (b - a)
            fd = fn(d)
    value, x = max(best, (fc, c), (fd, d))
    return x, value


def worker_count(threads=None):
    if threads is None:
        threads = settings.PRESCHWARZ_THREADS
    if threads < 0:
        raise DomainError('thread count must be >= 0')
    return threads or os.cpu_count() or 1


def norm_functional(field):
    """(1 - |z|**2)|P(z)|."""
    def functional(z):
        return (1 - np.abs(z) ** 2) * np.abs(np.asarray(field(z)))
    return functional


def becker_weight(field):
    """(1 - |z|**2)|z P(z)|."""
    def functional(z):
        return (1 - np.abs(z) ** 2) * np.abs(z * np.asarray(field(z)))
    return functional


def _located(exc, point, fallback):
    where = (
        f'r={abs(point):.6g}, theta={math.atan2(point.imag, point.real):.6g}'
        if point is not None else fallback
    )
    error = EvaluationError(f'{exc} [grid node {where}]')
    error.point = point
    return error


def _coarse_max(functional, radii, angles, threads):
    chunks = [
        slice(start, min(start + ANGULAR_CHUNK, angles.size))
        for start in range(0, angles.size, ANGULAR_CHUNK)
    ]

    def evaluate(chunk):
        z = radii[:, None] * np.exp(1j * angles[None, chunk])
        fallback = (
            f'r in [0, {radii[-1]:.6g}], theta in '
            f'[{angles[chunk][0]:.6g}, {angles[chunk][-1]:.6g}]'
        )
        try:
            values = np.asarray(functional(z), dtype=float)
        except (EvaluationError, DomainError) as exc:
            raise _located(exc, getattr(exc, 'point', None), fallback) from exc
        bad = ~np.isfinite(values)
        if np.any(bad):
            raise _located('non-finite value', complex(z[bad][0]), fallback)
        # row-major argmax: smallest r first, then smallest theta
        i, j = np.unravel_index(int(np.argmax(values)), values.shape)
        return float(values[i, j]), int(i), chunk.start + int(j)

    workers = min(worker_count(threads), len(chunks))
    if workers == 1:
        results = [evaluate(chunk) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(evaluate, chunks))
    return max(results, key=lambda item: (item[0], -item[1], -item[2]))


def _wrap_angle(theta):
    theta = math.remainder(theta, 2 * math.pi)
    return math.pi if theta <= -math.pi else theta


def _maximize(functional, radii, angles, threads=None, refine_theta=True):
    def at(r, theta):
        z = np.array([r * complex(math.cos(theta), math.sin(theta))])
        return float(np.asarray(functional(z))[0])

    coarse, i, j = _coarse_max(functional, radii, angles, threads)
    r, theta, best = float(radii[i]), float(angles[j]), coarse
    r_lo = float(radii[max(i - 1, 0)])
    r_hi = float(radii[min(i + 1, radii.size - 1)])
    step = float(np.min(np.diff(angles))) if angles.size > 1 else 0.0
    theta_lo, theta_hi = theta - step, theta + step

    for _ in range(REFINE_ROUNDS):
        improved = False
        x, value = golden_section_max(lambda rr: at(rr, theta), r_lo, r_hi)
        if value > best:
            r, best, improved = x, value, True
        if refine_theta and step > 0:
            x, value = golden_section_max(
                lambda tt: at(r, tt), theta_lo, theta_hi
            )
            if value > best:
                theta, best, improved = x, value, True
        if not improved:
            break

    logger.debug(
        'coarse %.12g at (%g, %g) -> %.12g at (%g, %g)',
        coarse, radii[i], angles[j], best, r, theta,
    )
    return SupResult(best, r, _wrap_angle(theta), best > coarse)


def sup_hyperbolic_norm(field, grid=None, threads=None, upper_half=False):
    """sup (1 - |z|**2)|P(z)| over the grid's disk |z| <= r_max.

    upper_half restricts theta to [0, pi], enough for real-symmetric fields.
    """
    grid = grid or GridSpec.default()
    return _maximize(
        norm_functional(field), grid.radii(), grid.angles(upper_half), threads,
    )


def sup_on_positive_axis(field, grid=None):
    grid = grid or GridSpec.default()
    return _maximize(
        norm_functional(field), grid.radii(), np.zeros(1), refine_theta=False,
    )


def becker_functional(field, grid=None, threads=None):
    """sup (1 - |z|**2)|z P(z)|; a value <= 1 certifies univalence."""
    grid = grid or GridSpec.default()
    return _maximize(becker_weight(field), grid.radii(), grid.angles(), threads)
