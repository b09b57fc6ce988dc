"""Truncated power series  f(z) = c0 + c1 z + c2 z**2 + ...

Coefficients are unknown beyond the stored order; ``radius_hint`` is the
radius inside which the truncation is trusted.
"""
import json
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial
from scipy import special

from core.exceptions import DomainError

from .functions import as_complex_array, unwrap


NORMALIZATION_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class PowerSeries:
    coeffs: np.ndarray
    radius_hint: float = 1.0

    def __post_init__(self):
        coeffs = as_complex_array(self.coeffs, 'coeffs').ravel().copy()
        if coeffs.size == 0:
            raise DomainError('a power series needs at least one coefficient')
        radius = float(self.radius_hint)
        if not 0 < radius <= 1:
            raise DomainError(f'radius_hint must lie in (0, 1], got {radius}')
        coeffs.flags.writeable = False
        object.__setattr__(self, 'coeffs', coeffs)
        object.__setattr__(self, 'radius_hint', radius)

    def __len__(self):
        return self.coeffs.size

    def __call__(self, z):
        return eval_series(self, z)

    def __repr__(self):
        return f'PowerSeries(order={len(self) - 1}, radius_hint={self.radius_hint})'

    @property
    def is_normalized(self):
        """f(0) = 0 and f'(0) = 1, the normalization of the class A."""
        c = self.coeffs
        return (
            c.size >= 2
            and abs(c[0]) <= NORMALIZATION_TOLERANCE
            and abs(c[1] - 1) <= NORMALIZATION_TOLERANCE
        )

    @classmethod
    def binomial(cls, s, n_terms=64):
        """(1 - z)**(-s) = sum of s(s+1)...(s+n-1)/n! z**n."""
        n = np.arange(n_terms)
        return cls(special.binom(s + n - 1, n))

    def derivative(self):
        return series_derivative(self)

    def integral(self):
        """Antiderivative vanishing at the origin."""
        return PowerSeries(polynomial.polyint(self.coeffs), self.radius_hint)

    def quotient_by_z(self):
        if abs(self.coeffs[0]) > NORMALIZATION_TOLERANCE:
            raise DomainError('f(z)/z needs f(0) = 0')
        tail = self.coeffs[1:] if len(self) > 1 else np.zeros(1)
        return PowerSeries(tail, self.radius_hint)

    def exp(self):
        """exp(h) for h(0) = 0, to the same order.

        Uses g' = h' g, i.e. n g_n = sum_{k=1..n} k h_k g_{n-k}.
        """
        h = self.coeffs
        if abs(h[0]) > NORMALIZATION_TOLERANCE:
            raise DomainError('exp is only expanded for series with h(0) = 0')
        g = np.zeros_like(h)
        g[0] = 1
        k_h = np.arange(h.size) * h
        for n in range(1, h.size):
            g[n] = np.dot(k_h[1:n + 1], g[n - 1::-1]) / n
        return PowerSeries(g, self.radius_hint)

    def tail_bound(self, r):
        """Geometric estimate of the neglected tail at |z| = r."""
        r = float(r)
        if not 0 <= r < 1:
            raise DomainError('tail bound needs 0 <= r < 1')
        return float(abs(self.coeffs[-1]) * r ** len(self) / (1 - r))

    @classmethod
    def from_json(cls, payload):
        """Build from ``{"coeffs": [[re, im], ...], "radius_hint": r}``."""
        if isinstance(payload, (str, bytes)):
            payload = json.loads(payload)
        if not isinstance(payload, dict) or 'coeffs' not in payload:
            raise DomainError('series JSON must be an object with "coeffs"')
        pairs = payload['coeffs']
        if not isinstance(pairs, list) or not pairs:
            raise DomainError('"coeffs" must be a non-empty list')
        values = []
        for index, pair in enumerate(pairs):
            if (
                not isinstance(pair, (list, tuple))
                or len(pair) != 2
                or not all(
                    isinstance(x, (int, float)) and not isinstance(x, bool)
                    for x in pair
                )
            ):
                raise DomainError(
                    f'coefficient {index} must be a [re, im] pair of numbers'
                )
            values.append(complex(pair[0], pair[1]))
        radius = payload.get('radius_hint', 1.0)
        if isinstance(radius, bool) or not isinstance(radius, (int, float)):
            raise DomainError('"radius_hint" must be a number')
        return cls(np.array(values), radius)

    def to_json(self):
        return {
            'coeffs': [[float(c.real), float(c.imag)] for c in self.coeffs],
            'radius_hint': self.radius_hint,
        }


def eval_series(f, z):
    """Horner evaluation of the truncated series at |z| < radius_hint."""
    z = as_complex_array(z, 'z')
    if np.any(np.abs(z) >= f.radius_hint):
        raise DomainError(
            f'|z| must stay below the series radius hint {f.radius_hint}'
        )
    return unwrap(polynomial.polyval(z, f.coeffs))


def series_derivative(f):
    if len(f) == 1:
        return PowerSeries(np.zeros(1), f.radius_hint)
    return PowerSeries(polynomial.polyder(f.coeffs), f.radius_hint)
