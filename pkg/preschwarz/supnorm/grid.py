import math
import re
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from core.exceptions import DomainError


MIN_NODES = 16
R_MAX_LIMIT = 1 - 1e-9

GRID_PATTERN = re.compile(r'^\s*(\d+)\s*[xX]\s*(\d+)\s*$')


@dataclass(frozen=True)
class GridSpec:
    n_radial: int
    n_angular: int
    r_max: float

    def __post_init__(self):
        if self.n_radial < MIN_NODES or self.n_angular < MIN_NODES:
            raise DomainError(
                f'grid needs at least {MIN_NODES} radial and angular nodes, '
                f'got {self.n_radial}x{self.n_angular}'
            )
        if not 0 < self.r_max <= R_MAX_LIMIT:
            raise DomainError(f'r_max must lie in (0, 1 - 1e-9], got {self.r_max}')

    @classmethod
    def default(cls, r_max=None):
        n_radial, n_angular = settings.PRESCHWARZ_GRID
        return cls(n_radial, n_angular, r_max or settings.PRESCHWARZ_R_MAX)

    @classmethod
    def parse(cls, text, r_max=None):
        """'RxA', e.g. '512x1024'."""
        match = GRID_PATTERN.match(text or '')
        if match is None:
            raise DomainError(f'grid must look like 512x1024, got {text!r}')
        return cls(
            int(match.group(1)), int(match.group(2)),
            r_max or settings.PRESCHWARZ_R_MAX,
        )

    def radii(self):
        """Nodes r_max (1 - (1 - i/n)**2), clustered toward the boundary."""
        u = np.arange(self.n_radial) / (self.n_radial - 1)
        radii = self.r_max * (1 - (1 - u) ** 2)
        radii[-1] = self.r_max
        return radii

    def angles(self, upper_half=False):
        """Nodes of (-pi, pi]; with upper_half only those in [0, pi].

        The angle 0 is a node whenever n_angular is even.
        """
        n = self.n_angular
        angles = math.pi * ((2 * np.arange(1, n + 1) - n) / n)
        if upper_half:
            angles = angles[angles >= 0]
        return angles
