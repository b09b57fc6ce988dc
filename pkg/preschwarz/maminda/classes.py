import math
from dataclasses import dataclass

import numpy as np
from django.db import models

from analytic.functions import (
    as_complex_array, principal_arg, principal_pow, unwrap,
)
from core.exceptions import DomainError, SpecRangeError


# Correctly rounded 1/sqrt(2); 1 / math.sqrt(2) lands one ulp below.
LIMACON_S_MAX = math.sqrt(0.5)


class Family(models.TextChoices):
    STAR_HYP = 'shyp', 'starlike, hyperbola'
    STAR_LIMACON = 'sl', 'starlike, limacon'
    CONV_HYP = 'chyp', 'convex, hyperbola'
    CONV_LIMACON = 'cl', 'convex, limacon'

    @property
    def is_hyperbolic(self):
        return self in (Family.STAR_HYP, Family.CONV_HYP)

    @property
    def is_starlike(self):
        return self in (Family.STAR_HYP, Family.STAR_LIMACON)

    @property
    def s_max(self):
        return 1.0 if self.is_hyperbolic else LIMACON_S_MAX

    @property
    def s_range(self):
        return '0 < s <= 1' if self.is_hyperbolic else '0 < s <= 1/sqrt(2)'


@dataclass(frozen=True)
class ClassSpec:
    family: Family
    s: float

    def __post_init__(self):
        try:
            family = Family(self.family)
        except ValueError:
            codes = ', '.join(Family.values)
            raise SpecRangeError(
                f'unknown class {self.family!r}; expected one of {codes}'
            )
        s = float(self.s)
        if not math.isfinite(s) or not 0 < s <= family.s_max:
            raise SpecRangeError(
                f'class {family.value} needs {family.s_range}, got s={s!r}'
            )
        object.__setattr__(self, 'family', family)
        object.__setattr__(self, 's', s)

    def __str__(self):
        return f'{self.family.value} s={self.s:g}'

    @property
    def code(self):
        return self.family.value


def _check_disk(z):
    z = as_complex_array(z, 'z')
    if np.any(np.abs(z) >= 1):
        raise DomainError('z must lie in the open unit disk')
    return z


def phi(spec, z):
    """The Ma-Minda function of the class: (1-z)**(-s) or (1+sz)**2."""
    z = _check_disk(z)
    if spec.family.is_hyperbolic:
        return unwrap(np.asarray(principal_pow(1 - z, -spec.s)))
    return unwrap((1 + spec.s * z) ** 2)


def in_image(spec, w):
    """Whether w lies in the open region phi(D).

    The hyperbola region is the sector |arg w| < pi s/2 cut by
    |1 - w**(-1/s)| < 1; the limacon region is |sqrt(w) - 1| < s, which is
    a faithful inverse because the region stays in Re w > 0 for
    s <= 1/sqrt(2).
    """
    w = as_complex_array(w)
    s = spec.s
    if spec.family.is_hyperbolic:
        nonzero = w != 0
        safe = np.where(nonzero, w, 1)
        in_sector = np.abs(principal_arg(safe)) < math.pi * s / 2
        preimage = 1 - np.asarray(principal_pow(safe, -1 / s))
        inside = nonzero & in_sector & (np.abs(preimage) < 1)
    else:
        if s > LIMACON_S_MAX:
            raise SpecRangeError('the limacon test needs s <= 1/sqrt(2)')
        inside = np.abs(np.sqrt(w) - 1) < s
    return bool(inside) if np.ndim(inside) == 0 else inside
