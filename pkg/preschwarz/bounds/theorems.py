"""Sharp upper bounds of the pre-Schwarzian norm over the four classes."""
import logging
from dataclasses import dataclass
from typing import Optional

from maminda.classes import ClassSpec, Family
from rootfind.equations import root_cl_closed
from rootfind.solver import RootResult, solve_critical

from .profiles import profile_chyp, profile_cl, profile_shyp, profile_sl


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormBound:
    spec: ClassSpec
    root: Optional[float]
    bound: float
    solution: Optional[RootResult] = None

    @property
    def sharp(self):
        # No extremal construction is known for the starlike limacon class.
        return self.spec.family != Family.STAR_LIMACON


def bound_shyp(s):
    spec = ClassSpec(Family.STAR_HYP, s)
    if spec.s == 1:
        return NormBound(spec, None, 4.0)
    solution = solve_critical(spec)
    t = solution.root
    return NormBound(spec, t, profile_shyp(spec.s, t), solution)


def bound_sl(s):
    spec = ClassSpec(Family.STAR_LIMACON, s)
    solution = solve_critical(spec)
    t = solution.root
    return NormBound(spec, t, profile_sl(spec.s, t), solution)


def bound_chyp(s):
    spec = ClassSpec(Family.CONV_HYP, s)
    if spec.s == 1:
        return NormBound(spec, None, 2.0)
    solution = solve_critical(spec)
    r = solution.root
    return NormBound(spec, r, profile_chyp(spec.s, r), solution)


def bound_cl(s):
    """The profile at the closed-form root.

    Equal to 2(q + 4)(3s**2 + 2q - 4)/(27s) with q = sqrt(3s**2 + 4), a
    form that cancels to nothing for small s.
    """
    spec = ClassSpec(Family.CONV_LIMACON, s)
    r = root_cl_closed(spec.s)
    return NormBound(spec, r, profile_cl(spec.s, r))


BOUNDS = {
    Family.STAR_HYP: bound_shyp,
    Family.STAR_LIMACON: bound_sl,
    Family.CONV_HYP: bound_chyp,
    Family.CONV_LIMACON: bound_cl,
}


def norm_bound(spec):
    result = BOUNDS[spec.family](spec.s)
    logger.debug('%s: bound %r (root %r)', spec, result.bound, result.root)
    return result
