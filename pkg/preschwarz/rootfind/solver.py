import logging
from dataclasses import dataclass

import numpy as np

from core.exceptions import BracketError, SpecRangeError
from maminda.classes import Family

from .equations import crit_chyp, crit_cl, crit_shyp, crit_sl


logger = logging.getLogger(__name__)

DEFAULT_BRACKET = (1e-9, 1 - 1e-9)
# The bracket grows toward these ends until the sign condition holds:
# the roots tend to 0 with s for the limacons and to 1 as s -> 1.
SMALLEST_LO = 1e-300
LARGEST_HI = float(np.nextafter(1.0, 0.0))
LO_SHRINK = 1e-3
HI_SHRINK = 0.1
XTOL = 1e-14
RESIDUAL_TOLERANCE = 1e-10
MAX_ITER = 200

CRITICAL_EQUATIONS = {
    Family.STAR_HYP: crit_shyp,
    Family.STAR_LIMACON: crit_sl,
    Family.CONV_HYP: crit_chyp,
    Family.CONV_LIMACON: crit_cl,
}


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int
    bracket_lo: float
    bracket_hi: float

    @property
    def width(self):
        return self.bracket_hi - self.bracket_lo


def solve_bracketed(fn, lo, hi, xtol=XTOL, max_iter=MAX_ITER):
    """Bisection for a function decreasing through zero on [lo, hi].

    xtol is scaled by the distance of the bracket to 0 and to 1, so roots
    crowding either end keep their significant digits.
    """
    if not lo < hi:
        raise BracketError(lo, hi, float('nan'), float('nan'))
    f_lo, f_hi = fn(lo), fn(hi)
    if not f_lo > 0 > f_hi:
        raise BracketError(lo, hi, f_lo, f_hi)

    iterations = 0
    while iterations < max_iter:
        if hi - lo <= xtol * min(1.0, abs(hi), abs(1 - lo)):
            break
        mid = lo + (hi - lo) / 2
        if not lo < mid < hi:
            break
        f_mid = fn(mid)
        iterations += 1
        if f_mid == 0:
            logger.debug('exact zero at %r after %d steps', mid, iterations)
            return RootResult(mid, 0.0, iterations, lo, hi)
        if f_mid > 0:
            lo = mid
        else:
            hi = mid

    root = lo + (hi - lo) / 2
    result = RootResult(root, float(fn(root)), iterations, lo, hi)
    if abs(result.residual) >= RESIDUAL_TOLERANCE:
        logger.warning(
            'root %r has residual %.3g after %d steps',
            root, result.residual, iterations,
        )
    return result


def widen_bracket(fn, lo, hi):
    """Move lo toward 0 and hi toward 1 until f(lo) > 0 > f(hi)."""
    while not fn(lo) > 0 and lo > SMALLEST_LO:
        lo = max(lo * LO_SHRINK, SMALLEST_LO)
    while not fn(hi) < 0 and hi < LARGEST_HI:
        hi = min(1 - (1 - hi) * HI_SHRINK, LARGEST_HI)
    return lo, hi


def solve_critical(spec):
    """The unique critical point of the class's one-variable estimate."""
    if spec.family.is_hyperbolic and spec.s == 1:
        raise SpecRangeError(
            f'class {spec.code} at s=1 has a closed-form bound '
            'and no critical point'
        )
    equation = CRITICAL_EQUATIONS[spec.family]

    def fn(t):
        return equation(spec.s, t)

    lo, hi = widen_bracket(fn, *DEFAULT_BRACKET)
    result = solve_bracketed(fn, lo, hi)
    logger.debug('%s: root %r in %d steps', spec, result.root, result.iterations)
    return result
