class PreSchwarzError(Exception):
    """Every library error derives from this one."""


class DomainError(PreSchwarzError, ValueError):
    """An argument lies outside the domain of the operation."""


class SpecRangeError(PreSchwarzError, ValueError):
    """The class parameter s lies outside the family's range."""


class BracketError(PreSchwarzError, ArithmeticError):
    def __init__(self, lo, hi, f_lo, f_hi):
        self.lo, self.hi = lo, hi
        self.f_lo, self.f_hi = f_lo, f_hi
        super().__init__(
            f'no sign change on [{lo!r}, {hi!r}]: '
            f'f(lo)={f_lo!r}, f(hi)={f_hi!r} (need f(lo) > 0 > f(hi))'
        )


class EvaluationError(PreSchwarzError, ArithmeticError):
    def __init__(self, message, point=None):
        self.point = point
        if point is not None:
            message = f'{message} at z={complex(point)!r}'
        super().__init__(message)
