"""Principal-branch elementary functions.

All functions accept a Python number or a numpy array and return the same
kind: a ``complex`` for scalar input, a complex128 array otherwise.
"""
import numpy as np

from core.exceptions import DomainError


def as_complex_array(w, name='w'):
    arr = np.asarray(w, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f'{name} must be finite')
    return arr


def unwrap(arr):
    if np.ndim(arr) == 0:
        return complex(arr)
    return arr


def principal_log(w):
    """log|w| + i arg w with arg in (-pi, pi]; log(1) = 0."""
    w = as_complex_array(w)
    if np.any(w == 0):
        raise DomainError('logarithm of zero')
    out = np.log(w)
    # numpy returns -pi on the negative axis when the imaginary part is -0.0
    on_cut = (w.imag == 0) & (w.real < 0)
    out = np.where(on_cut, out.real + 1j * np.pi, out)
    return unwrap(out)


def principal_pow(w, p):
    """w**p = exp(p log w) on the principal branch."""
    return unwrap(np.exp(float(p) * np.asarray(principal_log(w))))


def principal_arg(w):
    w = as_complex_array(w)
    out = np.angle(w)
    out = np.where((w.imag == 0) & (w.real < 0), np.pi, out)
    return float(out) if np.ndim(out) == 0 else out
