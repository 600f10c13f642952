"""Complex gamma-family kernels.

The heavy lifting is delegated to :mod:`scipy.special`, which evaluates the
analytic continuation of ``log Gamma`` to roughly machine precision.  This
module adds the deterministic pole handling the rest of the package relies on.
"""

import math

import numpy as np
from scipy import special

from .errors import PoleError

POLE_THRESHOLD = 1e-14

__all__ = [
    "POLE_THRESHOLD",
    "log_gamma",
    "gamma",
    "reciprocal_gamma",
    "pochhammer",
    "gauss_multiplication_residual",
    "is_gamma_pole",
]


def is_gamma_pole(z, threshold=POLE_THRESHOLD):
    """Boolean mask: True where ``z`` lies within ``threshold`` of 0, -1, -2, ..."""
    z = np.asarray(z, dtype=complex)
    k = np.round(z.real)
    return (k <= 0) & (np.abs(z - k) < threshold)


def _check_poles(z):
    if np.any(is_gamma_pole(z)):
        raise PoleError(f"gamma pole at non-positive integer: {z}")


def log_gamma(z):
    """Principal branch of log Gamma(z) (continuous off the negative axis).

    Accepts scalars or arrays; scalars come back as Python complex.
    """
    _check_poles(z)
    out = special.loggamma(np.asarray(z, dtype=complex))
    return complex(out) if np.ndim(out) == 0 else out


def gamma(z):
    _check_poles(z)
    out = special.gamma(np.asarray(z, dtype=complex))
    return complex(out) if np.ndim(out) == 0 else out


def reciprocal_gamma(z):
    """1/Gamma(z); entire, exactly zero at the non-positive integers."""
    z = np.asarray(z, dtype=complex)
    out = special.rgamma(z)
    out = np.where(is_gamma_pole(z), 0.0, out)
    return complex(out) if np.ndim(out) == 0 else out


_DIRECT_LIMIT = 64


def pochhammer(a, n):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1)."""
    if n < 0 or int(n) != n:
        raise ValueError("pochhammer order must be a non-negative integer")
    n = int(n)
    a = complex(a)
    if n <= _DIRECT_LIMIT:
        out = 1.0 + 0j
        for j in range(n):
            out *= a + j
        return out
    if is_gamma_pole(a):
        k = -int(round(a.real))
        if n > k:
            return 0j
        out = 1.0 + 0j
        for j in range(n):
            out *= a + j
        return out
    return complex(np.exp(special.loggamma(a + n) - special.loggamma(a)))


def gauss_multiplication_residual(z, m):
    """Relative residual of the Gauss-Legendre multiplication formula.

    |Gamma(mz) - (2 pi)^((1-m)/2) m^(mz-1/2) prod_j Gamma(z + (j-1)/m)| / |Gamma(mz)|,
    evaluated in the log domain so large arguments do not overflow.
    """
    if m < 1 or int(m) != m:
        raise ValueError("m must be a positive integer")
    z = complex(z)
    shifts = z + np.arange(m) / m
    _check_poles(m * z)
    _check_poles(shifts)
    lhs = special.loggamma(m * z)
    rhs = (0.5 * (1 - m) * math.log(2 * math.pi) + (m * z - 0.5) * math.log(m)
           + special.loggamma(shifts).sum())
    # both sides are logs of the same number up to a multiple of 2 pi i
    return float(abs(np.expm1(rhs - lhs)))
