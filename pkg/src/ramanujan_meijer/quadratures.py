"""Oscillatory quadrature oracle for the Fourier cosine integrals.

Every integral here has the shape int_0^inf f(x) trig(x y) dx with f decaying
like exp(-rate sqrt(x)).  After x = t^2 it becomes

    int_0^T 2 t f(t^2) trig(y t^2) dt,

a damped chirp.  [0, T] is cut at the zeros of trig(y t^2) (and additionally
into pieces no longer than the damping length) and each cell is integrated
with a fixed 15-point Gauss rule.  An algebraic singularity t^beta at the
origin is absorbed into a Gauss-Jacobi rule on the first cell.  The error
estimate is the sum over cells of |one panel - two half panels|.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special

from .errors import ParameterDomain, TruncationError

__all__ = [
    "QuadratureResult",
    "fourier_cosine_transform",
    "laplace_sqrt_cos",
    "ramanujan_rc",
    "upsilon",
    "ramanujan_ic",
    "chirp_integral",
]

ORDER = 15
RC_T_MAX = 20.0


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    cells: int


@lru_cache(maxsize=None)
def _legendre(order):
    x, w = special.roots_legendre(order)
    return x, w


@lru_cache(maxsize=64)
def _jacobi(order, beta):
    # weight (1 + x)^beta on [-1, 1]
    x, w = special.roots_jacobi(order, 0.0, beta)
    return x, w


def _cell_edges(y, t_max, kernel, max_len):
    """Zeros of trig(y t^2) in (0, t_max) merged with a uniform grid of spacing max_len."""
    edges = [np.array([0.0, t_max])]
    if y > 0:
        offset = 0.5 if kernel == "cos" else 1.0
        jmax = int(y * t_max * t_max / math.pi) + 2
        zeros = np.sqrt((np.arange(jmax) + offset) * math.pi / y)
        edges.append(zeros[zeros < t_max])
    nuni = int(math.ceil(t_max / max_len))
    edges.append(np.linspace(0.0, t_max, nuni + 1))
    e = np.unique(np.concatenate(edges))
    # drop slivers produced by near-coincident zeros and grid points
    keep = np.concatenate([[True], np.diff(e) > 1e-12 * t_max])
    return e[keep]


def _panel(g, beta, lo, hi, x, w):
    """Gauss-Legendre panels over [lo, hi] of t^beta g(t) trig, vectorized."""
    half = 0.5 * (hi - lo)
    t = (0.5 * (hi + lo))[:, None] + half[:, None] * x[None, :]
    vals = g(t)
    if beta != 0.0:
        vals = vals * t ** beta
    return (vals * w[None, :]).sum(axis=1) * half


def _first_panel(g, beta, hi, order):
    """int_0^hi t^beta g(t) dt with Gauss-Jacobi nodes."""
    x, w = _jacobi(order, beta)
    t = 0.5 * hi * (1 + x)
    return float((g(t) * w).sum() * (0.5 * hi) ** (beta + 1))


def chirp_integral(g, y, t_max, beta=0.0, kernel="cos", max_len=0.5, order=ORDER):
    """int_0^t_max t^beta g(t) trig(y t^2) dt for smooth vectorized ``g``.

    ``beta`` may be any real > -1; integer values >= 0 skip the Jacobi rule.
    """
    if beta <= -1:
        raise ParameterDomain("integrand singularity t^beta needs beta > -1")
    trig = np.cos if kernel == "cos" else np.sin

    def h(t):
        return g(t) * trig(y * t * t)

    edges = _cell_edges(y, t_max, kernel, max_len)
    lo, hi = edges[:-1], edges[1:]
    x, w = _legendre(order)
    smooth_origin = float(beta).is_integer() and beta >= 0
    if smooth_origin:
        coarse = _panel(h, beta, lo, hi, x, w)
        mid = 0.5 * (lo + hi)
        fine = _panel(h, beta, lo, mid, x, w) + _panel(h, beta, mid, hi, x, w)
    else:
        # cell 0 carries the singular weight; the rest are regular
        coarse = np.empty(lo.size)
        fine = np.empty(lo.size)
        coarse[0] = _first_panel(h, beta, hi[0], order)
        fine[0] = (_first_panel(h, beta, 0.5 * hi[0], order)
                   + _panel(h, beta, np.array([0.5 * hi[0]]), hi[:1], x, w)[0])
        if lo.size > 1:
            l1, h1 = lo[1:], hi[1:]
            m1 = 0.5 * (l1 + h1)
            coarse[1:] = _panel(h, beta, l1, h1, x, w)
            fine[1:] = _panel(h, beta, l1, m1, x, w) + _panel(h, beta, m1, h1, x, w)
    value = math.fsum(fine)
    err = float(np.abs(coarse - fine).sum())
    return QuadratureResult(value, err, int(lo.size))


def fourier_cosine_transform(f, y, decay_rate=1.0, x_power=0.0, t_max=None, tol=1e-13):
    """int_0^inf f(x) cos(x y) dx.

    ``f`` must be vectorized and decay at least like exp(-decay_rate sqrt(x));
    ``x_power`` declares f(x) ~ x^x_power near the origin (default: bounded).
    The integral is truncated at sqrt(x) = t_max, by default 45/decay_rate plus a
    margin; a :class:`TruncationError` is raised if the integrand is still
    significant there.
    """
    if not y > 0:
        raise ParameterDomain("transform variable y must be positive")
    if not decay_rate > 0:
        raise ParameterDomain("decay_rate must be positive")
    beta = 2.0 * x_power + 1.0
    if t_max is None:
        t_max = (45.0 + 4.0 * max(abs(x_power), 1.0)) / decay_rate

    def g(t):
        return 2.0 * t ** (1.0 - beta) * f(t * t)

    max_len = min(0.5, 2.0 / decay_rate)
    res = chirp_integral(g, y, t_max, beta=beta, max_len=max_len)
    edge = abs(2.0 * t_max * f(np.array([t_max * t_max]))[0]) * max_len
    if not np.isfinite(edge) or edge > tol * max(abs(res.value), 1e-300) and edge > 1e-300:
        raise TruncationError(f"integrand still {edge:.3g} at the truncation point t={t_max:.3g}")
    return res


def laplace_sqrt_cos(v, s, y, t_max=None):
    """int_0^inf x^(v-1) exp(-s sqrt(x)) cos(x y) dx for v, s, y > 0."""
    if not (v > 0 and s > 0 and y > 0):
        raise ParameterDomain("laplace_sqrt_cos needs v, s, y > 0")
    beta = 2.0 * v - 1.0
    if t_max is None:
        t_max = (45.0 + 4.0 * v) / s

    def g(t):
        return 2.0 * np.exp(-s * t)

    return chirp_integral(g, y, t_max, beta=beta, max_len=min(0.5, 2.0 / s))


def _bose(t):
    # t / (exp(2 pi t) - 1), smooth through the origin
    return t / np.expm1(2 * math.pi * t)


def ramanujan_rc(m, n, t_max=RC_T_MAX):
    """int_0^inf x^m cos(pi n x) / (exp(2 pi sqrt(x)) - 1) dx."""
    if m < 0 or int(m) != m:
        raise ParameterDomain("m must be a non-negative integer")
    if n < 0:
        raise ParameterDomain("n must be non-negative")

    def g(t):
        return 2.0 * _bose(t)

    return chirp_integral(g, math.pi * float(n), t_max, beta=2 * int(m), kernel="cos")


def ramanujan_ic(v, b, lam, y, t_max=None):
    """int_0^inf x^(v-1) (exp(b sqrt x) - 1)^-lambda cos(x y) dx, for v > lambda/2."""
    if not (b > 0 and lam > 0 and y >= 0):
        raise ParameterDomain("need b > 0, lambda > 0, y >= 0")
    if not 2.0 * v > lam:
        raise ParameterDomain("integral diverges at the origin unless v > lambda/2")
    beta = 2.0 * v - 1.0 - lam
    if t_max is None:
        t_max = (45.0 + 4.0 * v) / (lam * b)

    def g(t):
        return 2.0 * (t / np.expm1(b * t)) ** lam

    return chirp_integral(g, float(y), t_max, beta=beta, max_len=min(0.5, 2.0 / (lam * b)))


def upsilon(n, t_max=RC_T_MAX):
    """1/(2 pi n) + int_0^inf sin(pi n x) / (exp(2 pi sqrt(x)) - 1) dx."""
    if not n > 0:
        raise ParameterDomain("n must be positive")
    n = float(n)

    def g(t):
        return 2.0 * _bose(t)

    res = chirp_integral(g, math.pi * n, t_max, beta=0.0, kernel="sin")
    return QuadratureResult(1.0 / (2 * math.pi * n) + res.value, res.abs_error_estimate, res.cells)
