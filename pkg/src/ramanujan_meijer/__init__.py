"""Meijer G-function series for Ramanujan-type Fourier cosine integrals.

The contour-integral Meijer G evaluator, hypergeometric and Fox-Wright series,
oscillatory quadrature oracles, the G-series representations and a
verification harness.
"""

from .errors import NumericsError
from .hyper import (FoxWrightSpec, PFqSpec, fox_wright_eval, mittag_leffler, pfq_eval,
                    wright_bessel, wright_phi)
from .meijerg import MeijerGSpec, cosine_rep, eval_contour
from .quadratures import (fourier_cosine_transform, laplace_sqrt_cos, ramanujan_ic,
                          ramanujan_rc, upsilon)
from .series import (GSeriesVariant, RamanujanParams, ThetaSequence, i_c, ic_star_series,
                     nabla_c, rc_series, tail_accelerate, xi_c)

__all__ = [
    "NumericsError",
    "FoxWrightSpec", "PFqSpec", "fox_wright_eval", "mittag_leffler", "pfq_eval",
    "wright_bessel", "wright_phi",
    "MeijerGSpec", "cosine_rep", "eval_contour",
    "fourier_cosine_transform", "laplace_sqrt_cos", "ramanujan_ic", "ramanujan_rc", "upsilon",
    "GSeriesVariant", "RamanujanParams", "ThetaSequence", "i_c", "ic_star_series", "nabla_c",
    "rc_series", "tail_accelerate", "xi_c",
]

__version__ = "0.1.0"
