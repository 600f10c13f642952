import math

import numpy as np

from ramanujan_meijer.quadratures import laplace_sqrt_cos, ramanujan_ic
from ramanujan_meijer.series import (GSeriesVariant, i_c, laplace_g_term, rc_series, tail_accelerate,
                                     kernel_form)

# every term of the series is a Laplace-cosine integral written as a G-function
v, y = 1.0, math.pi / 2
s = 2 * math.pi * np.arange(1, 6)
print("k   G-form              quadrature")
for k, (g, si) in enumerate(zip(laplace_g_term(GSeriesVariant.V1, v, y, s), s)):
    print(k, f"{g:.15e}", f"{laplace_sqrt_cos(v, si, y).value:.15e}")

form = kernel_form(GSeriesVariant.V5, v, y)
print("\nV5 uses", form.spec)

# With the binomial weights the terms only fall off like k^-(2v+1-lambda), so
# plain truncation stalls.  Watch truncation alone vs the zeta-tail fit.
exact = 1 / (4 * math.pi)          # R_C(0, 1/2)
form = kernel_form(GSeriesVariant.V1, 1.0, math.pi / 2)
k = np.arange(2001)
terms = form.terms(2 * math.pi * (1 + k))
for K in (100, 500, 2000):
    head = terms[: K + 1].sum()
    tail = tail_accelerate(terms[K // 2: K + 1], K // 2, [2, 3, 4, 5])
    print(f"K={K:5d}  truncated rel err {abs(head / exact - 1):.1e}   with tail {abs((head + tail.value) / exact - 1):.1e}"
          f"   fitted decay {tail.fitted_exponent:.3f}")

# a generic point, series against the defining integral
p = (2.3, 3.1, 1.7, 0.9)
print("\nI_C", p, "series", i_c(*p).value.real, "quadrature", ramanujan_ic(*p).value)

# all five variants of the R_C series
for var in GSeriesVariant:
    print(var.name, rc_series(1, 0.5, var).value.real, (13 - 4 * math.pi) / (8 * math.pi ** 2))
