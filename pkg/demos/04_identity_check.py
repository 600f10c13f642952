import math

from ramanujan_meijer.series import g_power_series
from ramanujan_meijer.verify import G_IDENTITIES, run_g_identity_suite

# nine sums of G-functions with claimed closed values
for rec in run_g_identity_suite():
    loc = rec.detail["localization"]
    print(f"{rec.id:13s} {rec.status.value}  lhs={rec.lhs:.12e}  rhs={rec.rhs:.12e}"
          f"  series-vs-R_C {loc['series_vs_closed_form']['status']}")

# The second one fails.  Its argument 64 pi^2 / s^4 belongs to n = 1, but the
# right-hand side is the n = 2 value.  With 256 pi^2 the sum matches:
ident = G_IDENTITIES[1]
fixed = g_power_series(ident.spec, 256 * math.pi ** 2, ident.power).value.real
print("\nwith argument 256 pi^2:", fixed, "claimed:", ident.rhs)
