import numpy as np

from ramanujan_meijer.meijerg import cosine_rep, cosine_spec, eval_contour, plan_contour

# cos(z) has five Meijer G forms; each is evaluated here by integrating the
# Mellin-Barnes kernel numerically, not by a series
z = np.geomspace(0.05, 20, 100)
for variant in range(1, 6):
    spec = cosine_spec(variant)
    err = np.max(np.abs(cosine_rep(variant, z) - np.cos(z)))
    print(f"variant {variant}: G^{spec.m},{spec.n}_{spec.p},{spec.q}  kappa={spec.kappa:+.0f}  max|err|={err:.1e}")

# kappa = 0 for these, so the vertical line does not converge; the contour
# is bent to the right, where the gamma ratio decays
spec = cosine_spec(1)
plan = plan_contour(spec, (np.pi / 3) ** 2 / 4)
print("\ncontour for variant 1:", plan)
print("sqrt(pi) * G((pi/3)^2/4) =", np.sqrt(np.pi) * eval_contour(spec, (np.pi / 3) ** 2 / 4).real)
