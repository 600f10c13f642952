import math

from ramanujan_meijer.quadratures import ramanujan_rc, upsilon

# R_C(m, n) = int_0^inf x^m cos(pi n x) / (exp(2 pi sqrt x) - 1) dx
# Substituting x = t^2 turns the sqrt into ordinary exponential decay, and the
# chirp cos(pi n t^2) is integrated cell by cell between its zeros.
pi = math.pi
known = {
    (0, 0): 1 / 12,
    (0, 1): (2 - math.sqrt(2)) / 8,
    (0, 2): 1 / 16,
    (0, 0.5): 1 / (4 * pi),
    (1, 0.5): (13 - 4 * pi) / (8 * pi ** 2),
    (1, 2): (0.5 - 3 / pi + 5 / pi ** 2) / 64,
    (2, 2): (1 - 5 / pi + 5 / pi ** 2) / 256,
}
for (m, n), exact in known.items():
    res = ramanujan_rc(m, n)
    print(f"R_C({m},{n:<4}) = {res.value:+.15e}   closed form {exact:+.15e}   cells={res.cells}")

# note R_C(2,2) is negative: the closed form gives -3.318e-4

# the sine companion and the reciprocity that ties the two together
for n in (1, 2, 4):
    w = math.sqrt(2 / n) / n
    lhs = upsilon(n).value
    rhs = w * ramanujan_rc(0, 1 / n).value + ramanujan_rc(0, n).value
    print(f"Upsilon({n}) = {lhs:.15f}  via R_C: {rhs:.15f}")
