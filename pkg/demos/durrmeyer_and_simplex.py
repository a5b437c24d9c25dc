# Exact Durrmeyer coefficients and squared Bernstein sums in two variables.

from kernel_entropy import catalog, multivariate as mv
from kernel_entropy.verifier import scan_durrmeyer_convexity

# S_n of the Durrmeyer operator has Bernstein coefficients c_{n,k}, computed
# here as exact fractions.
for n in (1, 2, 3):
    seq = catalog.durrmeyer_coeffs(n)
    print(f"n={n}:", ", ".join(str(c) for c in seq.coeffs))
    print("     second differences:", ", ".join(str(d) for d in seq.second_differences()))

res = scan_durrmeyer_convexity(40)
print("Durrmeyer n<=40: negative second differences:", len(res.findings))

# On the triangle, R_n reduces to univariate sums along lines y = const.
p = mv.SimplexPoint(0.2, 0.3)
print("R_6 brute force:", mv.r_n(6, p), " via reduction:", mv.r_n_reduction(6, p))

# R_n is convex along every direction parallel to a side
print("axial violations, n=1..8:", sum(len(mv.axial_convexity_scan(n, 1 / 16)) for n in range(1, 9)))

# On the square the sum factorises, and three convexity statements agree.
print("Q_4(0.3, 0.8):", mv.q_n(4, 0.3, 0.8), mv.q_n_double_sum(4, 0.3, 0.8))
rep = mv.equivalence_check(4, 1 / 16)
print("log F convex, Q convex, log Q convex:", rep.verdicts, "consistent:", rep.consistent)
