# Bounds on the Legendre ratio P_n'/P_n for t >= 1.
#
# Under t = (1 - 2X)/X' with X = x(1-x), F_n(x) = X'^n P_n(t), so any bound on
# P_n'/P_n becomes a bound on F_n'/F_n. Here we tabulate the bounds and find
# where the sharpest two swap order.

import math

import numpy as np

from kernel_entropy import legendre as lg

n = 3
print(" t      P'/P    lower   up(a)   up(b)   up(c, conditional)")
for t in np.linspace(1, 3, 9):
    t = float(t)
    cond = lg.ratio_upper_conditional(n, t) if t > 1 else float("nan")
    print(f"{t:4.2f} {lg.legendre_ratio(n, t):8.4f} {lg.ratio_lower_bound(n, t):8.4f} "
          f"{lg.ratio_upper_simple(n, t):8.4f} {lg.ratio_upper_refined(n, t):8.4f} {cond:8.4f}")

# The conditional bound beats the third one only up to t*.
for n in (1, 2, 5, 50):
    ts = lg.crossover_t(n)
    below = lg.ratio_upper_conditional(n, 1 + 0.5 * (ts - 1)) - lg.ratio_upper_refined(n, 1 + 0.5 * (ts - 1))
    above = lg.ratio_upper_conditional(n, 2 * ts) - lg.ratio_upper_refined(n, 2 * ts)
    print(f"n={n:2d}  t*={ts:.12f}  diff below {below:+.3e}  above {above:+.3e}")
print("5/sqrt(21) =", 5 / math.sqrt(21))

# Integrated forms bound P_n itself.
for n in (2, 6):
    for t in (1.0, 1.5, 4.0):
        print(f"n={n} t={t}: P={lg.legendre_p(n, t):10.4f}  bound={lg.poly_upper_sharp(n, t):10.4f}  "
              f"weaker={lg.poly_upper_simple(n, t):10.4f}")

# round trip: F_n through Legendre equals the direct sum
from kernel_entropy import OperatorParams, s_series
for x in (0.05, 0.2, 0.45):
    print(f"x={x}: F_8 direct {s_series(OperatorParams(8, -1), x):.15f}  via P_8 {lg.f_via_legendre(8, x):.15f}")
