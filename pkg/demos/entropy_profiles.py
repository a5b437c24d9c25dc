# Energy, variance and the two order-2 entropies for a few operators.
#
# For a positive operator with weights a_k(x) the "energy" is S = sum a_k^2.
# -log S is the Renyi entropy, 1 - S the Tsallis entropy. Both move in the
# same direction as the variance, which is what the last block checks.

import numpy as np

from kernel_entropy import OperatorParams, s_series, variance, renyi_entropy
from kernel_entropy import catalog
from kernel_entropy.quadrature import s_integral

xs = np.linspace(0, 1, 11)

# Bernstein (c=-1), Szasz (c=0), Baskakov (c=1), all with n=10
for c in (-1, 0, 1):
    p = OperatorParams(10, c)
    S = np.array([s_series(p, x) for x in xs])
    print(f"c={c:+d}  S  ", np.array2string(S, precision=4))
    print(f"      V  ", np.array2string(np.array([variance(p, x) for x in xs]), precision=4))

# the series and the integral over [0, pi] are two independent routes to S
p = OperatorParams(25, 2)
for x in (0.1, 1.0, 3.0):
    a, b = s_series(p, x), s_integral(p, x)
    print(f"n=25 c=2 x={x}: series {a:.15f}  integral {b:.15f}  rel gap {abs(a-b)/a:.1e}")

# F_n is symmetric about 1/2 and minimal there; the Renyi entropy peaks at 1/2
F = OperatorParams(6, -1)
print("Renyi entropy of Bernstein n=6:", [round(renyi_entropy(s_series(F, x)), 4) for x in xs])

# other catalogued operators
for desc, window in [
    (catalog.OperatorDescriptor("kantorovich", n=4), (0, 1)),
    (catalog.OperatorDescriptor("durrmeyer", n=4), (0, 1)),
    (catalog.OperatorDescriptor("genuine_bd", n=4), (0, 1)),
    (catalog.OperatorDescriptor("post_widder", n=4), (0.5, 2)),
]:
    prof = catalog.profile(desc, *window, 5)
    print(f"{desc.label:22s} S={np.round(prof.column('S'), 4)}  V={np.round(prof.column('V'), 4)}")

# Gauss-Weierstrass: S and V do not depend on x. r = 1/(8 pi) gives S = 1
print("Gauss-Weierstrass r=1/(8pi):", catalog.gauss_weierstrass_sv(1 / (8 * np.pi)))

# synchronicity: variance and entropies increase and decrease together
from kernel_entropy.verifier import default_sync_families, scan_synchronicity, ScanConfig

res = scan_synchronicity(default_sync_families(ScanConfig()))
print("synchronicity disagreements:", len(res.violations), "over", res.counts["synchronicity"], "increments")
