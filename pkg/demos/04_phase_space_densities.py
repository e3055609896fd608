"""Wigner and Husimi portraits of the excited squeezed states.

The Wigner density of the n-th excitation reaches +-1/pi at the origin
(sign set by the parity of n, for any squeezing), while the Husimi density
stays within [0, 1/(2 pi)]; the squeezing only stretches the ellipse whose
axes come from the closed-form axis ratio.
"""

import numpy as np

from sqstates import StateLabel, grid_eval, husimi_q, squeeze_axes, wigner

zeta = 0.381966
xmax, xmin = squeeze_axes(zeta)
print(f"squeezing |zeta| = {zeta}: axes {xmax:.4f} x {xmin:.4f} "
      f"(ratio {xmax/xmin:.4f} = sqrt(5))\n")

print("origin values for n = 0..5 (hbar = 1):")
for n in range(6):
    s = StateLabel(0, n, zeta)
    print(f"  n={n}:  W(0,0) = {wigner(s, 0, 0):+.6f}   Q(0,0) = {husimi_q(s, 0, 0):.6f}")
print(f"  (+-1/pi = {1/np.pi:.6f}, 1/(2 pi) = {1/(2*np.pi):.6f})\n")

g = grid_eval(StateLabel(0, 1, zeta), "wigner", -3, 3, -3, 3, 61, 61)
vals = g.as_matrix()
print("ASCII Wigner portrait of the first excitation (rows = q, columns = p):")
levels = " .:-=+*%@"
lim = 1 / np.pi
for row in vals[::4]:
    line = "".join(levels[int((v + lim) / (2 * lim) * (len(levels) - 1))] for v in row[::2])
    print("  " + line)
print("\n(dark = negative region around the origin; the ellipse follows the axes above)")
