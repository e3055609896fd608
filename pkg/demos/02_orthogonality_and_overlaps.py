"""Biorthogonality and general scalar products.

Partners at opposite squeezing are exactly orthonormal, which is the point
of the family's normalization. General products between arbitrary members
come out of a single closed double-Hermite sum; here one is checked against
the dense Fock-space oracle.
"""

import numpy as np

from sqstates import StateLabel, overlap, oracle

beta, zeta = 1 + 2j, 0.5 * np.exp(0.9j)

print(f"<beta,m;-zeta | beta,n;zeta> for beta={beta}, zeta={zeta:.3f} (m,n <= 5):")
gram = np.empty((6, 6))
for m in range(6):
    for n in range(6):
        gram[m, n] = abs(overlap(StateLabel(beta, m, -zeta), StateLabel(beta, n, zeta)))
with np.printoptions(precision=3, suppress=True):
    print(gram)

a = StateLabel(0.3, 2, 0.2j)
b = StateLabel(1 - 0.4j, 3, 0.5)
closed = overlap(a, b)
dense = oracle.oracle_overlap(oracle.build_state(a, 256), oracle.build_state(b, 256))
print("\na general product, two ways:")
print(f"  closed form : {closed:.15f}")
print(f"  oracle      : {dense:.15f}")
print(f"  difference  : {abs(closed - dense):.2e}")
