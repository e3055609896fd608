"""Oscillating photon statistics of strongly squeezed coherent states.

For a displaced state with the large squeezing axis perpendicular to the
displacement (beta/sqrt(zeta) real), the photon distribution develops a
train of secondary maxima past the principal peak once |zeta| grows beyond
about 0.75. Sweep zeta and watch the structure appear.
"""

import numpy as np

from sqstates import StateLabel, mean_photon, photon_distribution


def secondary_maxima(probs, floor=1e-12):
    peak = int(np.argmax(probs))
    hits = [m for m in range(peak + 1, probs.size - 1)
            if probs[m] > floor and probs[m] > probs[m - 1] and probs[m] > probs[m + 1]]
    return hits


beta = 5.0
for zeta in (0.0, 0.4, 0.75, 0.85, 0.95):
    state = StateLabel(beta, 0, zeta)
    dist = photon_distribution(state)
    hits = secondary_maxima(dist.probs)
    print(f"zeta = {zeta:4.2f}:  mean N = {mean_photon(state):7.2f}, "
          f"cutoff {dist.cutoff:4d}, secondary maxima at m = {hits[:8]}"
          f"{' ...' if len(hits) > 8 else ''}")

print("\nprofile at zeta = 0.85 (log10 p_m, every 2nd m):")
dist = photon_distribution(StateLabel(beta, 0, 0.85))
for m in range(0, 90, 2):
    p = dist.probs[m]
    bar = "#" * max(0, int(12 + np.log10(p + 1e-300)))
    print(f"  m={m:3d}  {p:10.3e}  {bar}")
